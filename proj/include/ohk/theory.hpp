#ifndef OHK_THEORY_HPP
#define OHK_THEORY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohk {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    std::size_t line, col;
};

struct OpSymbol {
    std::string name;
    std::size_t arity = 0;
    bool operator==(const OpSymbol& o) const {
        return name == o.name && arity == o.arity;
    }
};

/// A term over a signature: either a variable (index into a declared
/// variable list) or an operation applied to subterms.
class Term {
  public:
    static Term var(std::size_t index) {
        Term t;
        t.var_ = static_cast<long>(index);
        return t;
    }
    static Term apply(std::string op, std::vector<Term> args = {}) {
        Term t;
        t.op_ = std::move(op);
        t.args_ = std::move(args);
        return t;
    }

    bool is_var() const { return var_ >= 0; }
    std::size_t var_index() const { return static_cast<std::size_t>(var_); }
    const std::string& op() const { return op_; }
    const std::vector<Term>& args() const { return args_; }

    bool operator==(const Term& o) const {
        return var_ == o.var_ && op_ == o.op_ && args_ == o.args_;
    }
    bool operator!=(const Term& o) const { return !(*this == o); }

    std::size_t max_var() const; // largest variable index + 1, 0 if ground
    std::string print(const std::vector<std::string>& var_names) const;

  private:
    long var_ = -1;
    std::string op_;
    std::vector<Term> args_;
};

struct Equation {
    std::size_t nvars = 0;
    Term lhs, rhs;
    bool operator==(const Equation& o) const {
        return nvars == o.nvars && lhs == o.lhs && rhs == o.rhs;
    }
};

/// Designated group structure inside a presentation.
struct OmegaGroup {
    std::string mul, unit, antipode;
};

struct TheoryPresentation {
    std::string name;
    std::vector<OpSymbol> ops;
    std::vector<Equation> eqs;
    /// First entry is the designated structure for pointedness; theories
    /// like DiGrp/SKB carry a second one.
    std::vector<OmegaGroup> groups;

    bool has_omega_group() const { return !groups.empty(); }
    const OmegaGroup& omega_group() const { return groups.front(); }

    const OpSymbol* find_op(const std::string& name) const;
    const OpSymbol& op_or_throw(const std::string& name) const;
    void validate() const; // structural invariants

    bool operator==(const TheoryPresentation& o) const;
};

/// Status of the unit condition f(1,...,1) = 1 for one operation.
enum class UnitStatus { Present, DerivableByUnitRewriting, Unknown };

struct OmegaGroupReport {
    std::vector<std::pair<std::string, UnitStatus>> per_op;
    bool all_known() const {
        for (auto& [_, s] : per_op)
            if (s == UnitStatus::Unknown) return false;
        return true;
    }
};

struct TheoryMorphism {
    TheoryPresentation source, target;
    std::map<std::string, std::string> op_map;
};

struct MorphismReport {
    bool valid = false;
    bool surjective = false;
    std::vector<std::string> errors;
    /// Source equations (by index) not structurally present in the target
    /// after renaming; these must be checked model-level.
    std::vector<std::size_t> model_level_eqs;
};

TheoryPresentation parse_theory(const std::string& text);
std::string print_theory(const TheoryPresentation& t);

/// Canonical presentations: Mon, Grp, Ab, SKB, DiGrp, RadRng.
TheoryPresentation builtin_theory(const std::string& name);

OmegaGroupReport validate_omega_group(const TheoryPresentation& t);
MorphismReport check_morphism(const TheoryMorphism& m);

/// Identity-on-names morphism between presentations sharing op names.
TheoryMorphism identity_on_ops(const TheoryPresentation& s,
                               const TheoryPresentation& t);

Term rename_ops(const Term& t, const std::map<std::string, std::string>& op_map);

} // namespace ohk

#endif
