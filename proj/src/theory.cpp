#include "ohk/theory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ohk {

std::size_t Term::max_var() const {
    if (is_var()) return var_index() + 1;
    std::size_t m = 0;
    for (const Term& a : args_) m = std::max(m, a.max_var());
    return m;
}

std::string Term::print(const std::vector<std::string>& var_names) const {
    if (is_var()) return var_names.at(var_index());
    std::string s = op_ + "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) s += ", ";
        s += args_[i].print(var_names);
    }
    return s + ")";
}

const OpSymbol* TheoryPresentation::find_op(const std::string& name) const {
    for (const OpSymbol& o : ops)
        if (o.name == name) return &o;
    return nullptr;
}

const OpSymbol& TheoryPresentation::op_or_throw(const std::string& name) const {
    const OpSymbol* o = find_op(name);
    if (!o) throw std::invalid_argument("unknown operation: " + name);
    return *o;
}

namespace {

void validate_term(const TheoryPresentation& t, const Term& term, std::size_t nvars) {
    if (term.is_var()) {
        if (term.var_index() >= nvars)
            throw std::invalid_argument("variable index out of range");
        return;
    }
    const OpSymbol& op = t.op_or_throw(term.op());
    if (op.arity != term.args().size())
        throw std::invalid_argument("arity mismatch for " + op.name);
    for (const Term& a : term.args()) validate_term(t, a, nvars);
}

} // namespace

void TheoryPresentation::validate() const {
    std::set<std::string> names;
    for (const OpSymbol& o : ops)
        if (!names.insert(o.name).second)
            throw std::invalid_argument("duplicate op name: " + o.name);
    for (const Equation& e : eqs) {
        validate_term(*this, e.lhs, e.nvars);
        validate_term(*this, e.rhs, e.nvars);
    }
    for (const OmegaGroup& g : groups) {
        if (op_or_throw(g.mul).arity != 2 || op_or_throw(g.unit).arity != 0 ||
            op_or_throw(g.antipode).arity != 1)
            throw std::invalid_argument("group designation has wrong arities");
    }
}

bool TheoryPresentation::operator==(const TheoryPresentation& o) const {
    if (name != o.name || ops.size() != o.ops.size() || eqs.size() != o.eqs.size() ||
        groups.size() != o.groups.size())
        return false;
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (!(ops[i] == o.ops[i])) return false;
    for (std::size_t i = 0; i < eqs.size(); ++i)
        if (!(eqs[i] == o.eqs[i])) return false;
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (groups[i].mul != o.groups[i].mul || groups[i].unit != o.groups[i].unit ||
            groups[i].antipode != o.groups[i].antipode)
            return false;
    return true;
}

// ---------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line;

    std::size_t col() const {
        std::size_t c = 1;
        for (std::size_t i = pos; i > 0 && text[i - 1] != '\n'; --i) ++c;
        return c;
    }
    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", line, col());
        ++pos;
    }
    bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
               c == '\'';
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && is_ident_char(text[pos])) ++pos;
        if (pos == start) throw ParseError("expected identifier", line, col());
        return text.substr(start, pos - start);
    }
};

Term parse_term(Cursor& cur, const TheoryPresentation& th,
                std::vector<std::string>& vars, bool vars_fixed) {
    std::string id = cur.ident();
    if (cur.peek() == '(') {
        cur.expect('(');
        const OpSymbol* op = th.find_op(id);
        if (!op) throw ParseError("unknown operation: " + id, cur.line, cur.col());
        std::vector<Term> args;
        if (cur.peek() != ')') {
            args.push_back(parse_term(cur, th, vars, vars_fixed));
            while (cur.peek() == ',') {
                cur.expect(',');
                args.push_back(parse_term(cur, th, vars, vars_fixed));
            }
        }
        cur.expect(')');
        if (args.size() != op->arity)
            throw ParseError("arity mismatch for " + id + ": expected " +
                                 std::to_string(op->arity) + ", got " +
                                 std::to_string(args.size()),
                             cur.line, cur.col());
        return Term::apply(id, std::move(args));
    }
    // Bare identifier: a variable.
    auto it = std::find(vars.begin(), vars.end(), id);
    if (it != vars.end()) return Term::var(std::size_t(it - vars.begin()));
    if (vars_fixed)
        throw ParseError("unknown variable: " + id, cur.line, cur.col());
    vars.push_back(id);
    return Term::var(vars.size() - 1);
}

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

TheoryPresentation parse_theory(const std::string& text) {
    TheoryPresentation th;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool seen_header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "theory") {
            if (toks.size() != 2) throw ParseError("theory <Name>", lineno, 1);
            th.name = toks[1];
            seen_header = true;
        } else if (kw == "op") {
            if (toks.size() != 4 || toks[2] != ":")
                throw ParseError("op <name> : <arity>", lineno, 1);
            if (th.find_op(toks[1]))
                throw ParseError("duplicate op name: " + toks[1], lineno, 1);
            OpSymbol op;
            op.name = toks[1];
            try {
                op.arity = std::stoul(toks[3]);
            } catch (...) {
                throw ParseError("bad arity: " + toks[3], lineno, 1);
            }
            th.ops.push_back(op);
        } else if (kw == "eq") {
            std::string body = line.substr(line.find("eq") + 2);
            // Optional trailing "vars v1 v2 ..." clause.
            std::vector<std::string> declared_vars;
            bool vars_fixed = false;
            auto vpos = body.rfind(" vars ");
            if (vpos != std::string::npos) {
                auto vtoks = tokenize(body.substr(vpos + 6));
                if (!vtoks.empty()) {
                    declared_vars = vtoks;
                    vars_fixed = true;
                    body = body.substr(0, vpos);
                }
            }
            // Split a chain t1 = t2 [= t3 ...] on top-level '='.
            std::vector<std::string> sides;
            std::string cur_side;
            for (char c : body) {
                if (c == '=') {
                    sides.push_back(cur_side);
                    cur_side.clear();
                } else {
                    cur_side += c;
                }
            }
            sides.push_back(cur_side);
            if (sides.size() < 2)
                throw ParseError("eq needs at least two sides", lineno, 1);
            std::vector<Term> terms;
            for (const std::string& s : sides) {
                Cursor cur{s, 0, lineno};
                terms.push_back(parse_term(cur, th, declared_vars, vars_fixed));
                if (!cur.eof())
                    throw ParseError("trailing input after term", lineno, cur.col());
            }
            std::size_t nvars = declared_vars.size();
            // A chain expands to all unordered pairs of its sides.
            for (std::size_t i = 0; i < terms.size(); ++i)
                for (std::size_t j = i + 1; j < terms.size(); ++j)
                    th.eqs.push_back(Equation{nvars, terms[i], terms[j]});
        } else if (kw == "group") {
            if (toks.size() != 4)
                throw ParseError("group <mul> <unit> <antipode>", lineno, 1);
            th.groups.push_back(OmegaGroup{toks[1], toks[2], toks[3]});
        } else {
            throw ParseError("unknown directive: " + kw, lineno, 1);
        }
    }
    if (!seen_header) throw ParseError("missing 'theory <Name>' header", 1, 1);
    th.validate();
    return th;
}

std::string print_theory(const TheoryPresentation& t) {
    static const char* kVarNames[] = {"x", "y", "z", "w", "v", "r", "s", "t"};
    std::ostringstream out;
    out << "theory " << t.name << "\n";
    for (const OpSymbol& o : t.ops) out << "op " << o.name << " : " << o.arity << "\n";
    for (const Equation& e : t.eqs) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < e.nvars; ++i) names.push_back(kVarNames[i % 8]);
        out << "eq " << e.lhs.print(names) << " = " << e.rhs.print(names);
        if (e.nvars > 0) {
            out << " vars";
            for (const std::string& n : names) out << " " << n;
        }
        out << "\n";
    }
    for (const OmegaGroup& g : t.groups)
        out << "group " << g.mul << " " << g.unit << " " << g.antipode << "\n";
    return out.str();
}

// ---------------------------------------------------------------------
// Builtins

namespace {

Term V(std::size_t i) { return Term::var(i); }
Term A(const std::string& op, std::vector<Term> args = {}) {
    return Term::apply(op, std::move(args));
}

// Seven equations of a group structure: associativity plus the pairwise
// expansions of the two-sided unit and inverse laws.
void push_group_axioms(TheoryPresentation& th, const std::string& mul,
                       const std::string& unit, const std::string& inv) {
    Term x = V(0), y = V(1), z = V(2);
    Term e = A(unit);
    th.eqs.push_back({3, A(mul, {x, A(mul, {y, z})}), A(mul, {A(mul, {x, y}), z})});
    Term xu = A(mul, {x, e}), ux = A(mul, {e, x});
    th.eqs.push_back({1, xu, x});
    th.eqs.push_back({1, xu, ux});
    th.eqs.push_back({1, x, ux});
    Term xi = A(mul, {x, A(inv, {x})}), ix = A(mul, {A(inv, {x}), x});
    th.eqs.push_back({1, xi, e});
    th.eqs.push_back({1, xi, ix});
    th.eqs.push_back({1, e, ix});
    th.groups.push_back(OmegaGroup{mul, unit, inv});
}

} // namespace

TheoryPresentation builtin_theory(const std::string& name) {
    TheoryPresentation th;
    th.name = name;
    if (name == "Mon") {
        th.ops = {{"mul", 2}, {"one", 0}};
        Term x = V(0), y = V(1), z = V(2), e = A("one");
        th.eqs.push_back({3, A("mul", {x, A("mul", {y, z})}),
                          A("mul", {A("mul", {x, y}), z})});
        Term xu = A("mul", {x, e}), ux = A("mul", {e, x});
        th.eqs.push_back({1, xu, x});
        th.eqs.push_back({1, xu, ux});
        th.eqs.push_back({1, x, ux});
        th.validate();
        return th;
    }
    if (name == "Grp" || name == "Ab") {
        th.ops = {{"mul", 2}, {"one", 0}, {"inv", 1}};
        push_group_axioms(th, "mul", "one", "inv");
        if (name == "Ab")
            th.eqs.push_back({2, A("mul", {V(0), V(1)}), A("mul", {V(1), V(0)})});
        th.validate();
        return th;
    }
    if (name == "SKB" || name == "DiGrp" || name == "RadRng") {
        // Two group structures sharing the unit: "add" is the structure
        // whose linearization carries the antipode S of the compatibility
        // law, "mul" is the second one.
        th.ops = {{"add", 2}, {"neg", 1}, {"mul", 2}, {"inv", 1}, {"one", 0}};
        push_group_axioms(th, "add", "one", "neg");
        push_group_axioms(th, "mul", "one", "inv");
        Term a = V(0), b = V(1), c = V(2);
        if (name == "SKB" || name == "RadRng") {
            // a.(b+c) = a.b - a + a.c
            th.eqs.push_back(
                {3, A("mul", {a, A("add", {b, c})}),
                 A("add", {A("add", {A("mul", {a, b}), A("neg", {a})}),
                           A("mul", {a, c})})});
        }
        if (name == "RadRng") {
            // (a+b).c = a.c - c + b.c
            th.eqs.push_back(
                {3, A("mul", {A("add", {a, b}), c}),
                 A("add", {A("add", {A("mul", {a, c}), A("neg", {c})}),
                           A("mul", {b, c})})});
            // a+b = b+a
            th.eqs.push_back({2, A("add", {a, b}), A("add", {b, a})});
        }
        th.validate();
        return th;
    }
    throw std::invalid_argument("unknown builtin theory: " + name);
}

// ---------------------------------------------------------------------
// Unit-condition validation

namespace {

bool match(const Term& pattern, const Term& subject,
           std::map<std::size_t, Term>& bind) {
    if (pattern.is_var()) {
        auto it = bind.find(pattern.var_index());
        if (it == bind.end()) {
            bind.emplace(pattern.var_index(), subject);
            return true;
        }
        return it->second == subject;
    }
    if (subject.is_var() || subject.op() != pattern.op() ||
        subject.args().size() != pattern.args().size())
        return false;
    for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match(pattern.args()[i], subject.args()[i], bind)) return false;
    return true;
}

Term substitute(const Term& t, const std::map<std::size_t, Term>& bind) {
    if (t.is_var()) return bind.at(t.var_index());
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(substitute(a, bind));
    return Term::apply(t.op(), std::move(args));
}

struct Rule {
    Term lhs; // pattern (may contain variables)
    Term rhs;
};

// One bottom-up rewrite pass; returns true if anything changed.
bool rewrite_pass(Term& t, const std::vector<Rule>& rules) {
    bool changed = false;
    if (!t.is_var()) {
        std::vector<Term> args = t.args();
        for (Term& a : args)
            if (rewrite_pass(a, rules)) changed = true;
        if (changed) t = Term::apply(t.op(), std::move(args));
    }
    for (const Rule& r : rules) {
        std::map<std::size_t, Term> bind;
        if (match(r.lhs, t, bind)) {
            t = substitute(r.rhs, bind);
            return true;
        }
    }
    return changed;
}

Term normalize(Term t, const std::vector<Rule>& rules) {
    for (int step = 0; step < 64; ++step)
        if (!rewrite_pass(t, rules)) break;
    return t;
}

Term substitute_all_vars(const Term& t, const Term& value, std::size_t nvars) {
    std::map<std::size_t, Term> bind;
    for (std::size_t i = 0; i < nvars; ++i) bind.emplace(i, value);
    return substitute(t, bind);
}

} // namespace

OmegaGroupReport validate_omega_group(const TheoryPresentation& t) {
    if (!t.has_omega_group())
        throw std::invalid_argument("theory has no designated group structure");
    const Term unit = Term::apply(t.omega_group().unit);

    std::set<std::string> group_ops;
    for (const OmegaGroup& g : t.groups) {
        group_ops.insert(g.mul);
        group_ops.insert(g.unit);
        group_ops.insert(g.antipode);
    }

    // Unit-type axioms (one side a bare variable) become rewrite rules
    // oriented toward the variable.
    std::vector<Rule> rules;
    for (const Equation& e : t.eqs) {
        if (e.lhs.is_var() && !e.rhs.is_var()) rules.push_back({e.rhs, e.lhs});
        if (e.rhs.is_var() && !e.lhs.is_var()) rules.push_back({e.lhs, e.rhs});
    }
    // Ground facts: every axiom instantiated at the unit, normalized,
    // yields extra ground rules (e.g. inv(one()) -> one()). Saturate.
    for (int round = 0; round < 8; ++round) {
        bool grew = false;
        for (const Equation& e : t.eqs) {
            Term l = normalize(substitute_all_vars(e.lhs, unit, e.nvars), rules);
            Term r = normalize(substitute_all_vars(e.rhs, unit, e.nvars), rules);
            if (l == r) continue;
            // Orient the derived ground fact toward the unit side.
            Rule rule = (l == unit) ? Rule{r, l} : Rule{l, r};
            bool known = false;
            for (const Rule& existing : rules)
                if (existing.lhs == rule.lhs && existing.rhs == rule.rhs) known = true;
            if (!known) {
                rules.push_back(rule);
                grew = true;
            }
        }
        if (!grew) break;
    }

    OmegaGroupReport rep;
    for (const OpSymbol& op : t.ops) {
        if (group_ops.count(op.name)) {
            rep.per_op.emplace_back(op.name, UnitStatus::Present);
            continue;
        }
        Term goal = Term::apply(op.name, std::vector<Term>(op.arity, unit));
        bool present = false;
        for (const Equation& e : t.eqs)
            if ((e.lhs == goal && e.rhs == unit) || (e.rhs == goal && e.lhs == unit))
                present = true;
        if (present) {
            rep.per_op.emplace_back(op.name, UnitStatus::Present);
            continue;
        }
        Term norm = normalize(goal, rules);
        rep.per_op.emplace_back(op.name, norm == unit
                                             ? UnitStatus::DerivableByUnitRewriting
                                             : UnitStatus::Unknown);
    }
    return rep;
}

// ---------------------------------------------------------------------
// Theory morphisms

Term rename_ops(const Term& t, const std::map<std::string, std::string>& op_map) {
    if (t.is_var()) return t;
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(rename_ops(a, op_map));
    return Term::apply(op_map.at(t.op()), std::move(args));
}

MorphismReport check_morphism(const TheoryMorphism& m) {
    MorphismReport rep;
    for (const OpSymbol& op : m.source.ops) {
        auto it = m.op_map.find(op.name);
        if (it == m.op_map.end()) {
            rep.errors.push_back("unmapped op: " + op.name);
            continue;
        }
        const OpSymbol* target = m.target.find_op(it->second);
        if (!target) {
            rep.errors.push_back("op maps outside target: " + op.name);
            continue;
        }
        if (target->arity != op.arity)
            rep.errors.push_back("arity clash on " + op.name);
    }
    if (!rep.errors.empty()) return rep;
    rep.valid = true;

    std::set<std::string> hit;
    for (auto& [_, tgt] : m.op_map) hit.insert(tgt);
    rep.surjective = true;
    for (const OpSymbol& op : m.target.ops)
        if (!hit.count(op.name)) rep.surjective = false;

    for (std::size_t i = 0; i < m.source.eqs.size(); ++i) {
        const Equation& e = m.source.eqs[i];
        Equation renamed{e.nvars, rename_ops(e.lhs, m.op_map),
                         rename_ops(e.rhs, m.op_map)};
        bool found = false;
        for (const Equation& f : m.target.eqs) {
            if (f.nvars != renamed.nvars) continue;
            if ((f.lhs == renamed.lhs && f.rhs == renamed.rhs) ||
                (f.lhs == renamed.rhs && f.rhs == renamed.lhs))
                found = true;
        }
        if (!found) rep.model_level_eqs.push_back(i);
    }
    return rep;
}

TheoryMorphism identity_on_ops(const TheoryPresentation& s,
                               const TheoryPresentation& t) {
    TheoryMorphism m{s, t, {}};
    for (const OpSymbol& op : s.ops) m.op_map[op.name] = op.name;
    return m;
}

} // namespace ohk
