#ifndef OHK_MODEL_HPP
#define OHK_MODEL_HPP

#include <map>
#include <string>

#include "ohk/coalgebra.hpp"
#include "ohk/theory.hpp"

namespace ohk {

/// A coalgebraic model of a theory: a cocommutative coalgebra carrier
/// plus one dim x dim^arity matrix per operation symbol (dim x 1 for
/// nullary operations).
struct TCoalgebraModel {
    std::string name;
    TheoryPresentation theory;
    Coalgebra carrier;
    std::map<std::string, Matrix> op_matrices;

    const Field& field() const { return carrier.field(); }
    std::size_t dim() const { return carrier.dim; }

    const Matrix& op(const std::string& op_name) const;
    /// The designated group unit as a dim x 1 matrix.
    Matrix unit_matrix() const;
    /// Structural shape validation; semantic checks live in check_model.
    void validate() const;
};

/// A linear map between carriers of two models over the same theory,
/// claimed to be a morphism of models; check_hom sets the flag.
struct ModelHom {
    std::string name;
    TCoalgebraModel source, target;
    Matrix matrix;
    bool verified = false;

    bool is_surjective() const { return matrix.rank() == target.dim(); }
    bool is_injective() const { return matrix.rank() == source.dim(); }
};

/// The linearized term l_n(t): a dim x dim^n matrix.
Matrix linearize(const TCoalgebraModel& m, const Term& t, std::size_t nvars);

/// Carrier axioms, coalgebra-morphism property of every operation, the
/// unit condition f(1,...,1) = 1 when a group structure is designated,
/// and every theory equation in linearized form.
CheckReport check_model(const TCoalgebraModel& m);

/// Coalgebra-morphism conditions plus commutation with every operation;
/// sets h.verified on success.
CheckReport check_hom(ModelHom& h);
CheckReport check_hom(ModelHom&& h);

ModelHom identity_hom(const TCoalgebraModel& a);
/// u_B o eps_A; needs a designated group structure for the unit.
ModelHom zero_morphism(const TCoalgebraModel& a, const TCoalgebraModel& b);
/// g after f.
ModelHom compose(const ModelHom& g, const ModelHom& f);

} // namespace ohk

#endif
