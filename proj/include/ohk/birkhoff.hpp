#ifndef OHK_BIRKHOFF_HPP
#define OHK_BIRKHOFF_HPP

#include "ohk/ideals.hpp"

namespace ohk {

/// The extra axioms a surjective theory morphism imposes, pulled back to
/// source terms along a deterministic choice of op preimages.
std::vector<Equation> extra_axioms(const TheoryMorphism& r);

struct ReflectionResult {
    TCoalgebraModel reflected;      // over the target theory
    ModelHom unit;                  // the projection, over the source theory
    Subspace generating_coideal;    // span of the linearized axiom gaps
    std::vector<Equation> extra;    // pulled-back extra axioms
};

/// Reflection along a surjective theory morphism: quotient by the
/// saturation of the span of linearize(t_i) - linearize(s_i) columns over
/// all extra axioms t_i = s_i.
ReflectionResult reflect(const TCoalgebraModel& m, const TheoryMorphism& r);

/// The linearized radicalator of a Hopf brace: the coideal generated by
/// a.b - b.a and (a.b)*c - (a*c1).S(c2).(b*c3).
Subspace radicalator_coideal(const TCoalgebraModel& m);

/// Unique factorization of h through the reflection unit; the target must
/// satisfy the extra axioms.
ModelHom reflect_factor(const ReflectionResult& res, const ModelHom& h);

/// Quotients of models satisfying the target theory satisfy it too.
CheckReport birkhoff_closure_check(const TheoryMorphism& r, const ModelHom& q);

} // namespace ohk

#endif
