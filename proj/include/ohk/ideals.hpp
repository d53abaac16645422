#ifndef OHK_IDEALS_HPP
#define OHK_IDEALS_HPP

#include "ohk/model.hpp"

namespace ohk {

struct CoidealWitness {
    bool ok = false;
    std::string witness; // violating generator or slot description
};

/// Delta(I) inside I (x) A + A (x) I and eps(I) = 0.
CoidealWitness is_coideal(const TCoalgebraModel& m, const Subspace& s);

/// Absorption in every slot of every operation of arity >= 1.
CoidealWitness is_t_ideal(const TCoalgebraModel& m, const Subspace& s);

/// Least T-ideal containing the coideal i, by the slotwise span fixpoint;
/// the result is again a coideal. Rejects non-coideal input.
Subspace saturate_t_ideal(const TCoalgebraModel& m, const Subspace& i);

struct QuotientResult {
    TCoalgebraModel model;
    ModelHom projection; // verified on construction
    Subspace ideal;      // the subspace actually quotiented by
};

/// A/I for a subspace that is both a coideal and a T-ideal;
/// well-definedness of the induced structure is certified, and the
/// projection passes check_hom.
QuotientResult quotient_model(const TCoalgebraModel& m, const Subspace& i);

/// Coequalizer of a parallel pair: quotient of the common target by the
/// saturation of the column span of f - g.
QuotientResult coequalizer(const ModelHom& f, const ModelHom& g);

/// Quotient of the target by the saturation of f[A]+ = im f of ker eps.
QuotientResult cokernel(const ModelHom& f);

/// Unique h-bar with h-bar o q = h, for a surjective projection q killed
/// by h on its kernel; throws with a witness vector otherwise.
ModelHom factor_through(const ModelHom& q, const ModelHom& h);

} // namespace ohk

#endif
