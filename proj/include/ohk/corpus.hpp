#ifndef OHK_CORPUS_HPP
#define OHK_CORPUS_HPP

#include "ohk/adjunction.hpp"

namespace ohk {

/// Z/n with the group ops, over the named builtin theory (Grp or Ab).
SetModel corpus_cyclic(std::size_t n, const std::string& theory_name = "Grp");

/// S3 as permutations of three points.
SetModel corpus_s3();

/// The trivial brace on a group: both operations coincide.
SetModel corpus_trivial_brace(const SetModel& grp);

/// The nontrivial skew brace of order 6: additive group Z/6, second
/// operation a o b = a + (-1)^a b with nonabelian multiplicative group.
SetModel corpus_skew_brace6();

/// F_2[x]/(x^2) with x primitive, as a Grp model.
TCoalgebraModel corpus_primitive_f2();

} // namespace ohk

#endif
