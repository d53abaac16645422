#ifndef OHK_ADJUNCTION_HPP
#define OHK_ADJUNCTION_HPP

#include "ohk/model.hpp"

namespace ohk {

/// A finite set-theoretic model: element labels plus one total operation
/// table per op, keyed by argument tuples of element indices.
struct SetModel {
    std::string name;
    TheoryPresentation theory;
    std::vector<std::string> elements;
    /// op name -> flat table indexed by encode_index(args, |elements|).
    std::map<std::string, std::vector<std::size_t>> op_tables;

    std::size_t size() const { return elements.size(); }
    std::size_t apply(const std::string& op,
                      const std::vector<std::size_t>& args) const;
    std::size_t eval(const Term& t, const std::vector<std::size_t>& env) const;
    std::size_t element_index(const std::string& label) const;
    void validate() const; // table shapes and ranges
};

/// Exhaustive verification of every equation over all assignments.
CheckReport check_set_model(const SetModel& s);

/// K[X]: the grouplike-basis coalgebra on the elements with pointwise
/// linearized operation tables.
TCoalgebraModel lift(const SetModel& s, Field f);

/// G(C): the set-model of grouplike elements. Throws
/// GrouplikeUnresolvedError when extraction fails over the field, and
/// reports closure failures as exceptions (ops of a verified model always
/// preserve grouplikes).
SetModel grouplike_model(const TCoalgebraModel& m);
/// The grouplikes in carrier order together with their labels.
std::vector<std::vector<Rat>> grouplike_vectors(const TCoalgebraModel& m);

/// Hom(K[X], C) against Hom(X, G(C)): enumerates theory-respecting
/// functions, lifts each through the grouplike basis, check_homs it, and
/// certifies that grouplike images pin down every lifted hom; both counts
/// are reported.
struct HomBijectionResult {
    std::size_t set_hom_count = 0;
    std::size_t lifted_hom_count = 0;
    CheckReport report;
};
HomBijectionResult hom_bijection_check(const SetModel& x, const TCoalgebraModel& c);

/// All theory homomorphisms between two finite set-models (brute force).
std::vector<std::vector<std::size_t>> set_homs(const SetModel& a, const SetModel& b);

/// Lemma "F continuous": the coalgebra equalizer of K[f], K[g] equals the
/// span of the basis vectors of the set equalizer {i | f(i) = g(i)}.
CheckReport equalizer_preservation_check(const std::vector<std::size_t>& f,
                                         const std::vector<std::size_t>& g,
                                         std::size_t codomain, Field field);

} // namespace ohk

#endif
