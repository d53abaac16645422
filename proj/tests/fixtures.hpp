#ifndef OHK_TESTS_FIXTURES_HPP
#define OHK_TESTS_FIXTURES_HPP

#include "ohk/corpus.hpp"
#include "ohk/model.hpp"

namespace ohk::fixtures {

inline SetModel set_cyclic(std::size_t n, const std::string& theory_name = "Grp") {
    return corpus_cyclic(n, theory_name);
}

inline SetModel set_s3() { return corpus_s3(); }

inline SetModel set_trivial_brace(const SetModel& grp) { return corpus_trivial_brace(grp); }

inline SetModel set_skew_brace6() { return corpus_skew_brace6(); }

inline TCoalgebraModel primitive_f2_model() { return corpus_primitive_f2(); }

/// The lifted hom induced by a set map (not necessarily a homomorphism).
inline ModelHom hom_from_set_map(const TCoalgebraModel& a, const TCoalgebraModel& b,
                                 const std::vector<std::size_t>& map,
                                 const std::string& name = "hom") {
    Matrix m(a.field(), b.dim(), a.dim());
    for (std::size_t j = 0; j < map.size(); ++j) m.set(map[j], j, Rat(1));
    return ModelHom{name, a, b, std::move(m)};
}

/// K[Z/4] -> K[Z/2] from the mod-2 surjection.
inline ModelHom z4_to_z2(Field f) {
    auto a = lift(set_cyclic(4), f);
    auto b = lift(set_cyclic(2), f);
    return hom_from_set_map(a, b, {0, 1, 0, 1}, "z4->z2");
}

} // namespace ohk::fixtures

#endif
