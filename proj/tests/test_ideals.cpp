#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ohk/ideals.hpp"

using namespace ohk;
using namespace ohk::fixtures;

namespace {

Subspace span_of(Field f, std::size_t ambient,
                 const std::vector<std::vector<Rat>>& rows) {
    return Subspace::from_rows(Matrix::from_rows(f, ambient, rows));
}

} // namespace

TEST_CASE("coideal predicate") {
    Field q = Field::Q();
    auto z2 = lift(set_cyclic(2), q);

    CHECK(is_coideal(z2, Subspace(q, 2)).ok);

    // The augmentation ideal A+ = ker eps is a coideal.
    Subspace aug = kernel_basis(z2.carrier.epsilon);
    CHECK(aug.dim() == 1);
    CHECK(aug.contains(std::vector<Rat>{Rat(1), Rat(-1)}));
    CHECK(is_coideal(z2, aug).ok);

    // span{e+g} has eps = 2, not a coideal over Q.
    Subspace bad = span_of(q, 2, {{Rat(1), Rat(1)}});
    auto w = is_coideal(z2, bad);
    CHECK_FALSE(w.ok);
    CHECK_FALSE(w.witness.empty());
}

TEST_CASE("t-ideal predicate and saturation") {
    Field q = Field::Q();
    auto z4 = lift(set_cyclic(4), q);

    Subspace zero(q, 4);
    CHECK(is_t_ideal(z4, zero).ok);
    CHECK(saturate_t_ideal(z4, zero) == zero);

    // span{e - g2} in K[Z/4] saturates to span{e-g2, g-g3}.
    Subspace gen = span_of(q, 4, {{Rat(1), Rat(0), Rat(-1), Rat(0)}});
    CHECK(is_coideal(z4, gen).ok);
    CHECK_FALSE(is_t_ideal(z4, gen).ok);
    Subspace sat = saturate_t_ideal(z4, gen);
    CHECK(sat.dim() == 2);
    CHECK(sat.contains(std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(-1)}));
    CHECK(is_t_ideal(z4, sat).ok);
    CHECK(is_coideal(z4, sat).ok);

    // Closure-operator laws.
    CHECK(saturate_t_ideal(z4, sat) == sat);
    CHECK(sat.contains(gen));

    // A+ of a group algebra is already a T-ideal.
    for (auto m : {lift(set_cyclic(3), q), lift(set_s3(), q)}) {
        Subspace aug = kernel_basis(m.carrier.epsilon);
        CHECK(is_t_ideal(m, aug).ok);
        CHECK(saturate_t_ideal(m, aug) == aug);
    }

    CHECK_THROWS_AS(
        saturate_t_ideal(z4, span_of(q, 4, {{Rat(1), Rat(0), Rat(0), Rat(0)}})),
        std::invalid_argument);
}

TEST_CASE("quotient models") {
    Field q = Field::Q();
    auto z4 = lift(set_cyclic(4), q);

    // Quotient by zero is an isomorphic copy.
    auto triv = quotient_model(z4, Subspace(q, 4));
    CHECK(triv.model.dim() == 4);
    CHECK(triv.projection.is_injective());
    CHECK(check_model(triv.model).ok());

    // K[Z/4] / span{e-g2, g-g3} is K[Z/2].
    Subspace gen = span_of(q, 4, {{Rat(1), Rat(0), Rat(-1), Rat(0)}});
    auto res = quotient_model(z4, saturate_t_ideal(z4, gen));
    CHECK(res.model.dim() == 2);
    CHECK(check_model(res.model).ok());
    CHECK(res.projection.verified);
    CHECK(grouplikes(res.model.carrier).size() == 2);

    // Projection precondition failures carry the offending slot.
    Subspace notideal = span_of(q, 4, {{Rat(1), Rat(0), Rat(-1), Rat(0)}});
    CHECK_THROWS_AS(quotient_model(z4, notideal), std::invalid_argument);
}

TEST_CASE("coequalizers") {
    Field q = Field::Q();
    auto z2 = lift(set_cyclic(2), q);

    auto id = identity_hom(z2);
    auto same = coequalizer(id, id);
    CHECK(same.model.dim() == 2);
    CHECK(same.projection.is_injective());

    // id against the zero morphism collapses everything: I = A+.
    auto res = coequalizer(id, zero_morphism(z2, z2));
    CHECK(res.model.dim() == 1);
    CHECK(check_model(res.model).ok());
}

TEST_CASE("BIB description of group-algebra saturation") {
    // In T_Grp the saturation of a hom-difference coideal equals the span
    // of b * i * b' over basis grouplikes (the two-sided ideal span).
    Field q = Field::Q();
    std::mt19937 rng(321);
    std::vector<SetModel> groups = {set_cyclic(2), set_cyclic(3), set_cyclic(4),
                                    set_cyclic(6), set_s3()};

    for (int trial = 0; trial < 5; ++trial) {
        const SetModel& a = groups[std::size_t(rng() % groups.size())];
        const SetModel& b = groups[std::size_t(rng() % groups.size())];
        auto ka = lift(a, q), kb = lift(b, q);
        auto homs = set_homs(a, b);
        const auto& f = homs[std::size_t(rng() % homs.size())];
        const auto& g = homs[std::size_t(rng() % homs.size())];
        auto hf = hom_from_set_map(ka, kb, f);
        auto hg = hom_from_set_map(ka, kb, g);
        REQUIRE(check_hom(hf).ok());
        REQUIRE(check_hom(hg).ok());

        Subspace i = Subspace::from_columns(hf.matrix - hg.matrix);
        Subspace sat = saturate_t_ideal(kb, i);

        // One round of two-sided multiplication: span{x * i * y}.
        const Matrix& mul = kb.op("mul");
        std::vector<std::vector<Rat>> gens;
        Matrix ib = i.basis();
        for (std::size_t r = 0; r < ib.rows(); ++r) {
            std::vector<Rat> v = ib.row_vec(r);
            for (std::size_t x = 0; x < kb.dim(); ++x) {
                // x * v
                std::vector<Rat> xv(kb.dim() * kb.dim());
                for (std::size_t t = 0; t < kb.dim(); ++t)
                    xv[x * kb.dim() + t] = v[t];
                std::vector<Rat> left = mul.mul_vec(xv);
                for (std::size_t y = 0; y < kb.dim(); ++y) {
                    std::vector<Rat> ly(kb.dim() * kb.dim());
                    for (std::size_t t = 0; t < kb.dim(); ++t)
                        ly[t * kb.dim() + y] = left[t];
                    gens.push_back(mul.mul_vec(ly));
                }
            }
        }
        Subspace bib = Subspace::from_rows(
            Matrix::from_rows(q, kb.dim(), gens));
        CHECK(sat == bib);
    }
}

TEST_CASE("cokernels") {
    Field q = Field::Q();
    auto z2 = lift(set_cyclic(2), q);
    auto z3 = lift(set_cyclic(3), q);

    auto c1 = cokernel(zero_morphism(z3, z2));
    CHECK(c1.model.dim() == 2);

    auto c2 = cokernel(identity_hom(z2));
    CHECK(c2.model.dim() == 1);

    // K[Z/3] included in K[S3] as the rotation subgroup: cokernel K[Z/2].
    auto s3 = lift(set_s3(), q);
    auto inc = hom_from_set_map(z3, s3, {0, 1, 2}, "z3->s3");
    REQUIRE(check_hom(inc).ok());
    auto c3 = cokernel(inc);
    CHECK(c3.model.dim() == 2);
    CHECK(check_model(c3.model).ok());
    CHECK(grouplikes(c3.model.carrier).size() == 2);
}

TEST_CASE("factor through") {
    Field q = Field::Q();
    auto z4 = lift(set_cyclic(4), q);
    auto h = z4_to_z2(q);
    REQUIRE(check_hom(h).ok());

    // h coequalizes (id, conjugation-by-g2 = translation action pair):
    // simplest exercise is the cokernel of the inclusion of the kernel.
    auto z2 = lift(set_cyclic(2), q);
    auto inc = hom_from_set_map(z2, z4, {0, 2}, "z2->z4");
    REQUIRE(check_hom(inc).ok());
    auto cok = cokernel(inc);
    CHECK(cok.model.dim() == 2);

    auto hbar = factor_through(cok.projection, h);
    CHECK(hbar.matrix * cok.projection.matrix == h.matrix);
    CHECK(hbar.verified);
    CHECK(hbar.is_injective());
    CHECK(hbar.is_surjective());

    // Factoring the projection through itself gives the identity.
    auto idq = factor_through(cok.projection, cok.projection);
    CHECK(idq.matrix == Matrix::identity(q, 2));

    // A map that does not kill the ideal is rejected.
    CHECK_THROWS_AS(factor_through(cok.projection, identity_hom(z4)),
                    std::invalid_argument);
}
