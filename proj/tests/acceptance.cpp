// Acceptance gate: one pass/fail line per criterion; exit 0 iff all pass.
#include <functional>
#include <iostream>
#include <random>

#include "fixtures.hpp"
#include "ohk/birkhoff.hpp"
#include "ohk/cat.hpp"
#include "ohk/io.hpp"

using namespace ohk;
using namespace ohk::fixtures;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << n << ". " << name;
    if (!err.empty()) std::cout << "  [exception: " << err << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::vector<TCoalgebraModel> corpus_models(Field q) {
    std::vector<TCoalgebraModel> ms;
    SetModel one = corpus_cyclic(1);
    one.name = "K";
    ms.push_back(lift(one, q));
    ms.push_back(lift(one, Field::Fp(2)));
    for (std::size_t n = 2; n <= 6; ++n) ms.push_back(lift(corpus_cyclic(n), q));
    ms.push_back(lift(corpus_s3(), q));
    ms.push_back(lift(corpus_trivial_brace(corpus_cyclic(3)), q));
    ms.push_back(lift(corpus_trivial_brace(corpus_s3()), q));
    ms.push_back(lift(corpus_skew_brace6(), q));
    ms.push_back(primitive_f2_model());
    return ms;
}

std::vector<ModelHom> corpus_homs(Field q) {
    auto kz2 = lift(corpus_cyclic(2), q);
    auto kz3 = lift(corpus_cyclic(3), q);
    auto ks3 = lift(corpus_s3(), q);
    auto tz2 = lift(corpus_trivial_brace(corpus_cyclic(2)), q);
    auto b6 = lift(corpus_skew_brace6(), q);
    std::vector<ModelHom> hs;
    hs.push_back(z4_to_z2(q));
    hs.push_back(z4_to_z2(Field::Fp(2)));
    hs.push_back(hom_from_set_map(ks3, kz2, {0, 0, 0, 1, 1, 1}, "sign"));
    hs.push_back(hom_from_set_map(kz3, ks3, {0, 1, 2}, "k"));
    hs.push_back(hom_from_set_map(kz2, ks3, {0, 3}, "s"));
    hs.push_back(hom_from_set_map(b6, tz2, {0, 1, 0, 1, 0, 1}, "parity"));
    hs.push_back(identity_hom(ks3));
    hs.push_back(zero_morphism(kz3, kz2));
    return hs;
}

SplitDiagram s3_split_diagram(Field fd) {
    auto z3 = lift(corpus_cyclic(3), fd);
    auto s3 = lift(corpus_s3(), fd);
    auto z2 = lift(corpus_cyclic(2), fd);
    const auto& mul = corpus_s3().op_tables.at("mul");
    auto k = hom_from_set_map(z3, s3, {0, 1, 2}, "k");
    auto p = hom_from_set_map(s3, z2, {0, 0, 0, 1, 1, 1}, "p");
    auto s = hom_from_set_map(z2, s3, {0, 3}, "s");
    SplitDiagram d{k, p, s, k, p, s,
                   identity_hom(z3), identity_hom(s3), identity_hom(z2)};
    // Conjugation by a transposition upstairs, inversion on the kernel.
    std::vector<std::size_t> conj(6);
    for (std::size_t x = 0; x < 6; ++x) conj[x] = mul[mul[3 * 6 + x] * 6 + 3];
    d.g = hom_from_set_map(s3, s3, conj, "g");
    d.f = hom_from_set_map(z3, z3, {0, 2, 1}, "f");
    return d;
}

Term T(const std::string& op, std::vector<Term> args = {}) {
    return Term::apply(op, std::move(args));
}

bool holds(const TCoalgebraModel& m, const Term& l, const Term& r, std::size_t n) {
    return linearize(m, l, n) == linearize(m, r, n);
}

} // namespace

int main() {
    Field q = Field::Q();
    auto models = corpus_models(q);

    criterion(1, "axiom suite: corpus models pass, mutants fail with witness", [&] {
        for (const auto& m : models)
            if (!check_model(m).ok()) return false;
        // Mutant A: broken antipode in K[Z/3].
        auto bad = lift(corpus_cyclic(3), q);
        bad.op_matrices.at("inv") = Matrix::identity(q, 3);
        CheckReport ra = check_model(bad);
        if (ra.ok() || ra.first_failure().find('[') == std::string::npos)
            return false;
        // Mutant B: broken comultiplication compatibility in the F_2 Hopf
        // algebra (make x grouplike while keeping the algebra structure).
        auto badp = primitive_f2_model();
        Matrix d(badp.field(), 4, 2);
        d.set(0, 0, Rat(1));
        d.set(3, 1, Rat(1));
        badp.carrier = Coalgebra(badp.carrier.basis_labels, d, badp.carrier.epsilon);
        CheckReport rb = check_model(badp);
        if (rb.ok() || rb.first_failure().find('[') == std::string::npos)
            return false;
        // Mutant C: S3 tables under the abelian theory.
        auto ab = corpus_s3();
        ab.theory = builtin_theory("Ab");
        return !check_model(lift(ab, q)).ok();
    });

    criterion(2, "linearized-consequence suite: 10 derived identities", [&] {
        Term x = Term::var(0), y = Term::var(1);
        using P = std::pair<Term, Term>;
        std::vector<P> grp = {
            {T("inv", {T("inv", {x})}), x},
            {T("inv", {T("mul", {x, y})}), T("mul", {T("inv", {y}), T("inv", {x})})},
            {T("mul", {x, T("mul", {T("inv", {x}), y})}), y},
            {T("mul", {T("mul", {y, x}), T("inv", {x})}), y},
            {T("inv", {T("one")}), T("one")},
            {T("mul", {T("inv", {x}), T("mul", {x, y})}), y},
        };
        std::vector<P> skb = {
            {T("neg", {T("neg", {x})}), x},
            {T("add", {x, T("add", {T("neg", {x}), y})}), y},
            {T("neg", {T("add", {x, y})}), T("add", {T("neg", {y}), T("neg", {x})})},
            {T("inv", {T("inv", {x})}), x},
        };
        for (const auto& m : models) {
            if (!check_model(m).ok()) return false;
            const auto& which = m.theory.name == "SKB" ? skb : grp;
            for (const auto& [l, r] : which)
                if (!holds(m, l, r, 2)) return false;
        }
        return true;
    });

    auto homs = corpus_homs(q);

    criterion(3, "Newman/kernel suite: saturate(Hker+) = ker on corpus homs", [&] {
        for (auto h : homs) {
            if (!check_hom(h).ok()) return false;
            if (!newman_check(h).ok()) return false;
        }
        KernelData kd = hopf_kernel(z4_to_z2(q));
        return kd.hopf_kernel.dim() == 2 && kd.linear_kernel.dim() == 2;
    });

    criterion(4, "factorization suite: m o e = f, e epi, m mono", [&] {
        for (const auto& h : homs) {
            Factorization fac = factorize(h);
            if (!(fac.epi.is_surjective() && fac.mono.is_injective())) return false;
            if (fac.mono.matrix * fac.epi.matrix != h.matrix) return false;
        }
        return true;
    });

    criterion(5, "coequalizer/BIB suite: saturation = two-sided span, 5 trials", [&] {
        std::mt19937 rng(4217);
        std::vector<SetModel> groups = {corpus_cyclic(2), corpus_cyclic(3),
                                        corpus_cyclic(4), corpus_cyclic(6),
                                        corpus_s3()};
        for (int trial = 0; trial < 5; ++trial) {
            const SetModel& a = groups[std::size_t(rng() % groups.size())];
            const SetModel& b = groups[std::size_t(rng() % groups.size())];
            auto ka = lift(a, q), kb = lift(b, q);
            auto fs = set_homs(a, b);
            auto hf = hom_from_set_map(ka, kb, fs[std::size_t(rng() % fs.size())]);
            auto hg = hom_from_set_map(ka, kb, fs[std::size_t(rng() % fs.size())]);
            Subspace i = Subspace::from_columns(hf.matrix - hg.matrix);
            Subspace sat = saturate_t_ideal(kb, i);
            const Matrix& mul = kb.op("mul");
            std::vector<std::vector<Rat>> gens;
            Matrix ib = i.basis();
            for (std::size_t r = 0; r < ib.rows(); ++r) {
                std::vector<Rat> v = ib.row_vec(r);
                for (std::size_t xg = 0; xg < kb.dim(); ++xg) {
                    std::vector<Rat> xv(kb.dim() * kb.dim());
                    for (std::size_t t = 0; t < kb.dim(); ++t)
                        xv[xg * kb.dim() + t] = v[t];
                    std::vector<Rat> left = mul.mul_vec(xv);
                    for (std::size_t yg = 0; yg < kb.dim(); ++yg) {
                        std::vector<Rat> ly(kb.dim() * kb.dim());
                        for (std::size_t t = 0; t < kb.dim(); ++t)
                            ly[t * kb.dim() + yg] = left[t];
                        gens.push_back(mul.mul_vec(ly));
                    }
                }
            }
            Subspace bib =
                Subspace::from_rows(Matrix::from_rows(q, kb.dim(), gens));
            if (sat != bib) return false;
            // The coequalizer projection kills exactly the saturation.
            QuotientResult co = coequalizer(hf, hg);
            if (kernel_basis(co.projection.matrix) != sat) return false;
        }
        return true;
    });

    criterion(6, "protomodularity suite: (alphai)/(beta) + ssfl on K[S3]", [&] {
        for (const auto& m : models) {
            if (!m.theory.has_omega_group()) continue;
            ProtoTerms pt = proto_terms_for(m.theory);
            if (!verify_proto_terms(m, pt).ok()) return false;
        }
        SplitDiagram d = s3_split_diagram(q);
        if (!verify_split_diagram(d).ok()) return false;
        SsflResult res = ssfl_reconstruct(d, proto_terms_for(d.p.source.theory));
        if (!res.report.ok()) return false;
        return res.g_prime.matrix * d.g.matrix == Matrix::identity(q, 6) &&
               d.g.matrix * res.g_prime.matrix == Matrix::identity(q, 6);
    });

    criterion(7, "adjunction suite: hom bijections + 20 equalizer pairs", [&] {
        std::vector<SetModel> sets = {corpus_cyclic(2), corpus_cyclic(3),
                                      corpus_cyclic(4), corpus_cyclic(5),
                                      corpus_cyclic(6), corpus_s3(),
                                      corpus_trivial_brace(corpus_cyclic(3)),
                                      corpus_trivial_brace(corpus_s3()),
                                      corpus_skew_brace6()};
        for (const auto& x : sets)
            for (const auto& ycand : sets) {
                if (x.theory.name != ycand.theory.name) continue;
                HomBijectionResult r = hom_bijection_check(x, lift(ycand, q));
                if (!r.report.ok()) return false;
                if (r.set_hom_count != r.lifted_hom_count) return false;
            }
        std::mt19937 rng(90125);
        for (int t = 0; t < 20; ++t) {
            std::size_t ni = 1 + rng() % 6, nj = 1 + rng() % 6;
            std::vector<std::size_t> f(ni), g(ni);
            for (auto& v : f) v = rng() % nj;
            for (auto& v : g) v = rng() % nj;
            Field fld = t % 2 ? Field::Fp(3) : q;
            if (!equalizer_preservation_check(f, g, nj, fld).ok()) return false;
        }
        return true;
    });

    criterion(8, "Birkhoff suite: reflections, radicalator, closure", [&] {
        auto ks3 = lift(corpus_s3(), q);
        TheoryMorphism grp_ab =
            identity_on_ops(builtin_theory("Grp"), builtin_theory("Ab"));
        ReflectionResult ab = reflect(ks3, grp_ab);
        if (ab.reflected.dim() != 2) return false;
        if (grouplikes(ab.reflected.carrier).size() != 2) return false;
        // Radicalator of a trivial brace over an abelian group vanishes.
        auto tz3 = lift(corpus_trivial_brace(corpus_cyclic(3)), q);
        if (radicalator_coideal(tz3).dim() != 0) return false;
        // Idempotence across the fixtures.
        for (const auto& m : models) {
            const std::string& tn = m.theory.name;
            if (tn != "Grp" && tn != "SKB") continue;
            TheoryMorphism r = identity_on_ops(
                m.theory, builtin_theory(tn == "Grp" ? "Ab" : "RadRng"));
            ReflectionResult once = reflect(m, r);
            TheoryMorphism again = identity_on_ops(m.theory, r.target);
            // Push the reflected model back under the source theory.
            TCoalgebraModel back = once.reflected;
            back.theory = m.theory;
            ReflectionResult twice = reflect(back, again);
            if (twice.reflected.dim() != once.reflected.dim()) return false;
            if (twice.generating_coideal.dim() != 0) return false;
        }
        // Closure under quotients on corpus surjections with lawful sources.
        ModelHom zq = z4_to_z2(q);
        if (!birkhoff_closure_check(grp_ab, zq).ok()) return false;
        TheoryMorphism skb_rr =
            identity_on_ops(builtin_theory("SKB"), builtin_theory("RadRng"));
        auto t4 = lift(corpus_trivial_brace(corpus_cyclic(4)), q);
        auto t2 = lift(corpus_trivial_brace(corpus_cyclic(2)), q);
        ModelHom parity = hom_from_set_map(t4, t2, {0, 1, 0, 1}, "parity");
        return birkhoff_closure_check(skb_rr, parity).ok();
    });

    criterion(9, "grouplike suite: |G(K[G])| = |G|, one primitive grouplike", [&] {
        for (std::size_t n : {std::size_t(2), std::size_t(3), std::size_t(4)})
            if (grouplikes(lift(corpus_cyclic(n), q).carrier).size() != n)
                return false;
        if (grouplikes(lift(corpus_s3(), q).carrier).size() != 6) return false;
        return grouplikes(primitive_f2_model().carrier).size() == 1;
    });

    criterion(10, "determinism: byte-identical JSON reports across runs", [&] {
        auto run = [&] {
            std::string out;
            for (const auto& m : corpus_models(q)) {
                out += report_json("check", check_model(m)).dump();
                out += print_model(m);
            }
            ModelHom h = z4_to_z2(q);
            CheckReport rep = check_hom(h);
            rep.merge(newman_check(h), "newman.");
            out += report_json("kernel", rep).dump();
            out += print_hom(h);
            return out;
        };
        return run() == run();
    });

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
              << " (" << (10 - failures) << "/10)" << std::endl;
    return failures == 0 ? 0 : 1;
}
