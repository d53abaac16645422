#include "ohk/adjunction.hpp"

#include <algorithm>

namespace ohk {

std::size_t SetModel::apply(const std::string& op,
                            const std::vector<std::size_t>& args) const {
    auto it = op_tables.find(op);
    if (it == op_tables.end())
        throw std::invalid_argument("set model has no table for op " + op);
    return it->second.at(encode_index(args, size()));
}

std::size_t SetModel::eval(const Term& t, const std::vector<std::size_t>& env) const {
    if (t.is_var()) return env.at(t.var_index());
    std::vector<std::size_t> args;
    for (const Term& a : t.args()) args.push_back(eval(a, env));
    return apply(t.op(), args);
}

std::size_t SetModel::element_index(const std::string& label) const {
    auto it = std::find(elements.begin(), elements.end(), label);
    if (it == elements.end())
        throw std::invalid_argument("unknown element: " + label);
    return std::size_t(it - elements.begin());
}

void SetModel::validate() const {
    theory.validate();
    if (elements.empty() || elements.size() > kCarrierCap)
        throw CapError("set model carrier must have 1.." +
                       std::to_string(kCarrierCap) + " elements");
    for (const OpSymbol& o : theory.ops) {
        auto it = op_tables.find(o.name);
        if (it == op_tables.end())
            throw std::invalid_argument("missing table for op " + o.name);
        std::size_t expected = 1;
        for (std::size_t i = 0; i < o.arity; ++i) expected *= size();
        if (it->second.size() != expected)
            throw ShapeError("table for " + o.name + " has wrong length");
        for (std::size_t v : it->second)
            if (v >= size()) throw ShapeError("table value out of range in " + o.name);
    }
}

namespace {

// Iterates env through all assignments; returns false when exhausted.
bool next_env(std::vector<std::size_t>& env, std::size_t base) {
    for (std::size_t pos = env.size(); pos-- > 0;) {
        if (++env[pos] < base) return true;
        env[pos] = 0;
    }
    return false;
}

} // namespace

CheckReport check_set_model(const SetModel& s) {
    s.validate();
    CheckReport rep;
    static const char* kVarNames[] = {"x", "y", "z", "w", "v", "r", "s", "t"};
    for (const Equation& e : s.theory.eqs) {
        std::vector<std::string> vn;
        for (std::size_t v = 0; v < e.nvars; ++v) vn.push_back(kVarNames[v % 8]);
        std::string witness;
        bool ok = true;
        std::vector<std::size_t> env(e.nvars, 0);
        do {
            if (s.eval(e.lhs, env) != s.eval(e.rhs, env)) {
                ok = false;
                for (std::size_t i = 0; i < env.size(); ++i)
                    witness += (i ? "," : "(") + s.elements[env[i]];
                witness += ")";
                break;
            }
        } while (e.nvars > 0 && next_env(env, s.size()));
        rep.add("eq." + e.lhs.print(vn) + "=" + e.rhs.print(vn), ok, witness);
    }
    return rep;
}

TCoalgebraModel lift(const SetModel& s, Field f) {
    s.validate();
    TCoalgebraModel m;
    m.name = "K[" + s.name + "]";
    m.theory = s.theory;
    m.carrier = Coalgebra::grouplike_basis(f, s.elements);
    std::size_t d = s.size();
    for (const OpSymbol& o : s.theory.ops) {
        std::size_t dom = 1;
        for (std::size_t i = 0; i < o.arity; ++i) dom *= d;
        Matrix mat(f, d, dom);
        for (std::size_t col = 0; col < dom; ++col)
            mat.set(s.op_tables.at(o.name)[col], col, Rat(1));
        m.op_matrices.emplace(o.name, std::move(mat));
    }
    return m;
}

std::vector<std::vector<Rat>> grouplike_vectors(const TCoalgebraModel& m) {
    return grouplikes(m.carrier);
}

namespace {

std::vector<Rat> tensor_of(const Field& f,
                           const std::vector<std::vector<Rat>>& vs) {
    std::vector<Rat> ten{Rat(1)};
    for (const auto& v : vs) {
        std::vector<Rat> next(ten.size() * v.size());
        for (std::size_t a = 0; a < ten.size(); ++a)
            for (std::size_t b = 0; b < v.size(); ++b)
                next[a * v.size() + b] = f.mul(ten[a], v[b]);
        ten = std::move(next);
    }
    return ten;
}

} // namespace

SetModel grouplike_model(const TCoalgebraModel& m) {
    auto gs = grouplike_vectors(m);
    const Field f = m.field();
    SetModel s;
    s.name = "G(" + m.name + ")";
    s.theory = m.theory;
    for (const auto& g : gs)
        s.elements.push_back(render_vector(g, m.carrier.basis_labels));

    for (const OpSymbol& o : m.theory.ops) {
        std::size_t dom = 1;
        for (std::size_t i = 0; i < o.arity; ++i) dom *= gs.size();
        std::vector<std::size_t> table(dom);
        for (std::size_t col = 0; col < dom; ++col) {
            auto tuple = decode_index(col, gs.size(), o.arity);
            std::vector<std::vector<Rat>> args;
            for (std::size_t t : tuple) args.push_back(gs[t]);
            std::vector<Rat> out = m.op(o.name).mul_vec(tensor_of(f, args));
            auto it = std::find(gs.begin(), gs.end(), out);
            if (it == gs.end())
                throw std::invalid_argument(
                    "operation " + o.name + " does not preserve grouplikes");
            table[col] = std::size_t(it - gs.begin());
        }
        s.op_tables.emplace(o.name, std::move(table));
    }
    s.validate();
    return s;
}

std::vector<std::vector<std::size_t>> set_homs(const SetModel& a, const SetModel& b) {
    a.validate();
    b.validate();
    if (!(a.theory == b.theory))
        throw std::invalid_argument("set models disagree on the theory");
    std::vector<std::vector<std::size_t>> homs;
    std::vector<std::size_t> phi(a.size(), 0);
    do {
        bool ok = true;
        for (const OpSymbol& o : a.theory.ops) {
            std::size_t dom = 1;
            for (std::size_t i = 0; i < o.arity; ++i) dom *= a.size();
            for (std::size_t col = 0; col < dom && ok; ++col) {
                auto tuple = decode_index(col, a.size(), o.arity);
                std::vector<std::size_t> mapped;
                for (std::size_t t : tuple) mapped.push_back(phi[t]);
                if (phi[a.op_tables.at(o.name)[col]] != b.apply(o.name, mapped))
                    ok = false;
            }
            if (!ok) break;
        }
        if (ok) homs.push_back(phi);
    } while (next_env(phi, b.size()));
    return homs;
}

HomBijectionResult hom_bijection_check(const SetModel& x, const TCoalgebraModel& c) {
    HomBijectionResult res;
    auto gs = grouplike_vectors(c);
    SetModel gmodel = grouplike_model(c);
    TCoalgebraModel kx = lift(x, c.field());

    auto homs = set_homs(x, gmodel);
    res.set_hom_count = homs.size();

    // Every theory-respecting function lifts to a verified model hom.
    std::vector<std::vector<std::size_t>> lifted;
    for (const auto& phi : homs) {
        Matrix mat(c.field(), c.dim(), x.size());
        for (std::size_t j = 0; j < x.size(); ++j)
            for (std::size_t r = 0; r < c.dim(); ++r) mat.set(r, j, gs[phi[j]][r]);
        ModelHom h{"lifted", kx, c, std::move(mat)};
        res.report.add("lift_passes_check_hom", check_hom(h).ok());
    }

    // Conversely a linear map K[X] -> C is a model hom only if each basis
    // grouplike lands on a grouplike, so the candidates are exactly the
    // functions X -> G(C). The hom conditions on such a map, evaluated on
    // the basis columns of K[X] (which exhaust its domain), reduce to:
    //   delta: Delta_C(gs[i]) = gs[i] (x) gs[i], eps: eps(gs[i]) = 1,
    //   ops:   op_C(gs-tensor over phi(tuple)) = gs[phi[op_X(tuple)]].
    // Both sides are precomputed once, making the enumeration exact but
    // index-only.
    const Field f = c.field();
    std::vector<bool> g_ok(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        std::vector<Rat> dg = c.carrier.delta.mul_vec(gs[i]);
        bool ok = dg == tensor_of(f, {gs[i], gs[i]});
        Rat eg = 0;
        for (std::size_t r = 0; r < c.dim(); ++r)
            eg = f.add(eg, f.mul(c.carrier.epsilon.at(0, r), gs[i][r]));
        g_ok[i] = ok && eg == 1;
    }
    // op name -> table over grouplike tuples: index into gs, or npos.
    constexpr std::size_t npos = std::size_t(-1);
    std::map<std::string, std::vector<std::size_t>> op_res;
    for (const OpSymbol& o : c.theory.ops) {
        std::size_t dom = 1;
        for (std::size_t i = 0; i < o.arity; ++i) dom *= gs.size();
        std::vector<std::size_t> table(dom, npos);
        for (std::size_t col = 0; col < dom; ++col) {
            auto tuple = decode_index(col, gs.size(), o.arity);
            std::vector<std::vector<Rat>> args;
            for (std::size_t t : tuple) args.push_back(gs[t]);
            std::vector<Rat> out = c.op(o.name).mul_vec(tensor_of(f, args));
            auto it = std::find(gs.begin(), gs.end(), out);
            if (it != gs.end()) table[col] = std::size_t(it - gs.begin());
        }
        op_res.emplace(o.name, std::move(table));
    }
    std::vector<std::size_t> phi(x.size(), 0);
    do {
        bool pass = true;
        for (std::size_t j = 0; j < x.size() && pass; ++j)
            if (!g_ok[phi[j]]) pass = false;
        for (const OpSymbol& o : c.theory.ops) {
            if (!pass) break;
            std::size_t dom = 1;
            for (std::size_t i = 0; i < o.arity; ++i) dom *= x.size();
            const auto& table = op_res.at(o.name);
            const auto& xtable = x.op_tables.at(o.name);
            for (std::size_t col = 0; col < dom && pass; ++col) {
                auto tuple = decode_index(col, x.size(), o.arity);
                std::vector<std::size_t> mapped(o.arity);
                for (std::size_t t = 0; t < o.arity; ++t) mapped[t] = phi[tuple[t]];
                std::size_t got = table[encode_index(mapped, gs.size())];
                if (got == npos || got != phi[xtable[col]]) pass = false;
            }
        }
        if (pass) ++res.lifted_hom_count;
    } while (next_env(phi, gs.size()));

    res.report.add("hom_counts_agree", res.set_hom_count == res.lifted_hom_count,
                   std::to_string(res.set_hom_count) + " vs " +
                       std::to_string(res.lifted_hom_count));
    return res;
}

CheckReport equalizer_preservation_check(const std::vector<std::size_t>& f,
                                         const std::vector<std::size_t>& g,
                                         std::size_t codomain, Field field) {
    if (f.size() != g.size())
        throw ShapeError("function domains must agree");
    std::size_t ni = f.size();
    for (std::size_t v : f)
        if (v >= codomain) throw ShapeError("function value out of range");
    for (std::size_t v : g)
        if (v >= codomain) throw ShapeError("function value out of range");

    Matrix ff(field, codomain, ni), fg(field, codomain, ni);
    for (std::size_t i = 0; i < ni; ++i) {
        ff.set(f[i], i, Rat(1));
        fg.set(g[i], i, Rat(1));
    }

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ni; ++i) labels.push_back("e" + std::to_string(i));
    Coalgebra ki = Coalgebra::grouplike_basis(field, labels);

    // Eq(Ff, Fg) = {c | c1 (x) Ff c2 = c1 (x) Fg c2}.
    Matrix cond = tensor(Matrix::identity(field, ni), ff - fg) * ki.delta;
    Subspace eq = kernel_basis(cond);

    std::vector<std::vector<Rat>> evecs;
    for (std::size_t i = 0; i < ni; ++i)
        if (f[i] == g[i]) {
            std::vector<Rat> e(ni, Rat(0));
            e[i] = 1;
            evecs.push_back(std::move(e));
        }
    Subspace span_e = Subspace::from_rows(
        Matrix::from_rows(field, ni, evecs));

    CheckReport rep;
    rep.add("equalizer_equals_KE", eq == span_e,
            "dims " + std::to_string(eq.dim()) + " vs " +
                std::to_string(span_e.dim()));
    return rep;
}

} // namespace ohk
