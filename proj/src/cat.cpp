#include "ohk/cat.hpp"

namespace ohk {

namespace {

void require_pointed(const TCoalgebraModel& m) {
    if (!m.theory.has_omega_group())
        throw std::invalid_argument("operation needs a pointed theory");
}

} // namespace

CheckReport sub_t_coalgebra_check(const TCoalgebraModel& a, const Subspace& b) {
    if (b.ambient_dim() != a.dim())
        throw ShapeError("subspace ambient does not match the carrier");
    CheckReport rep;
    Matrix inc = b.inclusion();

    Subspace bb = Subspace::from_columns(tensor(inc, inc));
    bool delta_ok = bb.contains(Subspace::from_columns(a.carrier.delta * inc));
    rep.add("delta_closed", delta_ok);

    if (a.theory.has_omega_group())
        rep.add("contains_unit", b.contains(a.unit_matrix().column(0)));

    for (const OpSymbol& o : a.theory.ops) {
        Matrix hits = a.op(o.name) * tensor_power(inc, o.arity);
        rep.add("op_closed." + o.name, b.contains(Subspace::from_columns(hits)));
    }
    return rep;
}

KernelData hopf_kernel(const ModelHom& f) {
    require_pointed(f.source);
    const Field fd = f.source.field();
    Matrix id_a = Matrix::identity(fd, f.source.dim());
    Matrix u_b = f.target.unit_matrix();

    Matrix cond = tensor(f.matrix, id_a) * f.source.carrier.delta -
                  tensor(u_b, id_a);
    KernelData out{kernel_basis(cond), kernel_basis(f.matrix),
                   Subspace(fd, f.source.dim()), {}};
    out.augmentation_part =
        out.hopf_kernel.intersect(kernel_basis(f.source.carrier.epsilon));
    out.closure = sub_t_coalgebra_check(f.source, out.hopf_kernel);
    if (!out.closure.ok())
        throw std::logic_error("Hopf kernel failed its closure certificate: " +
                               out.closure.first_failure());
    return out;
}

CheckReport newman_check(const ModelHom& f) {
    KernelData kd = hopf_kernel(f);
    Subspace sat = saturate_t_ideal(f.source, kd.augmentation_part);
    CheckReport rep;
    rep.add("newman", sat == kd.linear_kernel,
            "dims " + std::to_string(sat.dim()) + " vs " +
                std::to_string(kd.linear_kernel.dim()));
    return rep;
}

Factorization factorize(const ModelHom& f) {
    KernelData kd = hopf_kernel(f);
    Subspace sat = saturate_t_ideal(f.source, kd.augmentation_part);
    QuotientResult qr = quotient_model(f.source, sat);
    ModelHom mono = factor_through(qr.projection, f);
    if (!mono.is_injective())
        throw std::logic_error("comparison map is not injective");
    return {qr.projection, std::move(mono), qr.model};
}

NormalityResult is_normal(const TCoalgebraModel& a, const Subspace& b) {
    require_pointed(a);
    CheckReport sub = sub_t_coalgebra_check(a, b);
    if (!sub.ok())
        throw std::invalid_argument("not a sub-T-coalgebra: " +
                                    sub.first_failure());

    NormalityResult res{false, Subspace(a.field(), a.dim()),
                        Subspace(a.field(), a.dim()), {}};
    Subspace bplus = b.intersect(kernel_basis(a.carrier.epsilon));
    res.saturated = saturate_t_ideal(a, bplus);

    // AB+ by the designated group multiplication.
    const Matrix& mul = a.op(a.theory.omega_group().mul);
    Matrix hits =
        mul * tensor(Matrix::identity(a.field(), a.dim()), bplus.inclusion());
    res.product_span = Subspace::from_columns(hits);

    res.normal = res.saturated == res.product_span;
    res.report.add("saturation_equals_AB+", res.normal,
                   "dims " + std::to_string(res.saturated.dim()) + " vs " +
                       std::to_string(res.product_span.dim()));
    if (res.normal) {
        // The quotient projection exhibits b as a Hopf kernel.
        QuotientResult qr = quotient_model(a, res.saturated);
        KernelData kd = hopf_kernel(qr.projection);
        res.report.add("hopf_kernel_of_projection_is_b", kd.hopf_kernel == b);
    }
    return res;
}

CheckReport image_of_kernel_check(const Subspace& d, const ModelHom& rho) {
    if (!rho.is_surjective())
        throw std::invalid_argument("direct image needs a surjective map");
    NormalityResult src = is_normal(rho.source, d);
    if (!src.normal)
        throw std::invalid_argument("subobject is not normal in the source");
    Subspace img = Subspace::from_columns(rho.matrix * d.inclusion());
    NormalityResult dst = is_normal(rho.target, img);
    CheckReport rep;
    rep.add("image_is_normal", dst.normal);
    rep.merge(dst.report, "image.");
    return rep;
}

ProtoTerms proto_terms_for(const TheoryPresentation& t) {
    if (!t.has_omega_group())
        throw std::invalid_argument("protomodularity terms need a group structure");
    const OmegaGroup& g = t.omega_group();
    ProtoTerms pt;
    pt.n = 1;
    pt.alpha_terms = {Term::apply(
        g.mul, {Term::var(0), Term::apply(g.antipode, {Term::var(1)})})};
    pt.beta_term = Term::apply(g.mul, {Term::var(0), Term::var(1)});
    return pt;
}

CheckReport verify_proto_terms(const TCoalgebraModel& m, const ProtoTerms& pt) {
    CheckReport rep;
    const Coalgebra& c = m.carrier;
    const Field f = m.field();
    Matrix id = Matrix::identity(f, c.dim);
    Matrix zero_hh = m.unit_matrix() * c.epsilon;

    std::vector<Matrix> alphas;
    for (std::size_t i = 0; i < pt.n; ++i) {
        Matrix ai = linearize(m, pt.alpha_terms[i], 2);
        alphas.push_back(ai);
        rep.add("alpha" + std::to_string(i + 1), ai * c.delta == zero_hh);
    }

    Matrix beta = linearize(m, pt.beta_term, pt.n + 1);
    std::vector<Matrix> legs = alphas;
    legs.push_back(tensor(c.epsilon, id));
    Matrix lhs =
        beta * tensor_many(legs) * iterated_delta_of_power(c, 2, pt.n + 1);
    Matrix rhs = tensor(id, c.epsilon);
    rep.add("beta", lhs == rhs);
    return rep;
}

CheckReport verify_split_diagram(const SplitDiagram& d) {
    CheckReport rep;

    auto check_row = [&](const ModelHom& k, const ModelHom& p, const ModelHom& s,
                         const std::string& prefix) {
        rep.add(prefix + "k_injective", k.is_injective());
        rep.add(prefix + "section",
                p.matrix * s.matrix ==
                    Matrix::identity(p.matrix.field(), p.target.dim()));
        KernelData kd = hopf_kernel(p);
        rep.add(prefix + "k_is_kernel_of_p",
                kd.hopf_kernel == Subspace::from_columns(k.matrix));
    };
    check_row(d.k, d.p, d.s, "bottom.");
    check_row(d.kp, d.pp, d.sp, "top.");

    rep.add("square_k", d.kp.matrix * d.f.matrix == d.g.matrix * d.k.matrix);
    rep.add("square_p", d.pp.matrix * d.g.matrix == d.h.matrix * d.p.matrix);
    rep.add("square_s", d.g.matrix * d.s.matrix == d.sp.matrix * d.h.matrix);
    rep.add("f_bijective", d.f.matrix.is_invertible());
    rep.add("h_bijective", d.h.matrix.is_invertible());
    return rep;
}

SsflResult ssfl_reconstruct(const SplitDiagram& d, const ProtoTerms& pt) {
    CheckReport diag = verify_split_diagram(d);
    if (!diag.ok())
        throw std::invalid_argument("split diagram invariant violated: " +
                                    diag.first_failure());
    CheckReport proto;
    for (const TCoalgebraModel* m :
         {&d.k.source, &d.p.source, &d.p.target, &d.kp.source, &d.pp.source,
          &d.pp.target}) {
        CheckReport r = verify_proto_terms(*m, pt);
        proto.merge(r, m->name + ".");
    }
    if (!proto.ok())
        throw std::invalid_argument("protomodularity terms fail on " +
                                    proto.first_failure());

    const TCoalgebraModel& bprime = d.pp.source;
    const Coalgebra& cb = bprime.carrier;
    const Field f = bprime.field();

    // psi = g s h^-1 p'.
    Matrix psi =
        d.g.matrix * d.s.matrix * d.h.matrix.inverse() * d.pp.matrix;
    Matrix id_bp = Matrix::identity(f, bprime.dim());

    // phi^i = alpha^i_{B'} o (id (x) psi) o Delta_{B'}, lifted through k'.
    std::vector<Matrix> lifted;
    for (std::size_t i = 0; i < pt.n; ++i) {
        Matrix alpha = linearize(bprime, pt.alpha_terms[i], 2);
        Matrix phi = alpha * tensor(id_bp, psi) * cb.delta;
        auto lift = d.kp.matrix.solve_matrix(phi);
        if (!lift)
            throw std::invalid_argument(
                "phi does not factor through k'; a diagram invariant is violated");
        lifted.push_back(*lift);
    }

    // g' = beta_B o (k f^-1 phi-bar^1 (x) ... (x) s h^-1 p') o Delta^(n)_{B'}.
    Matrix beta = linearize(d.p.source, pt.beta_term, pt.n + 1);
    std::vector<Matrix> legs;
    for (const Matrix& l : lifted)
        legs.push_back(d.k.matrix * d.f.matrix.inverse() * l);
    legs.push_back(d.s.matrix * d.h.matrix.inverse() * d.pp.matrix);
    Matrix gp = beta * tensor_many(legs) * iterated_delta(cb, pt.n + 1);

    SsflResult res{ModelHom{"g'", bprime, d.p.source, gp}, {}};
    res.report.add("g_after_g'",
                   d.g.matrix * gp == Matrix::identity(f, bprime.dim()));
    res.report.add("g'_after_g",
                   gp * d.g.matrix == Matrix::identity(f, d.p.source.dim()));
    res.report.merge(check_hom(res.g_prime), "g'.");
    return res;
}

} // namespace ohk
