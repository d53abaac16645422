#include "ohk/ideals.hpp"

namespace ohk {

namespace {

void require_ambient(const TCoalgebraModel& m, const Subspace& s) {
    if (s.ambient_dim() != m.dim())
        throw ShapeError("subspace ambient does not match the carrier");
    s.field().require_same(m.field());
}

// id (x) ... (x) inc (x) ... (x) id with inc in the given slot.
Matrix slot_inclusion(const TCoalgebraModel& m, const Subspace& s,
                      std::size_t arity, std::size_t slot) {
    std::vector<Matrix> parts;
    for (std::size_t j = 0; j < arity; ++j)
        parts.push_back(j == slot ? s.inclusion()
                                  : Matrix::identity(m.field(), m.dim()));
    return tensor_many(parts);
}

} // namespace

CoidealWitness is_coideal(const TCoalgebraModel& m, const Subspace& s) {
    require_ambient(m, s);
    const Coalgebra& c = m.carrier;
    Matrix inc = s.inclusion();
    Matrix id = Matrix::identity(m.field(), m.dim());
    Subspace mixed = Subspace::from_columns(tensor(inc, id))
                         .sum(Subspace::from_columns(tensor(id, inc)));
    for (std::size_t j = 0; j < s.dim(); ++j) {
        std::vector<Rat> v = s.basis().row_vec(j);
        if (!mixed.contains(c.delta.mul_vec(v)))
            return {false, "delta escapes on " +
                               render_vector(v, c.basis_labels)};
        std::vector<Rat> ev = c.epsilon.mul_vec(v);
        if (ev[0] != 0)
            return {false, "eps nonzero on " + render_vector(v, c.basis_labels)};
    }
    return {true, ""};
}

CoidealWitness is_t_ideal(const TCoalgebraModel& m, const Subspace& s) {
    require_ambient(m, s);
    for (const OpSymbol& o : m.theory.ops) {
        if (o.arity == 0) continue;
        for (std::size_t slot = 0; slot < o.arity; ++slot) {
            Matrix hits = m.op(o.name) * slot_inclusion(m, s, o.arity, slot);
            if (!s.contains(Subspace::from_columns(hits)))
                return {false, "op " + o.name + " escapes in slot " +
                                   std::to_string(slot)};
        }
    }
    return {true, ""};
}

Subspace saturate_t_ideal(const TCoalgebraModel& m, const Subspace& i) {
    require_ambient(m, i);
    CoidealWitness cw = is_coideal(m, i);
    if (!cw.ok)
        throw std::invalid_argument("saturation needs a coideal: " + cw.witness);
    Subspace cur = i;
    while (true) {
        Subspace next = cur;
        for (const OpSymbol& o : m.theory.ops) {
            if (o.arity == 0) continue;
            for (std::size_t slot = 0; slot < o.arity; ++slot) {
                Matrix hits = m.op(o.name) * slot_inclusion(m, cur, o.arity, slot);
                next = next.sum(Subspace::from_columns(hits));
            }
        }
        if (next == cur) return cur;
        cur = next;
    }
}

QuotientResult quotient_model(const TCoalgebraModel& m, const Subspace& i) {
    require_ambient(m, i);
    CoidealWitness cw = is_coideal(m, i);
    if (!cw.ok) throw std::invalid_argument("quotient by non-coideal: " + cw.witness);
    CoidealWitness tw = is_t_ideal(m, i);
    if (!tw.ok) throw std::invalid_argument("quotient by non-T-ideal: " + tw.witness);

    Matrix q = i.quotient_map();
    Matrix sec = i.section();

    // Well-definedness of the induced comultiplication and counit.
    if (!((tensor(q, q) * m.carrier.delta * i.inclusion()).is_zero()))
        throw std::invalid_argument("induced delta not well-defined");
    if (!((m.carrier.epsilon * i.inclusion()).is_zero()))
        throw std::invalid_argument("induced eps not well-defined");

    // Quotient basis: the non-pivot coordinates keep their labels.
    std::vector<std::string> labels;
    {
        std::vector<bool> pivot(m.dim(), false);
        for (std::size_t p : i.pivots()) pivot[p] = true;
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (!pivot[j]) labels.push_back(m.carrier.basis_labels[j]);
    }

    Coalgebra carrier(labels, tensor(q, q) * m.carrier.delta * sec,
                      m.carrier.epsilon * sec);

    TCoalgebraModel out;
    out.name = m.name + "/I";
    out.theory = m.theory;
    out.carrier = carrier;
    for (const OpSymbol& o : m.theory.ops) {
        // q o f vanishes on every ker(q^(x)n) slot; certify it.
        for (std::size_t slot = 0; slot < o.arity; ++slot)
            if (!((q * m.op(o.name) * slot_inclusion(m, i, o.arity, slot)).is_zero()))
                throw std::invalid_argument("induced op " + o.name +
                                            " not well-defined in slot " +
                                            std::to_string(slot));
        Matrix induced = q * m.op(o.name) * tensor_power(sec, o.arity);
        out.op_matrices.emplace(o.name, std::move(induced));
    }

    ModelHom proj{"q", m, out, q};
    CheckReport hr = check_hom(proj);
    if (!hr.ok())
        throw std::logic_error("quotient projection failed verification: " +
                               hr.first_failure());
    return {std::move(out), std::move(proj), i};
}

QuotientResult coequalizer(const ModelHom& f, const ModelHom& g) {
    if (f.source.dim() != g.source.dim() || f.target.dim() != g.target.dim() ||
        !(f.source.theory == g.source.theory))
        throw std::invalid_argument("coequalizer endpoints disagree");
    Subspace i = Subspace::from_columns(f.matrix - g.matrix);
    Subspace sat = saturate_t_ideal(f.target, i);
    return quotient_model(f.target, sat);
}

QuotientResult cokernel(const ModelHom& f) {
    if (!f.target.theory.has_omega_group())
        throw std::invalid_argument("cokernel needs a pointed theory");
    Subspace img = image(f.matrix);
    Subspace aug = kernel_basis(f.target.carrier.epsilon);
    Subspace i = img.intersect(aug);
    Subspace sat = saturate_t_ideal(f.target, i);
    return quotient_model(f.target, sat);
}

ModelHom factor_through(const ModelHom& q, const ModelHom& h) {
    if (q.source.dim() != h.source.dim())
        throw std::invalid_argument("factorization domains disagree");
    if (!q.is_surjective())
        throw std::invalid_argument("factor_through needs a surjective projection");
    auto right_inv =
        q.matrix.solve_matrix(Matrix::identity(q.matrix.field(), q.matrix.rows()));
    if (!right_inv) throw std::logic_error("surjective map without right inverse");
    Matrix hbar = h.matrix * *right_inv;
    Matrix diff = hbar * q.matrix - h.matrix;
    if (!diff.is_zero()) {
        for (std::size_t j = 0; j < diff.cols(); ++j)
            if (diff.column(j) != std::vector<Rat>(diff.rows(), Rat(0)))
                throw std::invalid_argument(
                    "map does not coequalize the defining pair; witness " +
                    q.source.carrier.basis_labels[j]);
    }
    ModelHom out{h.name + "-bar", q.target, h.target, std::move(hbar)};
    check_hom(out);
    return out;
}

} // namespace ohk
