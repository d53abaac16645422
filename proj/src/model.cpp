#include "ohk/model.hpp"

namespace ohk {

const Matrix& TCoalgebraModel::op(const std::string& op_name) const {
    auto it = op_matrices.find(op_name);
    if (it == op_matrices.end())
        throw std::invalid_argument("model has no matrix for op " + op_name);
    return it->second;
}

Matrix TCoalgebraModel::unit_matrix() const {
    if (!theory.has_omega_group())
        throw std::invalid_argument("theory has no designated group structure");
    return op(theory.omega_group().unit);
}

void TCoalgebraModel::validate() const {
    theory.validate();
    for (const OpSymbol& o : theory.ops) {
        const Matrix& f = op(o.name);
        std::size_t expected = 1;
        for (std::size_t i = 0; i < o.arity; ++i) expected *= carrier.dim;
        if (f.rows() != carrier.dim || f.cols() != expected)
            throw ShapeError("op " + o.name + " must be " +
                             std::to_string(carrier.dim) + " x dim^" +
                             std::to_string(o.arity));
        f.field().require_same(field());
    }
}

// ---------------------------------------------------------------------
// Linearization

namespace {

// Sparse columnwise evaluation of f^C o (l(a_1) (x) ... (x) l(a_k)) o
// Delta^(k-1) of the product coalgebra C^(x)n. Only the Sweedler terms of
// each tensor factor are expanded, never a dense Delta of C^(x)n.
Matrix linearize_rec(const TCoalgebraModel& m, const Term& t, std::size_t n) {
    const Coalgebra& c = m.carrier;
    std::size_t d = c.dim;
    if (t.is_var()) return var_projection(c, n, t.var_index());

    const Field f = m.field();
    std::size_t k = t.args().size();
    std::size_t dom = 1;
    for (std::size_t i = 0; i < n; ++i) dom *= d;
    const Matrix& opm = m.op(t.op());

    if (k == 0) {
        // Nullary: u o eps_{C^(x)n}.
        return opm * epsilon_power(c, n);
    }

    std::vector<Matrix> arg_mats;
    for (const Term& a : t.args()) arg_mats.push_back(linearize_rec(m, a, n));

    std::size_t dk = 1;
    for (std::size_t i = 0; i < k; ++i) {
        dk *= d;
        if (dk > kTensorCap * kCarrierCap)
            throw CapError("tensor power exceeds the total-dimension cap");
    }

    Matrix result(f, d, dom);
    std::vector<Rat> acc(dk);
    for (std::size_t col = 0; col < dom; ++col) {
        std::vector<std::size_t> factors = decode_index(col, d, n);
        // Sweedler expansion of each factor into k legs.
        std::vector<std::vector<SweedlerTerm>> sw;
        bool empty_factor = false;
        for (std::size_t j = 0; j < n; ++j) {
            sw.push_back(sweedler_terms(c, factors[j], k));
            if (sw.back().empty()) empty_factor = true;
        }
        std::fill(acc.begin(), acc.end(), Rat(0));
        if (empty_factor) {
            // A zero Delta column (possible on malformed input) kills the
            // whole product.
            std::vector<Rat> out = opm.mul_vec(acc);
            for (std::size_t r = 0; r < d; ++r) result.set(r, col, out[r]);
            continue;
        }
        std::vector<std::size_t> choice(n, 0);
        while (true) {
            Rat coeff(1);
            for (std::size_t j = 0; j < n; ++j)
                coeff = f.mul(coeff, sw[j][choice[j]].coeff);
            // Copy l of C^(x)n is the tuple of leg l across all factors;
            // feed it to arg l and tensor the outputs.
            std::vector<Rat> ten{Rat(1)};
            for (std::size_t l = 0; l < k; ++l) {
                std::vector<std::size_t> tuple(n);
                for (std::size_t j = 0; j < n; ++j)
                    tuple[j] = sw[j][choice[j]].legs[l];
                std::vector<Rat> v = arg_mats[l].column(encode_index(tuple, d));
                std::vector<Rat> next(ten.size() * d);
                for (std::size_t a = 0; a < ten.size(); ++a) {
                    if (ten[a] == 0) continue;
                    for (std::size_t b = 0; b < d; ++b)
                        if (v[b] != 0) next[a * d + b] = f.mul(ten[a], v[b]);
                }
                ten = std::move(next);
            }
            for (std::size_t a = 0; a < dk; ++a)
                if (ten[a] != 0) acc[a] = f.add(acc[a], f.mul(coeff, ten[a]));

            std::size_t pos = n;
            while (pos > 0) {
                --pos;
                if (++choice[pos] < sw[pos].size()) break;
                choice[pos] = 0;
                if (pos == 0) goto done;
            }
            if (n == 0) break;
        }
    done:
        std::vector<Rat> out = opm.mul_vec(acc);
        for (std::size_t r = 0; r < d; ++r) result.set(r, col, out[r]);
    }
    return result;
}

std::string column_witness(const Matrix& a, const Matrix& b,
                           const std::vector<std::string>& labels, std::size_t n) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.column(j) != b.column(j)) {
            auto tuple = decode_index(j, labels.size(), n);
            std::string s;
            for (std::size_t t = 0; t < tuple.size(); ++t) {
                if (t) s += "(x)";
                s += labels[tuple[t]];
            }
            return s.empty() ? "1" : s;
        }
    return "";
}

} // namespace

Matrix linearize(const TCoalgebraModel& m, const Term& t, std::size_t nvars) {
    if (t.max_var() > nvars)
        throw std::invalid_argument("term uses a variable outside [0, nvars)");
    return linearize_rec(m, t, nvars);
}

CheckReport check_model(const TCoalgebraModel& m) {
    m.validate();
    CheckReport rep;
    rep.merge(check_coalgebra(m.carrier), "coalgebra.");

    const Coalgebra& c = m.carrier;
    const auto& labels = c.basis_labels;

    for (const OpSymbol& o : m.theory.ops) {
        const Matrix& fm = m.op(o.name);
        Matrix lhs = c.delta * fm;
        Matrix rhs = tensor(fm, fm) * delta_of_power(c, o.arity);
        rep.add("op_delta." + o.name, lhs == rhs,
                column_witness(lhs, rhs, labels, o.arity));
        Matrix el = c.epsilon * fm;
        Matrix er = epsilon_power(c, o.arity);
        rep.add("op_epsilon." + o.name, el == er,
                column_witness(el, er, labels, o.arity));
    }

    if (m.theory.has_omega_group()) {
        Matrix u = m.unit_matrix();
        for (const OpSymbol& o : m.theory.ops) {
            Matrix lhs = o.arity == 0 ? m.op(o.name)
                                      : m.op(o.name) * iterated_delta(c, o.arity) * u;
            rep.add("unit_condition." + o.name, lhs == u,
                    lhs == u ? "" : render_vector(lhs.column(0), labels));
        }
    }

    for (std::size_t i = 0; i < m.theory.eqs.size(); ++i) {
        const Equation& e = m.theory.eqs[i];
        static const char* kVarNames[] = {"x", "y", "z", "w", "v", "r", "s", "t"};
        std::vector<std::string> vn;
        for (std::size_t v = 0; v < e.nvars; ++v) vn.push_back(kVarNames[v % 8]);
        Matrix lhs = linearize(m, e.lhs, e.nvars);
        Matrix rhs = linearize(m, e.rhs, e.nvars);
        rep.add("eq." + e.lhs.print(vn) + "=" + e.rhs.print(vn), lhs == rhs,
                column_witness(lhs, rhs, labels, e.nvars));
    }
    return rep;
}

CheckReport check_hom(ModelHom& h) {
    if (!(h.source.theory == h.target.theory))
        throw std::invalid_argument("hom endpoints disagree on the theory");
    h.source.field().require_same(h.target.field());
    if (h.matrix.rows() != h.target.dim() || h.matrix.cols() != h.source.dim())
        throw ShapeError("hom matrix must be target_dim x source_dim");

    CheckReport rep;
    const auto& labels = h.source.carrier.basis_labels;
    {
        Matrix lhs = h.target.carrier.delta * h.matrix;
        Matrix rhs = tensor(h.matrix, h.matrix) * h.source.carrier.delta;
        rep.add("hom_delta", lhs == rhs, column_witness(lhs, rhs, labels, 1));
    }
    {
        Matrix lhs = h.target.carrier.epsilon * h.matrix;
        rep.add("hom_epsilon", lhs == h.source.carrier.epsilon,
                column_witness(lhs, h.source.carrier.epsilon, labels, 1));
    }
    for (const OpSymbol& o : h.source.theory.ops) {
        Matrix lhs = h.matrix * h.source.op(o.name);
        Matrix rhs = h.target.op(o.name) * tensor_power(h.matrix, o.arity);
        rep.add("hom_op." + o.name, lhs == rhs,
                column_witness(lhs, rhs, labels, o.arity));
    }
    h.verified = rep.ok();
    return rep;
}

CheckReport check_hom(ModelHom&& h) { return check_hom(h); }

ModelHom identity_hom(const TCoalgebraModel& a) {
    ModelHom h{"id_" + a.name, a, a, Matrix::identity(a.field(), a.dim()), true};
    return h;
}

ModelHom zero_morphism(const TCoalgebraModel& a, const TCoalgebraModel& b) {
    if (!(a.theory == b.theory))
        throw std::invalid_argument("zero morphism endpoints disagree on theory");
    Matrix m = b.unit_matrix() * a.carrier.epsilon;
    return ModelHom{"0", a, b, std::move(m), true};
}

ModelHom compose(const ModelHom& g, const ModelHom& f) {
    if (f.target.dim() != g.source.dim())
        throw ShapeError("composition endpoint mismatch");
    return ModelHom{g.name + "." + f.name, f.source, g.target,
                    g.matrix * f.matrix, f.verified && g.verified};
}

} // namespace ohk
