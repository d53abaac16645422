#include "ohk/coalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace ohk {

std::string render_vector(const std::vector<Rat>& v,
                          const std::vector<std::string>& labels) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!first) out << " + ";
        out << rational_to_string(v[i]) << "*"
            << (i < labels.size() ? labels[i] : "b" + std::to_string(i));
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::vector<std::size_t> decode_index(std::size_t flat, std::size_t d, std::size_t n) {
    std::vector<std::size_t> t(n);
    for (std::size_t i = n; i-- > 0;) {
        t[i] = flat % d;
        flat /= d;
    }
    return t;
}

std::size_t encode_index(const std::vector<std::size_t>& tuple, std::size_t d) {
    std::size_t flat = 0;
    for (std::size_t x : tuple) flat = flat * d + x;
    return flat;
}

Coalgebra::Coalgebra(std::vector<std::string> labels, Matrix delta_m, Matrix eps_m)
    : dim(labels.size()), basis_labels(std::move(labels)),
      delta(std::move(delta_m)), epsilon(std::move(eps_m)) {
    if (dim == 0 || dim > kCarrierCap)
        throw CapError("carrier dimension must be in [1, " +
                       std::to_string(kCarrierCap) + "]");
    if (delta.rows() != dim * dim || delta.cols() != dim)
        throw ShapeError("delta must be dim^2 x dim");
    if (epsilon.rows() != 1 || epsilon.cols() != dim)
        throw ShapeError("epsilon must be 1 x dim");
    delta.field().require_same(epsilon.field());
}

Coalgebra Coalgebra::trivial(Field f) { return grouplike_basis(f, {"1"}); }

Coalgebra Coalgebra::grouplike_basis(Field f, std::vector<std::string> labels) {
    std::size_t d = labels.size();
    Matrix delta(f, d * d, d), eps(f, 1, d);
    for (std::size_t i = 0; i < d; ++i) {
        delta.set(i * d + i, i, Rat(1));
        eps.set(0, i, Rat(1));
    }
    return Coalgebra(std::move(labels), std::move(delta), std::move(eps));
}

CheckReport check_coalgebra(const Coalgebra& c) {
    CheckReport rep;
    const Field f = c.field();
    std::size_t d = c.dim;
    Matrix id = Matrix::identity(f, d);

    Matrix lhs = tensor(c.delta, id) * c.delta;  // (delta (x) id) o delta
    Matrix rhs = tensor(id, c.delta) * c.delta;  // (id (x) delta) o delta
    {
        std::string witness;
        bool ok = lhs == rhs;
        if (!ok)
            for (std::size_t j = 0; j < d; ++j)
                if (lhs.column(j) != rhs.column(j)) {
                    witness = c.basis_labels[j];
                    break;
                }
        rep.add("coassociativity", ok, witness);
    }
    {
        Matrix left = tensor(c.epsilon, id) * c.delta;
        Matrix right = tensor(id, c.epsilon) * c.delta;
        std::string witness;
        bool ok = left == id && right == id;
        if (!ok)
            for (std::size_t j = 0; j < d; ++j)
                if (left.column(j) != id.column(j) || right.column(j) != id.column(j)) {
                    witness = c.basis_labels[j];
                    break;
                }
        rep.add("counit", ok, witness);
    }
    {
        Matrix tau = Matrix::swap(f, d, d);
        Matrix swapped = tau * c.delta;
        std::string witness;
        bool ok = swapped == c.delta;
        if (!ok)
            for (std::size_t j = 0; j < d; ++j)
                if (swapped.column(j) != c.delta.column(j)) {
                    witness = c.basis_labels[j];
                    break;
                }
        rep.add("cocommutativity", ok, witness);
    }
    return rep;
}

Matrix iterated_delta(const Coalgebra& c, std::size_t k) {
    if (k == 0) return c.epsilon;
    Matrix r = Matrix::identity(c.field(), c.dim);
    // Left-nested: Delta^(j) = (delta (x) id^(x)(j-1)) o Delta^(j-1).
    for (std::size_t j = 2; j <= k; ++j) {
        // r maps C -> C^(x)(j-1); expand the first leg.
        std::size_t tail = 1;
        for (std::size_t t = 0; t < j - 2; ++t) tail *= c.dim;
        r = tensor(c.delta, Matrix::identity(c.field(), tail)) * r;
    }
    return r;
}

Matrix var_projection(const Coalgebra& c, std::size_t n, std::size_t i) {
    if (i >= n) throw ShapeError("var_projection index out of range");
    std::vector<Matrix> parts;
    for (std::size_t j = 0; j < n; ++j)
        parts.push_back(j == i ? Matrix::identity(c.field(), c.dim) : c.epsilon);
    return tensor_many(parts);
}

Matrix epsilon_power(const Coalgebra& c, std::size_t n) {
    return tensor_power(c.epsilon, n);
}

Matrix interleave_permutation(Field f, std::size_t d, std::size_t n, std::size_t k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n * k; ++i) {
        total *= d;
        if (total > kTensorCap * kCarrierCap)
            throw CapError("tensor power exceeds the total-dimension cap");
    }
    std::vector<std::size_t> perm(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        // Input is factor-major: index (j, l) at position j*k + l.
        std::vector<std::size_t> t = decode_index(flat, d, n * k);
        std::vector<std::size_t> s(n * k);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < k; ++l) s[l * n + j] = t[j * k + l];
        perm[flat] = encode_index(s, d);
    }
    return Matrix::permutation(f, perm);
}

Matrix delta_of_power(const Coalgebra& c, std::size_t n) {
    return iterated_delta_of_power(c, n, 2);
}

Matrix iterated_delta_of_power(const Coalgebra& c, std::size_t n, std::size_t k) {
    if (k == 0) return epsilon_power(c, n);
    Matrix factorwise = tensor_power(iterated_delta(c, k), n);
    if (k == 1) return factorwise;
    return interleave_permutation(c.field(), c.dim, n, k) * factorwise;
}

std::vector<SweedlerTerm> sweedler_terms(const Coalgebra& c, std::size_t i,
                                         std::size_t k) {
    Matrix dk = iterated_delta(c, k);
    std::vector<SweedlerTerm> terms;
    for (std::size_t r = 0; r < dk.rows(); ++r) {
        const Rat& v = dk.at(r, i);
        if (v == 0) continue;
        terms.push_back({decode_index(r, c.dim, k), v});
    }
    return terms;
}

// ---------------------------------------------------------------------
// Grouplikes via characters of the dual algebra

namespace {

// Characteristic polynomial by Faddeev-LeVerrier (valid in char 0 only).
std::vector<Rat> char_poly_q(const Matrix& a) {
    std::size_t n = a.rows();
    std::vector<Rat> coeffs(n + 1, Rat(0)); // x^n + c[1] x^(n-1) + ... + c[n]
    coeffs[0] = 1;
    Matrix m = Matrix::zero(a.field(), n, n);
    Matrix id = Matrix::identity(a.field(), n);
    for (std::size_t kstep = 1; kstep <= n; ++kstep) {
        Matrix shifted(a.field(), n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rat v = m.at(i, j);
                if (i == j) v += coeffs[kstep - 1];
                shifted.set(i, j, v);
            }
        m = a * shifted;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
        coeffs[kstep] = -tr / Rat(kstep);
    }
    return coeffs;
}

std::vector<Int> divisors(const Int& x) {
    Int a = x < 0 ? Int(-x) : x;
    if (a == 0) return {};
    if (a > Int("1000000000000"))
        throw GrouplikeUnresolvedError(
            "characteristic polynomial coefficients exceed the exact "
            "root-search bound");
    std::vector<Int> divs;
    for (Int d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            divs.push_back(d);
            divs.push_back(a / d);
        }
    return divs;
}

// Rational roots of the characteristic polynomial.
std::vector<Rat> rational_eigenvalue_candidates(const std::vector<Rat>& poly) {
    // Clear denominators.
    Int lcm = 1;
    for (const Rat& c : poly) {
        Int den = boost::multiprecision::denominator(c);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<Int> ip;
    for (const Rat& c : poly)
        ip.push_back(
            Int(boost::multiprecision::numerator(c * Rat(lcm))));
    // Strip trailing zero coefficients: x = 0 is then a root.
    std::vector<Rat> out;
    while (!ip.empty() && ip.back() == 0) {
        ip.pop_back();
        if (std::find(out.begin(), out.end(), Rat(0)) == out.end())
            out.push_back(Rat(0));
    }
    if (ip.size() <= 1) return out;
    const Int& lead = ip.front();
    const Int& last = ip.back();
    for (const Int& p : divisors(last))
        for (const Int& q : divisors(lead))
            for (int sign : {1, -1}) {
                Rat cand = Rat(sign * p, q);
                Rat val = 0;
                for (const Rat& c : ip) val = val * cand + Rat(c);
                if (val == 0 &&
                    std::find(out.begin(), out.end(), cand) == out.end())
                    out.push_back(cand);
            }
    return out;
}

struct SplitState {
    Matrix basis; // rows span an invariant subspace of the dual algebra
};

// Restriction of op to the row space of basis; rows of basis must be
// op-invariant.
Matrix restrict_to(const Matrix& op, const Matrix& basis) {
    Matrix bt = basis.transpose(); // ambient x r
    Matrix images = op * bt;       // ambient x r
    auto sol = bt.solve_matrix(images);
    if (!sol) throw std::logic_error("subspace not invariant in grouplike solver");
    return *sol; // r x r, columns = coordinates of images
}

} // namespace

std::vector<std::vector<Rat>> grouplikes(const Coalgebra& c) {
    const Field f = c.field();
    std::size_t d = c.dim;

    // Multiplication operators of the dual algebra in the dual basis:
    // L_i e^j = sum_k delta[(i,j), k] e^k.
    std::vector<Matrix> mult_ops;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix li(f, d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                li.set(k, j, c.delta.at(i * d + j, k));
        mult_ops.push_back(std::move(li));
    }

    std::vector<SplitState> leaves = {{Matrix::identity(f, d)}};
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<SplitState> next;
        for (const SplitState& st : leaves) {
            std::size_t r = st.basis.rows();
            Matrix restr = restrict_to(mult_ops[i], st.basis);
            std::vector<Rat> candidates;
            if (f.is_q()) {
                candidates = rational_eigenvalue_candidates(char_poly_q(restr));
            } else {
                for (std::uint64_t v = 0; v < f.char_p(); ++v)
                    candidates.push_back(Rat(v));
            }
            std::size_t captured = 0;
            for (const Rat& lam : candidates) {
                // Generalized eigenspace ker (restr - lam I)^r.
                Matrix shifted = restr;
                for (std::size_t j = 0; j < r; ++j)
                    shifted.set(j, j, f.sub(shifted.at(j, j), lam));
                Matrix pw = Matrix::identity(f, r);
                for (std::size_t e = 0; e < r; ++e) pw = shifted * pw;
                Subspace ker = kernel_basis(pw);
                if (ker.dim() == 0) continue;
                captured += ker.dim();
                next.push_back({ker.basis() * st.basis});
            }
            if (captured < r)
                throw GrouplikeUnresolvedError(
                    "a character requires an eigenvalue outside " + f.name() +
                    "; unresolved over this field");
        }
        leaves = std::move(next);
    }

    // Each leaf carries a unique candidate character tuple; read it off
    // from the action on any basis row and keep the multiplicative ones.
    std::vector<std::vector<Rat>> found;
    for (const SplitState& st : leaves) {
        std::vector<Rat> g(d);
        for (std::size_t i = 0; i < d; ++i) {
            Matrix restr = restrict_to(mult_ops[i], st.basis);
            // The restriction has a single eigenvalue; recover it from the
            // trace (r * lam = tr in char 0, and entry-checking otherwise).
            std::size_t r = restr.rows();
            Rat lam;
            if (f.is_q()) {
                Rat tr = 0;
                for (std::size_t j = 0; j < r; ++j) tr += restr.at(j, j);
                lam = tr / Rat(r);
                // r may vanish mod p; never happens over Q.
            } else {
                bool ok = false;
                for (std::uint64_t v = 0; v < f.char_p() && !ok; ++v) {
                    Matrix shifted = restr;
                    for (std::size_t j = 0; j < r; ++j)
                        shifted.set(j, j, f.sub(shifted.at(j, j), Rat(v)));
                    Matrix pw = Matrix::identity(f, r);
                    for (std::size_t e = 0; e < r; ++e) pw = shifted * pw;
                    if (kernel_basis(pw).dim() == r) {
                        lam = Rat(v);
                        ok = true;
                    }
                }
                if (!ok)
                    throw GrouplikeUnresolvedError("unresolved eigenvalue over " +
                                                   f.name());
            }
            g[i] = f.canon(lam);
        }
        // Verify the grouplike law exactly; non-multiplicative tuples from
        // radical components are discarded here.
        std::vector<Rat> dg = c.delta.mul_vec(g);
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j)
                if (dg[i * d + j] != f.mul(g[i], g[j])) ok = false;
        Rat eg = 0;
        for (std::size_t i = 0; i < d; ++i) eg = f.add(eg, f.mul(c.epsilon.at(0, i), g[i]));
        if (ok && eg == 1 &&
            std::find(found.begin(), found.end(), g) == found.end())
            found.push_back(std::move(g));
    }
    std::sort(found.begin(), found.end(),
              [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      if (a[i] < b[i]) return true;
                      if (b[i] < a[i]) return false;
                  }
                  return false;
              });
    return found;
}

} // namespace ohk
