#ifndef OHK_COALGEBRA_HPP
#define OHK_COALGEBRA_HPP

#include <string>
#include <vector>

#include "ohk/matrix.hpp"
#include "ohk/report.hpp"

namespace ohk {

struct GrouplikeUnresolvedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional cocommutative coalgebra. delta is the dim^2 x dim
/// matrix of the comultiplication with the row-major pairing, epsilon is
/// 1 x dim.
struct Coalgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    Matrix delta;
    Matrix epsilon;

    const Field& field() const { return delta.field(); }

    Coalgebra() = default;
    Coalgebra(std::vector<std::string> labels, Matrix delta_m, Matrix eps_m);

    /// The one-dimensional trivial coalgebra K.
    static Coalgebra trivial(Field f);
    /// Grouplike-basis coalgebra on the given labels: delta(x) = x (x) x.
    static Coalgebra grouplike_basis(Field f, std::vector<std::string> labels);

    bool operator==(const Coalgebra& o) const {
        return basis_labels == o.basis_labels && delta == o.delta &&
               epsilon == o.epsilon;
    }
};

/// Verifies coassociativity, the counit laws and cocommutativity; failed
/// entries carry a witness basis label.
CheckReport check_coalgebra(const Coalgebra& c);

/// Delta^(k-1): C -> C^(x)k with the left-nested convention; k = 1 gives
/// the identity.
Matrix iterated_delta(const Coalgebra& c, std::size_t k);

/// eps (x) ... (x) id (x) ... (x) eps with the identity in slot i.
Matrix var_projection(const Coalgebra& c, std::size_t n, std::size_t i);

/// Counit of the product coalgebra C^(x)n (a 1 x dim^n matrix).
Matrix epsilon_power(const Coalgebra& c, std::size_t n);

/// Comultiplication of the product coalgebra C^(x)n: factor-wise delta
/// followed by the canonical interleaving.
Matrix delta_of_power(const Coalgebra& c, std::size_t n);

/// Delta^(k-1) of the product coalgebra C^(x)n: C^(x)n -> (C^(x)n)^(x)k.
/// k = 0 yields the counit, k = 1 the identity.
Matrix iterated_delta_of_power(const Coalgebra& c, std::size_t n, std::size_t k);

/// The permutation matrix regrouping factor-major tensor indices
/// (a_11..a_k1, a_12..a_k2, ...) into copy-major ones
/// (a_11 a_12..a_1n, a_21..., ...); all legs have dimension d.
Matrix interleave_permutation(Field f, std::size_t d, std::size_t n, std::size_t k);

/// Sparse Sweedler expansion: the column of iterated_delta(c, k) at basis
/// index i, decoded into (index tuple, coefficient) terms.
struct SweedlerTerm {
    std::vector<std::size_t> legs; // length k
    Rat coeff;
};
std::vector<SweedlerTerm> sweedler_terms(const Coalgebra& c, std::size_t i,
                                         std::size_t k);

/// The complete set of grouplike elements, computed through characters of
/// the dual algebra; throws GrouplikeUnresolvedError when a character
/// requires an eigenvalue outside the ground field.
std::vector<std::vector<Rat>> grouplikes(const Coalgebra& c);

/// Mixed-radix helpers for tensor indices (all legs of dimension d).
std::vector<std::size_t> decode_index(std::size_t flat, std::size_t d, std::size_t n);
std::size_t encode_index(const std::vector<std::size_t>& tuple, std::size_t d);

} // namespace ohk

#endif
