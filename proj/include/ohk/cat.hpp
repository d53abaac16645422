#ifndef OHK_CAT_HPP
#define OHK_CAT_HPP

#include "ohk/ideals.hpp"

namespace ohk {

struct KernelData {
    Subspace hopf_kernel;       // sub-T-coalgebra Hker f
    Subspace linear_kernel;     // ker f as a linear map
    Subspace augmentation_part; // Hker f intersected with ker eps
    CheckReport closure;        // sub-T-coalgebra certificate
};

/// Hker f = {a | f(a1) (x) a2 = 1_B (x) a}, solved as the kernel of
/// ((f (x) id) o Delta - u_B (x) id); closure under Delta and all ops is
/// certified in the result.
KernelData hopf_kernel(const ModelHom& f);

/// Asserts saturate(Hker f+) = ker f as exact subspaces.
CheckReport newman_check(const ModelHom& f);

struct Factorization {
    ModelHom epi;  // A ->> A/<Hker f+>_T
    ModelHom mono; // the injective comparison into B
    TCoalgebraModel middle;
};

/// Regular epi-mono factorization through A/<Hker f+>_T.
Factorization factorize(const ModelHom& f);

/// Certifies b is a sub-T-coalgebra of a (Delta(b) in b(x)b, unit in b,
/// ops closed); throws otherwise.
CheckReport sub_t_coalgebra_check(const TCoalgebraModel& a, const Subspace& b);

struct NormalityResult {
    bool normal = false;
    Subspace saturated;    // <B+>_T
    Subspace product_span; // A B+ via the designated group multiplication
    CheckReport report;
};

/// Normal-subobject test <B+>_T = AB+; on success the quotient projection
/// has b as its Hopf kernel (certified in the report).
NormalityResult is_normal(const TCoalgebraModel& a, const Subspace& b);

/// The direct image of a normal subobject under a surjection is normal.
CheckReport image_of_kernel_check(const Subspace& d, const ModelHom& rho);

struct ProtoTerms {
    std::size_t n = 1;
    std::vector<Term> alpha_terms; // n terms in 2 variables
    Term beta_term;                // n + 1 variables
};

/// The group witnesses alpha(x, y) = x y^-1 and beta(a, y) = a y in the
/// designated group operations.
ProtoTerms proto_terms_for(const TheoryPresentation& t);

/// The (alphai) and (beta) matrix identities.
CheckReport verify_proto_terms(const TCoalgebraModel& m, const ProtoTerms& pt);

/// The 3x3 split-extension ladder: k, k' are kernels of the split epis
/// p, p', with sections s, s' and vertical comparisons f, g, h.
struct SplitDiagram {
    ModelHom k, p, s;    // bottom row A -> B -> C with section s
    ModelHom kp, pp, sp; // top row A' -> B' -> C' with section s'
    ModelHom f, g, h;    // verticals A -> A', B -> B', C -> C'
};

/// Kernel conditions, section identities, commuting squares, and
/// bijectivity of f and h.
CheckReport verify_split_diagram(const SplitDiagram& d);

struct SsflResult {
    ModelHom g_prime;
    CheckReport report; // g o g' = id and g' o g = id
};

/// Split short five reconstruction: rebuilds the inverse of g from the
/// rest of the diagram through the protomodularity terms.
SsflResult ssfl_reconstruct(const SplitDiagram& d, const ProtoTerms& pt);

} // namespace ohk

#endif
