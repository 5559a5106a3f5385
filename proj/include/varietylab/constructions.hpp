#pragma once

#include <cstddef>
#include <vector>

#include "varietylab/algebra_core.hpp"
#include "varietylab/caps.hpp"

namespace vlab {

// Semidirect sum S over an abelian ideal A of C: the space is (C/A) + A and
// (c1bar, a1)(c2bar, a2) = (c1bar c2bar, a1 c2 + c1 a2), well defined because
// A kills A. The construction also certifies that S satisfies every law of
// C without enumerating laws: inside C x C the subspace T = {(x, y) : x - y
// in A} is a subalgebra with the diagonal copy of A as an ideal, and
// (c1bar, a) -> (c + a, c) + diag(A) is an isomorphism onto T / diag(A).
struct SemidirectData {
    Algebra base;               // C
    Subspace ideal;             // A, an abelian ideal of C
    Algebra result;             // S: quotient-part coordinates first, then A
    Algebra certificate_target; // T / diag(A), built inside C x C
    Mat certificate_matrix;     // verified isomorphism result -> target
};

SemidirectData semidirect_sum(const Algebra &C, const Subspace &A_ideal);

// Free product of A^k and A^l inside the variety of A, for A simple, minimal
// and rigid: the direct sum of copies of A indexed by the nonzero cells of a
// (k+1) x (l+1) grid, with A^k embedded along rows and A^l along columns.
// Both embeddings are verified injective homomorphisms whose images generate
// the product.
struct FreeProductData {
    Algebra product;     // ((k+1)(l+1) - 1) copies of A, cell-major blocks
    Algebra left_power;  // A^k
    Algebra right_power; // A^l
    Mat left_embedding;  // row j*m+t: image of basis vector t of copy j
    Mat right_embedding;
};

FreeProductData free_product_powers(const Algebra &A, std::size_t k,
                                    std::size_t l, Caps caps = Caps::from_env());

enum class EnvelopeKind { left, right, two_sided };

// The associative algebra of multiplication operators: the span of the
// chosen operators L(a): x -> ax and/or R(a): x -> xa, closed under matrix
// product. Stored both as a subspace of the m x m matrix space (row-major
// flattening) and as an abstract algebra on that basis.
struct EnvelopingAlgebra {
    EnvelopeKind kind = EnvelopeKind::two_sided;
    Subspace carrier; // inside F^(m*m)
    Algebra alg;      // product = matrix product in the carrier basis
};

EnvelopingAlgebra enveloping(const Algebra &A, EnvelopeKind kind);

// Three renderings of supersolvability, reported side by side: the direct
// definition (a chain of 1-dim zero-product ideal steps exhausting A), a
// complete ideal flag in the two-sided envelope, and 1-dimensionality of
// every chief factor.
struct SupersolvableReport {
    bool supersolvable = false;
    bool envelope_flag = false;
    bool chief_factors_one_dim = false;
    bool all_agree = false;
};

SupersolvableReport supersolvable_equivalences(const Algebra &A,
                                               Caps caps = Caps::from_env());

// Free-rank dimension of the product of two associative varieties from the
// free-rank dimensions of the factors: (n-1) d1(n) d2(n) + n (d1(n) + d2(n)
// + 1). Sequences are 1-based in n; out-of-range n is an error.
long long product_variety_dimension(const std::vector<long long> &d1,
                                    const std::vector<long long> &d2,
                                    std::size_t n);

// Dimension of the free associative nilpotent-of-class-c algebra of rank n:
// the number of words of length 1..c in n letters, sum of n^i.
long long free_nilpotent_assoc_dim(std::size_t n, std::size_t c);

} // namespace vlab
