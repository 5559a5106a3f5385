#pragma once

// Free algebras of the variety generated by a finite algebra A, realized
// inside a direct power of A with one block per nonzero function from the
// generating set into A. Closing the n designated generators under the
// blockwise product yields the rank-n relatively free algebra; everything
// else here (dimension tables, graded dimensions, membership tests,
// generation checks, decompositions) is built on that closure.

#include <cstddef>
#include <optional>
#include <vector>

#include "varietylab/algebra_core.hpp"
#include "varietylab/caps.hpp"
#include "varietylab/poly_lang.hpp"

namespace vlab {

// The ambient direct power. Blocks are indexed by 1..|A|^n - 1; block b is a
// copy of A, and generator i carries in block b the element of A whose index
// (in odometer order) is the i-th base-|A| digit of b. Ambient vectors are
// the concatenations of their blocks; the algebra itself is never stored as
// one structure-constant tensor unless materialize() is called.
struct BirkhoffAmbient {
    Algebra A;
    std::size_t n = 0;
    std::size_t blocks = 0; // |A|^n - 1
    std::size_t dim = 0;    // blocks * A.m
    std::vector<Vec> generators;

    Vec mul(const Vec &u, const Vec &v) const;
    // Structure-constant form; needs dim^3 <= caps.tuple_eval entries.
    Algebra materialize(Caps caps = Caps::from_env()) const;
};

// Throws cap_exceeded (reporting the computed size) when blocks * dim A
// exceeds caps.ambient_dims.
BirkhoffAmbient birkhoff_algebra(const Algebra &A, std::size_t n,
                                 Caps caps = Caps::from_env());

struct FreeAlgebraRep {
    BirkhoffAmbient ambient;         // holds A, the rank and the generators
    std::vector<Vec> basis_vectors;  // independent, degree-then-discovery order
    std::vector<MonPtr> expressions; // expressions[i] evaluates to basis_vectors[i]
    Subspace span;                   // row space of basis_vectors
    // First dependences met during the closure, as polynomials in the
    // generators; every one of them is an identity of A.
    std::vector<NAPoly> relations;
    std::size_t max_witness_degree = 0;

    const Algebra &A() const { return ambient.A; }
    std::size_t rank() const { return ambient.n; }
    std::size_t dim() const { return basis_vectors.size(); }
};

// Breadth-first closure of the generators under the ambient product, so each
// basis vector is witnessed by a monomial of minimal degree.
FreeAlgebraRep free_algebra(const Algebra &A, std::size_t n,
                            Caps caps = Caps::from_env());

// Span of all pairwise products of elements of F.
Subspace free_square(const FreeAlgebraRep &F);

// Structure constants of F on basis_vectors (dim^3 <= caps.tuple_eval).
Algebra free_as_algebra(const FreeAlgebraRep &F, Caps caps = Caps::from_env());

struct DimensionTable {
    std::vector<std::size_t> d;  // d[i] = dim F_{i+1}
    std::vector<std::size_t> b;  // ambient bounds (dim A)(|A|^{i+1} - 1)
    std::vector<long long> d_k;  // graded dimensions, k = 1..n_max
    std::vector<double> roots;   // d(n)^{1/n}
};

// d(n) for n = 1..n_max, with d_k solved triangularly from
// d(k) = sum_{j<=k} C(k,j) d_j.
DimensionTable dimension_table(const Algebra &A, std::size_t n_max,
                               Caps caps = Caps::from_env());

// sum_k C(n,k) d_k: reproduces d(n) beyond the table's range whenever the
// graded dimensions above the table's rank vanish.
std::size_t predicted_dimension(const DimensionTable &T, std::size_t n);

// Minimal-ideal decomposition of the free algebra over a minimal generator
// algebra with nonzero product: (|A|^n - 1)/|Aut A| summands, each an ideal
// of F isomorphic to A, returned in ambient coordinates.
std::vector<Subspace> decompose_free_minimal(const FreeAlgebraRep &F,
                                             Caps caps = Caps::from_env());

// B (with a tuple generating it) lies in the variety generated by A iff the
// subalgebra of (ambient x B) generated by the pairs (generator_i, tuple_i)
// meets {0} x B trivially: it is then the graph of an epimorphism from the
// rank-n free algebra onto B.
bool in_variety(const Algebra &B, const std::vector<Vec> &tuple,
                const Algebra &A, Caps caps = Caps::from_env());

// Whether the ambient vectors Y (all inside F) generate F.
bool malcev_generation_check(const FreeAlgebraRep &F, const std::vector<Vec> &Y);

// socle_height(F_n) for n = 1..n_max.
std::vector<std::size_t> socle_heights_of_frees(const Algebra &A,
                                                std::size_t n_max,
                                                Caps caps = Caps::from_env());

struct ExponentReport {
    std::vector<double> roots;  // d(n)^{1/n}
    std::vector<double> ratios; // d(n)/d(n-1) for n >= 2
    // For simple A: least d(n)/(|A|^n dim A) over the range (the witness for
    // the lower bound c |A|^n dim A <= d(n)) and whether the strict upper
    // bound d(n) < |A|^n dim A held at every computed n.
    double witness_c = 0.0;
    bool upper_bound_holds = true;
};

ExponentReport exponent_report(const Algebra &A, std::size_t n_max,
                               Caps caps = Caps::from_env());

} // namespace vlab
