#pragma once

// Finite-dimensional algebras over a finite field, given by structure
// constants: e_i e_j = sum_l t[i][j][l] e_l. No identity (associativity,
// commutativity, ...) is assumed; any tensor is a valid algebra.

#include <cstddef>
#include <optional>
#include <vector>

#include "varietylab/field_linalg.hpp"

namespace vlab {

struct Algebra {
    Field F;
    std::size_t m = 0;      // dimension; m = 0 is the zero algebra
    std::vector<fel> t;     // m^3 entries, index (i*m + j)*m + l

    fel c(std::size_t i, std::size_t j, std::size_t l) const {
        return t[(i * m + j) * m + l];
    }
    // The product e_i e_j as a coordinate vector.
    Vec basis_product(std::size_t i, std::size_t j) const {
        return Vec(t.begin() + (i * m + j) * m, t.begin() + (i * m + j + 1) * m);
    }
};

// Validates tensor shape and entry range.
Algebra make_algebra(const Field &F, std::size_t m, std::vector<fel> tensor);
// table[i][j] = coordinate vector of e_i e_j.
Algebra algebra_from_table(const Field &F,
                           const std::vector<std::vector<Vec>> &table);
Algebra zero_algebra(const Field &F, std::size_t m);

bool algebra_equal(const Algebra &A, const Algebra &B);

// Bilinear product of coordinate vectors.
Vec alg_mul(const Algebra &A, const Vec &u, const Vec &v);

// Matrix of x -> v*x (left_mult) or x -> x*v (right_mult) acting on row
// vectors by x -> x * M.
Mat left_mult_matrix(const Algebra &A, const Vec &v);
Mat right_mult_matrix(const Algebra &A, const Vec &v);

// Span of all products l*m, l in L, m in M.
Subspace subspace_product(const Algebra &A, const Subspace &L, const Subspace &M);

enum class SeriesKind { power, depth, upper_annihilator, commutator, socle };

struct SeriesResult {
    SeriesKind kind;
    std::vector<Subspace> terms; // nested; descending or ascending by kind
    std::size_t length = 0;      // kind-specific index (see each series fn)
    bool terminated = false;     // descending kinds reached 0 / ascending reached A
};

// Descending powers A = A^1 >= A^2 >= ... with A^k = sum_{s+t=k} A^s A^t,
// listed until the first stabilized term. nilpotency_class = least c with
// A^{c+1} = 0 (0 for the 0-dim algebra, 1 for zero multiplication), absent
// when the series stabilizes at a nonzero subspace.
SeriesResult power_series(const Algebra &A);
std::optional<std::size_t> nilpotency_class(const Algebra &A);

// A(0) = A, A(i) = A*A(i-1) + A(i-1)*A + A(i-1)*A(i-1); depth = least d with
// A(d) = 0.
SeriesResult depth_series(const Algebra &A);
std::optional<std::size_t> nilpotent_depth(const Algebra &A);

// Two-sided annihilator {a : ab = ba = 0 for all b}.
Subspace annihilator(const Algebra &A);

// Ascending I_0 = 0 <= I_1 <= ... with I_j/I_{j-1} the annihilator of
// A/I_{j-1}; length = least j with I_j = A (only when the series gets there).
SeriesResult upper_annihilator_series(const Algebra &A);

// A^{(1)} = A, A^{(k)} = (A^{(k-1)})^2; solvable length = least l with
// A^{(l+1)} = 0.
SeriesResult commutator_series(const Algebra &A);
std::optional<std::size_t> solvable_length(const Algebra &A);

bool is_nilpotent(const Algebra &A);
bool is_solvable(const Algebra &A);

// Least ideal (resp. subalgebra) containing the given vectors.
Subspace ideal_generated(const Algebra &A, const std::vector<Vec> &gens);
Subspace subalgebra_generated(const Algebra &A, const std::vector<Vec> &gens);

// All minimal (nonzero) ideals, deduplicated, sorted by basis matrix.
std::vector<Subspace> minimal_ideals(const Algebra &A);
// The intersection of all nonzero ideals, when it is nonzero (equivalently,
// when A has exactly one minimal ideal).
std::optional<Subspace> monolith(const Algebra &A);
// Ascending S_0 = 0 <= S_1 <= ... with S_i/S_{i-1} = socle(A/S_{i-1});
// always reaches A for m >= 1; height = least i with S_i = A.
SeriesResult socle_series(const Algebra &A);
std::size_t socle_height(const Algebra &A);

// A^2 != 0 and no ideals besides 0 and A.
bool is_simple(const Algebra &A);
// Nonzero and without proper nonzero subalgebras (equivalently: every
// nonzero element generates A).
bool is_minimal_algebra(const Algebra &A);
// Zero multiplication.
bool is_abelian(const Algebra &A);
bool is_commutative(const Algebra &A);
// Generated by a single element.
bool is_one_generated(const Algebra &A);

bool is_subalgebra(const Algebra &A, const Subspace &S);
bool is_ideal(const Algebra &A, const Subspace &S);

struct Quotient {
    Algebra alg;  // dimension m - dim(ideal)
    Subspace ideal;
    Mat proj;     // m x (m-r): v -> v*proj is the projection A -> A/I
    Mat lift;     // (m-r) x m: a section of proj (coset representatives)
};

// Requires is_ideal(A, I). Basis of A/I: unit vectors of A at the non-pivot
// coordinates of I's RREF basis.
Quotient quotient(const Algebra &A, const Subspace &I);

Algebra direct_sum(const Algebra &A, const Algebra &B);

// The algebra structure induced on a subalgebra S, in S's RREF basis.
Algebra restrict_to_subalgebra(const Algebra &A, const Subspace &S);

// The isomorphic copy of A in the basis f_i = sum_a g[i][a] e_a; g must be
// invertible. New constants: c'_{ij}^l = sum g_{ia} g_{jb} c_{ab}^c ginv_{cl}.
Algebra transform_algebra(const Algebra &A, const Mat &g);

// Exhaustive lists in RREF form; require q^m <= caps.subspace_enum.
std::vector<Subspace> subalgebras(const Algebra &A);
std::vector<Subspace> ideals(const Algebra &A);

// A maximal strictly ascending chain of ideals 0 = J_0 < J_1 < ... < J_s = A,
// returned as factor pairs (J_{i-1}, J_i); each J_i/J_{i-1} is a minimal
// ideal of A/J_{i-1}. Built greedily from the lexicographically least
// minimal ideal at each step, so the output is deterministic.
std::vector<std::pair<Subspace, Subspace>> chief_series(const Algebra &A);

// Some (equivalently, by induction: any greedy) chain of 1-dim zero-mult
// ideal steps exhausts A.
bool is_supersolvable(const Algebra &A);

} // namespace vlab
