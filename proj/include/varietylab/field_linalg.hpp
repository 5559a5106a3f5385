#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "varietylab/error.hpp"

namespace vlab {

// A field element, encoded as an integer 0..q-1. For extension fields the
// encoding is polynomial: value sum d_i * p^i stands for sum d_i * g^i where
// g is the class of x modulo the canonical irreducible polynomial.
using fel = std::uint8_t;

using Vec = std::vector<fel>;

// GF(p^k) with q = p^k <= 256, all operations table-driven. The modulus for
// k > 1 is the first irreducible monic polynomial of degree k in ascending
// order of its coefficient-vector integer encoding (sum c_i * p^i), so the
// element encoding is reproducible across runs and platforms.
class Field {
  public:
    explicit Field(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int k() const { return k_; }

    // Coefficients c_0..c_{k-1} of the modulus x^k + c_{k-1}x^{k-1} + ... + c_0
    // (empty for prime fields).
    const std::vector<fel> &modulus() const { return modulus_; }

    fel add(fel a, fel b) const { return add_[size_t(a) * q_ + b]; }
    fel mul(fel a, fel b) const { return mul_[size_t(a) * q_ + b]; }
    fel neg(fel a) const { return neg_[a]; }
    fel sub(fel a, fel b) const { return add(a, neg(b)); }
    fel inv(fel a) const;
    fel div(fel a, fel b) const { return mul(a, inv(b)); }
    fel pow(fel a, std::uint64_t e) const;

    // Reduces an arbitrary integer (e.g. a signed literal from a parser) to
    // the element n * 1 of the prime subfield.
    fel from_int(long long n) const;

    bool operator==(const Field &o) const { return q_ == o.q_; }
    bool operator!=(const Field &o) const { return q_ != o.q_; }

  private:
    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<fel> modulus_;
    std::vector<fel> add_, mul_, neg_, inv_;
};

// Dense row-major matrix over a field (the field is passed to operations).
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<fel> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    fel &at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    fel at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    Vec row(std::size_t r) const {
        return Vec(a.begin() + r * cols, a.begin() + (r + 1) * cols);
    }
    void set_row(std::size_t r, const Vec &v);

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec> &rows, std::size_t cols);

    bool operator==(const Mat &o) const = default;
};

struct RrefResult {
    Mat mat;
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank = 0;
};

RrefResult rref(const Field &F, Mat M);

Mat mat_mul(const Field &F, const Mat &A, const Mat &B);
Mat mat_transpose(const Mat &A);
std::optional<Mat> mat_inverse(const Field &F, const Mat &A);

// Basis (as matrix rows) of { x : A x^T = 0 }, each row of length A.cols.
Mat right_nullspace(const Field &F, const Mat &A);
// Basis of { c : c A = 0 }, each row of length A.rows.
Mat left_nullspace(const Field &F, const Mat &A);

Vec vec_add(const Field &F, const Vec &u, const Vec &v);
Vec vec_scale(const Field &F, fel c, const Vec &u);
// Row vector times matrix.
Vec vec_mat(const Field &F, const Vec &u, const Mat &A);
bool vec_is_zero(const Vec &u);

// A subspace of F^ambient stored as a reduced-row-echelon basis matrix, so
// equality of subspaces is equality of matrices.
struct Subspace {
    std::size_t ambient = 0;
    Mat basis; // RREF, rows are basis vectors, basis.cols == ambient

    std::size_t dim() const { return basis.rows; }
    bool operator==(const Subspace &o) const = default;
};

Subspace subspace_zero(std::size_t ambient);
Subspace subspace_full(std::size_t ambient);
Subspace subspace_from_rows(const Field &F, std::size_t ambient,
                            const std::vector<Vec> &rows);
Subspace subspace_from_mat(const Field &F, const Mat &rows);

Subspace subspace_sum(const Field &F, const Subspace &U, const Subspace &V);
Subspace subspace_intersect(const Field &F, const Subspace &U, const Subspace &V);
bool subspace_contains(const Field &F, const Subspace &U, const Vec &v);
// True iff V is contained in U.
bool subspace_leq(const Field &F, const Subspace &V, const Subspace &U);
// Coefficients of v in U's basis rows, if v lies in U.
std::optional<Vec> coords_in(const Field &F, const Subspace &U, const Vec &v);

// Incrementally built row space: add vectors one at a time, keeping RREF.
// Used by every closure computation.
class SpanBuilder {
  public:
    SpanBuilder(const Field &F, std::size_t ambient) : F_(&F), ambient_(ambient) {}

    // Returns true iff v was independent of the current span (rank grew).
    bool add(const Vec &v);
    bool contains(const Vec &v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    Subspace subspace() const;

  private:
    const Field *F_;
    std::size_t ambient_;
    std::vector<Vec> rows_;            // maintained in RREF
    std::vector<std::size_t> pivots_;  // pivot column per row, strictly increasing
    Vec reduce(Vec v) const;
};

// Calls fn for every vector of F^dim (q^dim of them) in odometer order,
// starting from the zero vector. Stops early if fn returns false.
void enumerate_vectors(const Field &F, std::size_t dim,
                       const std::function<bool(const Vec &)> &fn);

// Calls fn for every subspace of F^ambient, enumerated by rank and pivot
// pattern directly in RREF form. Stops early if fn returns false.
void enumerate_subspaces(const Field &F, std::size_t ambient,
                         const std::function<bool(const Subspace &)> &fn);

} // namespace vlab
