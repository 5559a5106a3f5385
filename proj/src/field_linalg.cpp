#include "varietylab/field_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "varietylab/caps.hpp"

namespace vlab {

Caps Caps::from_env() {
    Caps c;
    if (const char *s = std::getenv("VARIETYLAB_CAP")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) {
            c.subspace_enum = v;
            c.tuple_eval = v;
            c.ambient_dims = v;
            c.gl_order = v;
        }
    }
    return c;
}

namespace {

bool is_prime(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Polynomials over GF(p) encoded as integers: digit i in base p is the
// coefficient of x^i. Enough machinery to find an irreducible modulus and
// build the multiplication table of GF(p^k).
int poly_deg(long long f, int p) {
    int d = -1;
    for (int i = 0; f; ++i, f /= p)
        if (f % p)
            d = i;
    return d;
}

long long poly_mul_mod_p(long long f, long long g, int p) {
    // Coefficient arrays are tiny (degree < 16 here).
    std::vector<int> fc, gc;
    for (long long t = f; t; t /= p)
        fc.push_back(int(t % p));
    for (long long t = g; t; t /= p)
        gc.push_back(int(t % p));
    std::vector<int> r(fc.size() + gc.size(), 0);
    for (size_t i = 0; i < fc.size(); ++i)
        for (size_t j = 0; j < gc.size(); ++j)
            r[i + j] = (r[i + j] + fc[i] * gc[j]) % p;
    long long out = 0;
    for (size_t i = r.size(); i-- > 0;)
        out = out * p + r[i];
    return out;
}

// Remainder of f modulo g (g monic-normalized internally), coefficients mod p.
long long poly_rem(long long f, long long g, int p) {
    int dg = poly_deg(g, p);
    std::vector<int> fc;
    for (long long t = f; t; t /= p)
        fc.push_back(int(t % p));
    std::vector<int> gc;
    for (long long t = g; t; t /= p)
        gc.push_back(int(t % p));
    // Make g monic: multiply by the inverse of its leading coefficient.
    int lead = gc[dg];
    int lead_inv = 1;
    for (int i = 1; i < p; ++i)
        if (lead * i % p == 1)
            lead_inv = i;
    for (auto &c : gc)
        c = c * lead_inv % p;
    for (int i = int(fc.size()) - 1; i >= dg; --i) {
        int c = fc[i];
        if (!c)
            continue;
        for (int j = 0; j <= dg; ++j)
            fc[i - dg + j] = ((fc[i - dg + j] - c * gc[j]) % p + p * p) % p;
    }
    long long out = 0;
    for (int i = dg - 1; i >= 0; --i)
        out = out * p + (i < int(fc.size()) ? fc[i] : 0);
    return out;
}

bool poly_irreducible(long long f, int p) {
    int d = poly_deg(f, p);
    if (d < 1)
        return false;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int e = 1; 2 * e <= d; ++e) {
        long long lo = 1, monic_lead = 1;
        for (int i = 0; i < e; ++i)
            lo *= p; // p^e
        monic_lead = lo;
        for (long long tail = 0; tail < lo; ++tail) {
            long long g = monic_lead + tail;
            if (poly_rem(f, g, p) == 0)
                return false;
        }
    }
    return true;
}

} // namespace

Field::Field(int q) : q_(q) {
    if (q < 2 || q > 256)
        throw error("field order must be in 2..256, got " + std::to_string(q));
    // Factor q as p^k.
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int k = 0;
    int t = q;
    while (t > 1) {
        if (t % p != 0)
            throw error("field order " + std::to_string(q) + " is not a prime power");
        t /= p;
        ++k;
    }
    if (!is_prime(p))
        throw error("field order " + std::to_string(q) + " is not a prime power");
    p_ = p;
    k_ = k;

    add_.assign(size_t(q) * q, 0);
    mul_.assign(size_t(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    if (k == 1) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add_[size_t(a) * q + b] = fel((a + b) % p);
                mul_[size_t(a) * q + b] = fel(a * b % p);
            }
    } else {
        // Canonical modulus: first irreducible monic degree-k polynomial in
        // ascending order of its low-coefficient integer encoding.
        long long lead = 1;
        for (int i = 0; i < k; ++i)
            lead *= p; // p^k = x^k term
        long long mod_poly = -1;
        for (long long tail = 0; tail < lead; ++tail)
            if (poly_irreducible(lead + tail, p)) {
                mod_poly = lead + tail;
                break;
            }
        modulus_.resize(size_t(k) + 1);
        for (long long t2 = mod_poly, i = 0; i <= k; ++i, t2 /= p)
            modulus_[size_t(i)] = fel(t2 % p);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                // Addition is coefficientwise mod p.
                int s = 0, pw = 1, x = a, y = b;
                for (int i = 0; i < k; ++i) {
                    s += (x % p + y % p) % p * pw;
                    pw *= p;
                    x /= p;
                    y /= p;
                }
                add_[size_t(a) * q + b] = fel(s);
                mul_[size_t(a) * q + b] =
                    fel(poly_rem(poly_mul_mod_p(a, b, p), mod_poly, p));
            }
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (add_[size_t(a) * q + b] == 0)
                neg_[a] = fel(b);
            if (a && mul_[size_t(a) * q + b] == 1)
                inv_[a] = fel(b);
        }
}

fel Field::inv(fel a) const {
    if (a == 0)
        throw error("division by zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

fel Field::pow(fel a, std::uint64_t e) const {
    fel r = 1;
    fel base = a;
    while (e) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

fel Field::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0)
        r += p_;
    return fel(r);
}

void Mat::set_row(std::size_t r, const Vec &v) {
    if (v.size() != cols)
        throw error("row length mismatch");
    std::copy(v.begin(), v.end(), a.begin() + r * cols);
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec> &rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.set_row(i, rows[i]);
    return m;
}

RrefResult rref(const Field &F, Mat M) {
    RrefResult res;
    std::size_t r = 0;
    res.pivots.clear();
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t sel = r;
        while (sel < M.rows && M.at(sel, c) == 0)
            ++sel;
        if (sel == M.rows)
            continue;
        if (sel != r)
            for (std::size_t j = 0; j < M.cols; ++j)
                std::swap(M.a[sel * M.cols + j], M.a[r * M.cols + j]);
        fel piv_inv = F.inv(M.at(r, c));
        for (std::size_t j = c; j < M.cols; ++j)
            M.at(r, j) = F.mul(M.at(r, j), piv_inv);
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r)
                continue;
            fel f = M.at(i, c);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    // Drop zero rows so RREF output is canonical for the row space.
    Mat out(r, M.cols);
    std::copy(M.a.begin(), M.a.begin() + r * M.cols, out.a.begin());
    res.mat = std::move(out);
    return res;
}

Mat mat_mul(const Field &F, const Mat &A, const Mat &B) {
    if (A.cols != B.rows)
        throw error("matrix shape mismatch in multiply");
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            fel f = A.at(i, k);
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(f, B.at(k, j)));
        }
    return C;
}

Mat mat_transpose(const Mat &A) {
    Mat T(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            T.at(j, i) = A.at(i, j);
    return T;
}

std::optional<Mat> mat_inverse(const Field &F, const Mat &A) {
    if (A.rows != A.cols)
        return std::nullopt;
    std::size_t n = A.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(F, aug);
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] >= n))
        return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = rr.mat.at(i, n + j);
    return inv;
}

Mat right_nullspace(const Field &F, const Mat &A) {
    RrefResult rr = rref(F, A);
    std::vector<bool> is_pivot(A.cols, false);
    for (std::size_t c : rr.pivots)
        is_pivot[c] = true;
    std::vector<Vec> rows;
    for (std::size_t c = 0; c < A.cols; ++c) {
        if (is_pivot[c])
            continue;
        Vec v(A.cols, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < rr.rank; ++r)
            v[rr.pivots[r]] = F.neg(rr.mat.at(r, c));
        rows.push_back(std::move(v));
    }
    return Mat::from_rows(rows, A.cols);
}

Mat left_nullspace(const Field &F, const Mat &A) {
    return right_nullspace(F, mat_transpose(A));
}

Vec vec_add(const Field &F, const Vec &u, const Vec &v) {
    if (u.size() != v.size())
        throw error("vector length mismatch");
    Vec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        r[i] = F.add(u[i], v[i]);
    return r;
}

Vec vec_scale(const Field &F, fel c, const Vec &u) {
    Vec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        r[i] = F.mul(c, u[i]);
    return r;
}

Vec vec_mat(const Field &F, const Vec &u, const Mat &A) {
    if (u.size() != A.rows)
        throw error("vector/matrix shape mismatch");
    Vec r(A.cols, 0);
    for (std::size_t i = 0; i < A.rows; ++i) {
        fel f = u[i];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < A.cols; ++j)
            r[j] = F.add(r[j], F.mul(f, A.at(i, j)));
    }
    return r;
}

bool vec_is_zero(const Vec &u) {
    return std::all_of(u.begin(), u.end(), [](fel x) { return x == 0; });
}

Subspace subspace_zero(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat(0, ambient);
    return s;
}

Subspace subspace_full(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat::identity(ambient);
    return s;
}

Subspace subspace_from_rows(const Field &F, std::size_t ambient,
                            const std::vector<Vec> &rows) {
    for (const Vec &v : rows)
        if (v.size() != ambient)
            throw error("subspace vector has wrong ambient dimension");
    Subspace s;
    s.ambient = ambient;
    s.basis = rref(F, Mat::from_rows(rows, ambient)).mat;
    return s;
}

Subspace subspace_from_mat(const Field &F, const Mat &rows) {
    Subspace s;
    s.ambient = rows.cols;
    s.basis = rref(F, rows).mat;
    return s;
}

Subspace subspace_sum(const Field &F, const Subspace &U, const Subspace &V) {
    if (U.ambient != V.ambient)
        throw error("subspace ambient mismatch in sum");
    Mat stacked(U.dim() + V.dim(), U.ambient);
    std::copy(U.basis.a.begin(), U.basis.a.end(), stacked.a.begin());
    std::copy(V.basis.a.begin(), V.basis.a.end(),
              stacked.a.begin() + U.dim() * U.ambient);
    return subspace_from_mat(F, stacked);
}

Subspace subspace_intersect(const Field &F, const Subspace &U, const Subspace &V) {
    if (U.ambient != V.ambient)
        throw error("subspace ambient mismatch in intersection");
    std::size_t n = U.ambient;
    // Zassenhaus: rows [u|u] for u in U, [v|0] for v in V; after elimination
    // the rows with zero left half carry an intersection basis on the right.
    Mat Z(U.dim() + V.dim(), 2 * n);
    for (std::size_t i = 0; i < U.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Z.at(i, j) = U.basis.at(i, j);
            Z.at(i, n + j) = U.basis.at(i, j);
        }
    for (std::size_t i = 0; i < V.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            Z.at(U.dim() + i, j) = V.basis.at(i, j);
    RrefResult rr = rref(F, Z);
    std::vector<Vec> inter;
    for (std::size_t r = 0; r < rr.rank; ++r)
        if (rr.pivots[r] >= n)
            inter.push_back(Vec(rr.mat.a.begin() + r * 2 * n + n,
                                rr.mat.a.begin() + (r + 1) * 2 * n));
    return subspace_from_rows(F, n, inter);
}

bool subspace_contains(const Field &F, const Subspace &U, const Vec &v) {
    if (v.size() != U.ambient)
        throw error("vector/subspace ambient mismatch");
    Vec w = v;
    for (std::size_t r = 0; r < U.dim(); ++r) {
        // U is RREF: find this row's pivot and eliminate it from w.
        std::size_t c = 0;
        while (c < U.ambient && U.basis.at(r, c) == 0)
            ++c;
        if (c == U.ambient || w[c] == 0)
            continue;
        fel f = w[c];
        for (std::size_t j = c; j < U.ambient; ++j)
            w[j] = F.sub(w[j], F.mul(f, U.basis.at(r, j)));
    }
    return vec_is_zero(w);
}

bool subspace_leq(const Field &F, const Subspace &V, const Subspace &U) {
    for (std::size_t r = 0; r < V.dim(); ++r)
        if (!subspace_contains(F, U, V.basis.row(r)))
            return false;
    return true;
}

std::optional<Vec> coords_in(const Field &F, const Subspace &U, const Vec &v) {
    Vec w = v;
    Vec coeff(U.dim(), 0);
    for (std::size_t r = 0; r < U.dim(); ++r) {
        std::size_t c = 0;
        while (c < U.ambient && U.basis.at(r, c) == 0)
            ++c;
        if (c == U.ambient || w[c] == 0)
            continue;
        fel f = w[c]; // pivot entries are 1, so the coefficient is w[c]
        coeff[r] = f;
        for (std::size_t j = c; j < U.ambient; ++j)
            w[j] = F.sub(w[j], F.mul(f, U.basis.at(r, j)));
    }
    if (!vec_is_zero(w))
        return std::nullopt;
    return coeff;
}

Vec SpanBuilder::reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        fel f = v[pivots_[r]];
        if (f == 0)
            continue;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j)
            v[j] = F_->sub(v[j], F_->mul(f, rows_[r][j]));
    }
    return v;
}

bool SpanBuilder::add(const Vec &v) {
    if (v.size() != ambient_)
        throw error("SpanBuilder: wrong vector length");
    Vec w = reduce(v);
    std::size_t c = 0;
    while (c < ambient_ && w[c] == 0)
        ++c;
    if (c == ambient_)
        return false;
    fel inv = F_->inv(w[c]);
    for (std::size_t j = c; j < ambient_; ++j)
        w[j] = F_->mul(inv, w[j]);
    // Back-eliminate the new pivot from existing rows to keep full RREF.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        fel f = rows_[r][c];
        if (f == 0)
            continue;
        for (std::size_t j = c; j < ambient_; ++j)
            rows_[r][j] = F_->sub(rows_[r][j], F_->mul(f, w[j]));
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < c)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(w));
    pivots_.insert(pivots_.begin() + pos, c);
    return true;
}

bool SpanBuilder::contains(const Vec &v) const { return vec_is_zero(reduce(v)); }

Subspace SpanBuilder::subspace() const {
    Subspace s;
    s.ambient = ambient_;
    s.basis = Mat::from_rows(rows_, ambient_);
    return s;
}

void enumerate_vectors(const Field &F, std::size_t dim,
                       const std::function<bool(const Vec &)> &fn) {
    Vec v(dim, 0);
    const fel top = fel(F.q() - 1);
    for (;;) {
        if (!fn(v))
            return;
        std::size_t i = 0;
        while (i < dim && v[i] == top) {
            v[i] = 0;
            ++i;
        }
        if (i == dim)
            return;
        v[i] = fel(v[i] + 1);
    }
}

namespace {

// Enumerates RREF matrices with the given pivot columns by filling all free
// entries (row r, col c) with c > pivot[r], c not a pivot column.
bool emit_rref_fill(const Field &F, std::size_t ambient,
                    const std::vector<std::size_t> &pivots,
                    const std::function<bool(const Subspace &)> &fn) {
    std::size_t r = pivots.size();
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    std::vector<bool> is_pivot(ambient, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = pivots[i] + 1; c < ambient; ++c)
            if (!is_pivot[c])
                free_pos.push_back({i, c});
    Mat base(r, ambient);
    for (std::size_t i = 0; i < r; ++i)
        base.at(i, pivots[i]) = 1;
    bool keep_going = true;
    std::function<bool(const Vec &)> fill = [&](const Vec &vals) {
        Mat m = base;
        for (std::size_t t = 0; t < free_pos.size(); ++t)
            m.at(free_pos[t].first, free_pos[t].second) = vals[t];
        Subspace s;
        s.ambient = ambient;
        s.basis = std::move(m);
        keep_going = fn(s);
        return keep_going;
    };
    enumerate_vectors(F, free_pos.size(), fill);
    return keep_going;
}

bool emit_rref_pivots(const Field &F, std::size_t ambient, std::size_t rank,
                      std::size_t start, std::vector<std::size_t> &pivots,
                      const std::function<bool(const Subspace &)> &fn) {
    if (pivots.size() == rank)
        return emit_rref_fill(F, ambient, pivots, fn);
    for (std::size_t c = start; c < ambient; ++c) {
        pivots.push_back(c);
        bool cont = emit_rref_pivots(F, ambient, rank, c + 1, pivots, fn);
        pivots.pop_back();
        if (!cont)
            return false;
    }
    return true;
}

} // namespace

void enumerate_subspaces(const Field &F, std::size_t ambient,
                         const std::function<bool(const Subspace &)> &fn) {
    for (std::size_t rank = 0; rank <= ambient; ++rank) {
        std::vector<std::size_t> pivots;
        if (!emit_rref_pivots(F, ambient, rank, 0, pivots, fn))
            return;
    }
}

} // namespace vlab
