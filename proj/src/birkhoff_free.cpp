#include "varietylab/birkhoff_free.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "varietylab/error.hpp"
#include "varietylab/morphisms.hpp"

namespace vlab {

namespace {

std::vector<Vec> all_vectors(const Field &F, std::size_t dim) {
    std::vector<Vec> out;
    enumerate_vectors(F, dim, [&](const Vec &v) {
        out.push_back(v);
        return true;
    });
    return out;
}

// lambda with lambda * rows = w, when the rows are independent and w lies in
// their span.
std::optional<Vec> coords_in_row_list(const Field &F, const std::vector<Vec> &rows,
                                      std::size_t dim, const Vec &w) {
    const std::size_t k = rows.size();
    Mat M(dim, k + 1);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t j = 0; j < k; ++j)
            M.at(r, j) = rows[j][r];
        M.at(r, k) = w[r];
    }
    RrefResult rr = rref(F, std::move(M));
    Vec lambda(k, 0);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == k)
            return std::nullopt;
        lambda[rr.pivots[i]] = rr.mat.at(i, k);
    }
    return lambda;
}

// Closure of the seeds under an arbitrary bilinear product on F^dim.
Subspace bilinear_closure(const Field &F, std::size_t dim,
                          const std::vector<Vec> &seeds,
                          const std::function<Vec(const Vec &, const Vec &)> &mul) {
    SpanBuilder sb(F, dim);
    std::vector<Vec> fresh;
    auto add = [&](const Vec &v) {
        if (sb.add(v))
            fresh.push_back(v);
    };
    for (const Vec &s : seeds)
        add(s);
    std::vector<Vec> seen;
    while (!fresh.empty()) {
        Vec v = std::move(fresh.back());
        fresh.pop_back();
        for (const Vec &u : seen) {
            add(mul(u, v));
            add(mul(v, u));
        }
        add(mul(v, v));
        seen.push_back(std::move(v));
    }
    return sb.subspace();
}

} // namespace

Vec BirkhoffAmbient::mul(const Vec &u, const Vec &v) const {
    const std::size_t m = A.m;
    Vec out(dim, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t off = b * m;
        for (std::size_t i = 0; i < m; ++i) {
            fel ui = u[off + i];
            if (ui == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j) {
                fel c = A.F.mul(ui, v[off + j]);
                if (c == 0)
                    continue;
                for (std::size_t l = 0; l < m; ++l)
                    out[off + l] =
                        A.F.add(out[off + l], A.F.mul(c, A.c(i, j, l)));
            }
        }
    }
    return out;
}

Algebra BirkhoffAmbient::materialize(Caps caps) const {
    double bits = 3.0 * std::log2(double(dim == 0 ? 1 : dim));
    if (bits > std::log2(double(caps.tuple_eval)))
        throw cap_exceeded("materializing needs dim^3 <= " +
                           std::to_string(caps.tuple_eval) +
                           " tensor entries, got dim " + std::to_string(dim) +
                           " (set VARIETYLAB_CAP to override)");
    std::vector<fel> t(dim * dim * dim, 0);
    const std::size_t m = A.m;
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t l = 0; l < m; ++l)
                    t[((b * m + i) * dim + (b * m + j)) * dim + (b * m + l)] =
                        A.c(i, j, l);
    return make_algebra(A.F, dim, std::move(t));
}

BirkhoffAmbient birkhoff_algebra(const Algebra &A, std::size_t n, Caps caps) {
    BirkhoffAmbient amb{A, n, 0, 0, {}};
    const double q = double(A.F.q());
    double size_bits = double(n) * double(A.m) * std::log2(q);
    if (size_bits + std::log2(double(A.m ? A.m : 1)) >
        std::log2(double(caps.ambient_dims)) + 1)
        throw cap_exceeded("ambient needs (dim A)(|A|^n - 1) <= " +
                           std::to_string(caps.ambient_dims) + ", got about 2^" +
                           std::to_string(size_bits) + " blocks (set VARIETYLAB_CAP "
                           "to override)");
    std::uint64_t card = 1;
    std::uint64_t sz = 1;
    for (std::size_t i = 0; i < A.m; ++i)
        sz *= A.F.q();
    for (std::size_t i = 0; i < n; ++i)
        card *= sz;
    amb.blocks = std::size_t(card - 1);
    amb.dim = amb.blocks * A.m;
    if (amb.dim > caps.ambient_dims)
        throw cap_exceeded("ambient needs (dim A)(|A|^n - 1) <= " +
                           std::to_string(caps.ambient_dims) + ", got " +
                           std::to_string(amb.dim) +
                           " (set VARIETYLAB_CAP to override)");
    std::vector<Vec> elems = all_vectors(A.F, A.m);
    amb.generators.assign(n, Vec(amb.dim, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t stride = 1;
        for (std::size_t s = 0; s < i; ++s)
            stride *= sz;
        for (std::size_t b = 1; b <= amb.blocks; ++b) {
            const Vec &e = elems[std::size_t((b / stride) % sz)];
            for (std::size_t l = 0; l < A.m; ++l)
                amb.generators[i][(b - 1) * A.m + l] = e[l];
        }
    }
    return amb;
}

FreeAlgebraRep free_algebra(const Algebra &A, std::size_t n, Caps caps) {
    FreeAlgebraRep F{birkhoff_algebra(A, n, caps), {}, {}, {}, {}, 0};
    SpanBuilder sb(A.F, F.ambient.dim);
    struct Item {
        Vec v;
        MonPtr mon;
        std::size_t deg;
    };
    std::vector<Item> items;
    auto try_add = [&](Vec v, MonPtr mon, std::size_t deg) {
        if (sb.add(v)) {
            items.push_back({std::move(v), std::move(mon), deg});
            if (deg > F.max_witness_degree)
                F.max_witness_degree = deg;
            return;
        }
        if (F.relations.size() >= 10)
            return;
        // A dependence w(x) = sum lambda_i (basis expression)_i gives an
        // identity of A: subtract and record.
        std::vector<Vec> rows;
        rows.reserve(items.size());
        for (const Item &it : items)
            rows.push_back(it.v);
        auto lambda = coords_in_row_list(A.F, rows, F.ambient.dim, v);
        if (!lambda)
            return;
        std::vector<std::pair<fel, MonPtr>> terms{{fel(1), mon}};
        for (std::size_t i = 0; i < items.size(); ++i)
            if ((*lambda)[i] != 0)
                terms.push_back({A.F.neg((*lambda)[i]), items[i].mon});
        NAPoly rel = make_poly(A.F, std::move(terms));
        if (!rel.is_zero())
            F.relations.push_back(std::move(rel));
    };
    for (std::size_t i = 0; i < n; ++i)
        try_add(F.ambient.generators[i], mon_var(int(i)), 1);
    bool full = sb.dim() == F.ambient.dim;
    for (std::size_t d = 2; !items.empty() && !full; ++d) {
        if (d > 2 * items.back().deg)
            break;
        const std::size_t count = items.size();
        for (std::size_t i = 0; i < count && !full; ++i)
            for (std::size_t j = 0; j < count && !full; ++j) {
                if (items[i].deg + items[j].deg != d)
                    continue;
                try_add(F.ambient.mul(items[i].v, items[j].v),
                        mon_mul(items[i].mon, items[j].mon), d);
                full = sb.dim() == F.ambient.dim;
            }
    }
    for (Item &it : items) {
        F.basis_vectors.push_back(std::move(it.v));
        F.expressions.push_back(std::move(it.mon));
    }
    F.span = sb.subspace();
    return F;
}

Subspace free_square(const FreeAlgebraRep &F) {
    SpanBuilder sb(F.A().F, F.ambient.dim);
    for (const Vec &u : F.basis_vectors)
        for (const Vec &v : F.basis_vectors)
            sb.add(F.ambient.mul(u, v));
    return sb.subspace();
}

Algebra free_as_algebra(const FreeAlgebraRep &F, Caps caps) {
    const std::size_t k = F.dim();
    double bits = 3.0 * std::log2(double(k == 0 ? 1 : k));
    if (bits > std::log2(double(caps.tuple_eval)))
        throw cap_exceeded("free algebra form needs dim^3 <= " +
                           std::to_string(caps.tuple_eval) + ", got dim " +
                           std::to_string(k) + " (set VARIETYLAB_CAP to override)");
    std::vector<fel> t(k * k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Vec w = F.ambient.mul(F.basis_vectors[i], F.basis_vectors[j]);
            auto lambda =
                coords_in_row_list(F.A().F, F.basis_vectors, F.ambient.dim, w);
            if (!lambda)
                throw error("free algebra basis is not closed under products");
            for (std::size_t l = 0; l < k; ++l)
                t[(i * k + j) * k + l] = (*lambda)[l];
        }
    return make_algebra(F.A().F, k, std::move(t));
}

DimensionTable dimension_table(const Algebra &A, std::size_t n_max, Caps caps) {
    DimensionTable T;
    for (std::size_t n = 1; n <= n_max; ++n) {
        FreeAlgebraRep F = free_algebra(A, n, caps);
        T.d.push_back(F.dim());
        T.b.push_back(F.ambient.dim);
        T.roots.push_back(std::pow(double(F.dim()), 1.0 / double(n)));
    }
    // Triangular solve of d(k) = sum_{j<=k} C(k,j) d_j.
    std::vector<std::vector<long long>> C(n_max + 1,
                                          std::vector<long long>(n_max + 1, 0));
    for (std::size_t i = 0; i <= n_max; ++i) {
        C[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0);
    }
    for (std::size_t k = 1; k <= n_max; ++k) {
        long long v = (long long)(T.d[k - 1]);
        for (std::size_t j = 1; j < k; ++j)
            v -= C[k][j] * T.d_k[j - 1];
        T.d_k.push_back(v);
    }
    return T;
}

std::size_t predicted_dimension(const DimensionTable &T, std::size_t n) {
    // C(n,k) grown row by row to avoid factorials.
    std::vector<long long> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j > 0; --j)
            row[j] += row[j - 1];
    long long total = 0;
    for (std::size_t k = 1; k <= T.d_k.size() && k <= n; ++k)
        total += row[k] * T.d_k[k - 1];
    return std::size_t(total);
}

std::vector<Subspace> decompose_free_minimal(const FreeAlgebraRep &F, Caps caps) {
    const Algebra &A = F.A();
    if (!is_minimal_algebra(A) || is_abelian(A))
        throw error("decompose_free_minimal: generator algebra must be minimal "
                    "with nonzero product");
    const Field &Fq = A.F;
    const std::size_t k = F.dim();
    const std::size_t m = A.m;

    // Kernel of the projection onto each block, in basis coordinates.
    std::vector<Subspace> kerns;
    kerns.reserve(F.ambient.blocks);
    for (std::size_t b = 0; b < F.ambient.blocks; ++b) {
        Mat slice(k, m);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < m; ++c)
                slice.at(r, c) = F.basis_vectors[r][b * m + c];
        if (rref(Fq, slice).rank != m)
            throw error("decompose_free_minimal: a block projection is not onto");
        kerns.push_back(subspace_from_mat(Fq, left_nullspace(Fq, slice)));
    }

    // Blocks with equal kernels carry the same summand.
    std::vector<Subspace> distinct;
    for (const Subspace &K : kerns) {
        bool found = false;
        for (const Subspace &D : distinct)
            if (D == K)
                found = true;
        if (!found)
            distinct.push_back(K);
    }

    Algebra Falg = free_as_algebra(F, caps);
    std::size_t dim_sum = 0;
    std::vector<Subspace> out;
    for (std::size_t g = 0; g < distinct.size(); ++g) {
        Subspace delta = subspace_full(k);
        for (std::size_t h = 0; h < distinct.size(); ++h)
            if (h != g)
                delta = subspace_intersect(Fq, delta, distinct[h]);
        if (delta.dim() != m || !is_ideal(Falg, delta))
            throw error("decompose_free_minimal: summand structure broke down");
        if (!find_isomorphism(restrict_to_subalgebra(Falg, delta), A, caps))
            throw error("decompose_free_minimal: summand not isomorphic to A");
        dim_sum += delta.dim();
        // Back to ambient coordinates.
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < delta.basis.rows; ++r) {
            Vec v(F.ambient.dim, 0);
            for (std::size_t j = 0; j < k; ++j) {
                fel c = delta.basis.at(r, j);
                if (c == 0)
                    continue;
                for (std::size_t l = 0; l < F.ambient.dim; ++l)
                    v[l] = Fq.add(v[l], Fq.mul(c, F.basis_vectors[j][l]));
            }
            rows.push_back(std::move(v));
        }
        out.push_back(subspace_from_rows(Fq, F.ambient.dim, rows));
    }
    if (dim_sum != k)
        throw error("decompose_free_minimal: summands do not fill the algebra");
    std::size_t expected = (F.ambient.blocks) / automorphism_group(A, caps).order;
    if (out.size() != expected)
        throw error("decompose_free_minimal: summand count mismatch");
    return out;
}

bool in_variety(const Algebra &B, const std::vector<Vec> &tuple, const Algebra &A,
                Caps caps) {
    if (!(A.F == B.F))
        throw error("in_variety: field mismatch");
    for (const Vec &t : tuple)
        if (t.size() != B.m)
            throw error("in_variety: tuple vector length mismatch");
    if (subalgebra_generated(B, tuple).dim() != B.m)
        throw error("in_variety: the tuple does not generate B");
    BirkhoffAmbient amb = birkhoff_algebra(A, tuple.size(), caps);
    std::vector<Vec> seeds;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        Vec s = amb.generators[i];
        s.insert(s.end(), tuple[i].begin(), tuple[i].end());
        seeds.push_back(std::move(s));
    }
    auto mul = [&](const Vec &u, const Vec &v) {
        Vec ua(u.begin(), u.begin() + amb.dim), ub(u.begin() + amb.dim, u.end());
        Vec va(v.begin(), v.begin() + amb.dim), vb(v.begin() + amb.dim, v.end());
        Vec p = amb.mul(ua, va);
        Vec pb = alg_mul(B, ub, vb);
        p.insert(p.end(), pb.begin(), pb.end());
        return p;
    };
    Subspace graph = bilinear_closure(B.F, amb.dim + B.m, seeds, mul);
    for (std::size_t r = 0; r < graph.basis.rows; ++r) {
        bool zero_left = true;
        for (std::size_t c = 0; c < amb.dim && zero_left; ++c)
            zero_left = graph.basis.at(r, c) == 0;
        if (zero_left)
            return false;
    }
    return true;
}

bool malcev_generation_check(const FreeAlgebraRep &F, const std::vector<Vec> &Y) {
    const Field &Fq = F.A().F;
    for (const Vec &y : Y)
        if (y.size() != F.ambient.dim || !subspace_contains(Fq, F.span, y))
            throw error("malcev_generation_check: Y must lie in F");
    Subspace closed = bilinear_closure(
        Fq, F.ambient.dim, Y,
        [&](const Vec &u, const Vec &v) { return F.ambient.mul(u, v); });
    return closed.dim() == F.dim();
}

std::vector<std::size_t> socle_heights_of_frees(const Algebra &A, std::size_t n_max,
                                                Caps caps) {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= n_max; ++n)
        out.push_back(socle_height(free_as_algebra(free_algebra(A, n, caps), caps)));
    return out;
}

ExponentReport exponent_report(const Algebra &A, std::size_t n_max, Caps caps) {
    DimensionTable T = dimension_table(A, n_max, caps);
    ExponentReport R;
    R.roots = T.roots;
    for (std::size_t i = 1; i < T.d.size(); ++i)
        R.ratios.push_back(T.d[i - 1] == 0 ? 0.0
                                           : double(T.d[i]) / double(T.d[i - 1]));
    if (is_simple(A)) {
        double card = std::pow(double(A.F.q()), double(A.m));
        R.witness_c = 0.0;
        for (std::size_t n = 1; n <= T.d.size(); ++n) {
            double bound = std::pow(card, double(n)) * double(A.m);
            double ratio = double(T.d[n - 1]) / bound;
            if (n == 1 || ratio < R.witness_c)
                R.witness_c = ratio;
            if (double(T.d[n - 1]) >= bound)
                R.upper_bound_holds = false;
        }
    }
    return R;
}

// Membership of the two one-dimensional algebras, decided on the rank-1 free
// algebra: the zero-multiplication one embeds iff F_1 has a proper square
// (then F_1 maps onto a nonzero algebra with zero product), and the field
// itself iff the graph test admits an idempotent generator image.
bool variety_contains_one_dim(const Algebra &A, OneDimKind which) {
    if (which == OneDimKind::zero_mult) {
        FreeAlgebraRep F1 = free_algebra(A, 1);
        if (F1.dim() == 0)
            return false;
        return free_square(F1).dim() < F1.dim();
    }
    Algebra G = algebra_from_table(A.F, {{{1}}});
    return in_variety(G, {Vec{1}}, A);
}

} // namespace vlab
