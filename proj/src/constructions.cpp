#include "varietylab/constructions.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "varietylab/error.hpp"
#include "varietylab/morphisms.hpp"

namespace vlab {

namespace {

Vec flatten(const Mat &M) { return M.a; }

Mat unflatten(const Vec &v, std::size_t m) {
    Mat M(m, m);
    M.a = v;
    return M;
}

// Span of the seeds closed under matrix product, inside F^(m*m).
Subspace matrix_closure(const Field &F, std::size_t m,
                        const std::vector<Mat> &seeds) {
    SpanBuilder sb(F, m * m);
    std::vector<Vec> fresh, seen;
    auto add = [&](const Vec &v) {
        if (sb.add(v))
            fresh.push_back(v);
    };
    for (const Mat &s : seeds)
        add(flatten(s));
    while (!fresh.empty()) {
        Vec v = std::move(fresh.back());
        fresh.pop_back();
        Mat mv = unflatten(v, m);
        for (const Vec &u : seen) {
            Mat mu = unflatten(u, m);
            add(flatten(mat_mul(F, mu, mv)));
            add(flatten(mat_mul(F, mv, mu)));
        }
        add(flatten(mat_mul(F, mv, mv)));
        seen.push_back(std::move(v));
    }
    return sb.subspace();
}

bool has_complete_ideal_flag(const Algebra &B) {
    if (B.m == 0)
        return true;
    // Try every 1-dim ideal as the bottom step; dedupe scalar multiples by
    // insisting the leading coordinate is 1.
    bool found = false;
    enumerate_vectors(B.F, B.m, [&](const Vec &v) {
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0)
            ++lead;
        if (lead == v.size() || v[lead] != 1)
            return true;
        Subspace I = subspace_from_rows(B.F, B.m, {v});
        if (!is_ideal(B, I))
            return true;
        if (has_complete_ideal_flag(quotient(B, I).alg)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace

SemidirectData semidirect_sum(const Algebra &C, const Subspace &A_ideal) {
    const Field &F = C.F;
    if (A_ideal.ambient != C.m || !is_ideal(C, A_ideal))
        throw error("semidirect_sum: the given subspace is not an ideal");
    if (subspace_product(C, A_ideal, A_ideal).dim() != 0)
        throw error("semidirect_sum: the ideal is not abelian");

    Quotient B = quotient(C, A_ideal);
    const std::size_t r = B.alg.m, s = A_ideal.dim(), m = C.m;

    // Tensor of S on (C/A) + A.
    std::vector<fel> t((r + s) * (r + s) * (r + s), 0);
    auto put = [&](std::size_t i, std::size_t j, std::size_t l, fel c) {
        t[(i * (r + s) + j) * (r + s) + l] = c;
    };
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t l = 0; l < r; ++l)
                put(i, j, l, B.alg.c(i, j, l));
    auto ideal_coords = [&](const Vec &w) {
        auto c = coords_in(F, A_ideal, w);
        if (!c)
            throw error("semidirect_sum: product left the ideal");
        return *c;
    };
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            Vec lift_i = B.lift.row(i);
            Vec cross = ideal_coords(alg_mul(C, lift_i, A_ideal.basis.row(j)));
            for (std::size_t l = 0; l < s; ++l)
                put(i, r + j, r + l, cross[l]);
            cross = ideal_coords(alg_mul(C, A_ideal.basis.row(j), lift_i));
            for (std::size_t l = 0; l < s; ++l)
                put(r + j, i, r + l, cross[l]);
        }
    Algebra S = make_algebra(F, r + s, std::move(t));

    // Certificate: T = {(x, y) : x - y in A} inside C x C, modulo diag(A).
    Algebra CC = direct_sum(C, C);
    std::vector<Vec> t_rows;
    for (std::size_t i = 0; i < m; ++i) {
        Vec d(2 * m, 0);
        d[i] = 1;
        d[m + i] = 1;
        t_rows.push_back(std::move(d));
    }
    for (std::size_t j = 0; j < s; ++j) {
        Vec d(2 * m, 0);
        for (std::size_t c = 0; c < m; ++c)
            d[c] = A_ideal.basis.at(j, c);
        t_rows.push_back(std::move(d));
    }
    Subspace T = subspace_from_rows(F, 2 * m, t_rows);
    Algebra Talg = restrict_to_subalgebra(CC, T);
    std::vector<Vec> diag_rows;
    for (std::size_t j = 0; j < s; ++j) {
        Vec d(2 * m, 0);
        for (std::size_t c = 0; c < m; ++c)
            d[c] = d[m + c] = A_ideal.basis.at(j, c);
        auto tc = coords_in(F, T, d);
        if (!tc)
            throw error("semidirect_sum: internal certificate failure");
        diag_rows.push_back(*tc);
    }
    Quotient R = quotient(Talg, subspace_from_rows(F, m + s, diag_rows));

    auto to_target = [&](const Vec &left, const Vec &right) {
        Vec pair(2 * m, 0);
        for (std::size_t c = 0; c < m; ++c) {
            pair[c] = left[c];
            pair[m + c] = right[c];
        }
        auto tc = coords_in(F, T, pair);
        if (!tc)
            throw error("semidirect_sum: internal certificate failure");
        return vec_mat(F, *tc, R.proj);
    };
    Mat phi(r + s, R.alg.m);
    for (std::size_t i = 0; i < r; ++i) {
        Vec c = B.lift.row(i);
        phi.set_row(i, to_target(c, c));
    }
    for (std::size_t j = 0; j < s; ++j)
        phi.set_row(r + j, to_target(A_ideal.basis.row(j), Vec(m, 0)));

    Morphism wit{&S, &R.alg, phi};
    if (!is_homomorphism(wit) || !mat_inverse(F, phi))
        throw error("semidirect_sum: certificate verification failed");

    return SemidirectData{C, A_ideal, std::move(S), std::move(R.alg),
                          std::move(phi)};
}

FreeProductData free_product_powers(const Algebra &A, std::size_t k,
                                    std::size_t l, Caps caps) {
    if (!is_simple(A))
        throw error("free_product_powers: generator algebra is not simple");
    if (!is_minimal_algebra(A))
        throw error("free_product_powers: generator algebra is not minimal");
    if (automorphism_group(A, caps).order != 1)
        throw error("free_product_powers: generator algebra is not rigid");

    const std::size_t m = A.m;
    const std::size_t cells = (k + 1) * (l + 1) - 1;
    // Cell (i, i') != (0, 0) gets block index i*(l+1) + i' - 1.
    auto cell = [&](std::size_t i, std::size_t ip) {
        return i * (l + 1) + ip - 1;
    };
    Algebra D = direct_power(A, cells);
    Algebra Bk = direct_power(A, k);
    Algebra Cl = direct_power(A, l);

    Mat embB(k * m, cells * m), embC(l * m, cells * m);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t ip = 0; ip <= l; ++ip)
                embB.at(j * m + t, cell(j + 1, ip) * m + t) = 1;
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t i = 0; i <= k; ++i)
                embC.at(j * m + t, cell(i, j + 1) * m + t) = 1;

    Morphism mb{&Bk, &D, embB}, mc{&Cl, &D, embC};
    if (!is_homomorphism(mb) || !is_homomorphism(mc))
        throw error("free_product_powers: embedding is not a homomorphism");
    if (rref(A.F, embB).rank != k * m || rref(A.F, embC).rank != l * m)
        throw error("free_product_powers: embedding is not injective");
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < embB.rows; ++r)
        gens.push_back(embB.row(r));
    for (std::size_t r = 0; r < embC.rows; ++r)
        gens.push_back(embC.row(r));
    if (subalgebra_generated(D, gens).dim() != D.m)
        throw error("free_product_powers: images do not generate the product");

    return FreeProductData{std::move(D), std::move(Bk), std::move(Cl),
                           std::move(embB), std::move(embC)};
}

EnvelopingAlgebra enveloping(const Algebra &A, EnvelopeKind kind) {
    const Field &F = A.F;
    const std::size_t m = A.m;
    std::vector<Mat> seeds;
    for (std::size_t i = 0; i < m; ++i) {
        Vec e(m, 0);
        e[i] = 1;
        if (kind != EnvelopeKind::right)
            seeds.push_back(left_mult_matrix(A, e));
        if (kind != EnvelopeKind::left)
            seeds.push_back(right_mult_matrix(A, e));
    }
    Subspace carrier = matrix_closure(F, m, seeds);

    const std::size_t d = carrier.dim();
    std::vector<fel> t(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat prod = mat_mul(F, unflatten(carrier.basis.row(i), m),
                               unflatten(carrier.basis.row(j), m));
            auto c = coords_in(F, carrier, flatten(prod));
            if (!c)
                throw error("enveloping: carrier is not closed under products");
            for (std::size_t x = 0; x < d; ++x)
                t[(i * d + j) * d + x] = (*c)[x];
        }
    return EnvelopingAlgebra{kind, std::move(carrier),
                             make_algebra(F, d, std::move(t))};
}

SupersolvableReport supersolvable_equivalences(const Algebra &A, Caps caps) {
    EnvelopingAlgebra env = enveloping(A, EnvelopeKind::two_sided);
    double logq = std::log2(double(A.F.q()));
    double bits = double(std::max(A.m, env.alg.m)) * logq;
    if (bits > std::log2(double(caps.subspace_enum)))
        throw cap_exceeded("supersolvable_equivalences needs q^dim <= " +
                           std::to_string(caps.subspace_enum) +
                           " for the algebra and its envelope (set "
                           "VARIETYLAB_CAP to override)");
    SupersolvableReport rep;
    rep.supersolvable = is_supersolvable(A);
    rep.envelope_flag = has_complete_ideal_flag(env.alg);
    rep.chief_factors_one_dim = true;
    for (const auto &[below, above] : chief_series(A))
        if (above.dim() - below.dim() != 1)
            rep.chief_factors_one_dim = false;
    rep.all_agree = rep.supersolvable == rep.envelope_flag &&
                    rep.envelope_flag == rep.chief_factors_one_dim;
    return rep;
}

long long product_variety_dimension(const std::vector<long long> &d1,
                                    const std::vector<long long> &d2,
                                    std::size_t n) {
    if (n == 0 || n > d1.size() || n > d2.size())
        throw error("product_variety_dimension: n is out of range");
    long long a = d1[n - 1], b = d2[n - 1], nn = (long long)(n);
    return (nn - 1) * a * b + nn * (a + b + 1);
}

long long free_nilpotent_assoc_dim(std::size_t n, std::size_t c) {
    long long total = 0, pw = 1;
    for (std::size_t i = 1; i <= c; ++i) {
        pw *= (long long)(n);
        total += pw;
    }
    return total;
}

} // namespace vlab
