#include "varietylab/census.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>

#include "varietylab/error.hpp"

namespace vlab {

namespace {

// Transformed tensor entry (i, j, l) of t under basis change g (with inverse
// gi): sum over a, b, c of g_ia g_jb t_abc gi_cl.
fel transform_entry(const Field &F, const std::vector<fel> &t, std::size_t m,
                    const Mat &g, const Mat &gi, std::size_t i, std::size_t j,
                    std::size_t l) {
    fel acc = 0;
    for (std::size_t a = 0; a < m; ++a) {
        fel gia = g.at(i, a);
        if (gia == 0)
            continue;
        for (std::size_t b = 0; b < m; ++b) {
            fel gg = F.mul(gia, g.at(j, b));
            if (gg == 0)
                continue;
            for (std::size_t c = 0; c < m; ++c) {
                fel tc = t[(a * m + b) * m + c];
                if (tc == 0)
                    continue;
                acc = F.add(acc, F.mul(F.mul(gg, tc), gi.at(c, l)));
            }
        }
    }
    return acc;
}

// Lex order of (transformed t under g) against ref: -1 smaller, 0 equal,
// +1 greater, with entrywise early exit.
int transform_compare(const Field &F, const std::vector<fel> &t, std::size_t m,
                      const Mat &g, const Mat &gi, const std::vector<fel> &ref) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < m; ++l, ++pos) {
                fel e = transform_entry(F, t, m, g, gi, i, j, l);
                if (e != ref[pos])
                    return e < ref[pos] ? -1 : 1;
            }
    return 0;
}

struct GlList {
    std::vector<Mat> g, ginv;
};

GlList gl_with_inverses(const Field &F, std::size_t m, Caps caps) {
    GlList L;
    for (Mat g : invertible_matrices(F, m, caps)) {
        L.ginv.push_back(*mat_inverse(F, g));
        L.g.push_back(std::move(g));
    }
    return L;
}

std::vector<fel> decode_tensor(std::uint64_t idx, std::size_t len, int q) {
    std::vector<fel> t(len);
    for (std::size_t p = 0; p < len; ++p) {
        t[p] = fel(idx % q);
        idx /= q;
    }
    return t;
}

CensusClass classify(const Field &F, std::vector<fel> tensor, std::size_t m,
                     std::uint64_t stab, std::uint64_t gl) {
    CensusClass c;
    c.aut_order = stab;
    c.orbit_size = gl / stab;
    c.rigid = stab == 1;
    Algebra A = make_algebra(F, m, tensor);
    c.simple = is_simple(A);
    c.cyclic = is_one_generated(A);
    c.nilpotent = is_nilpotent(A);
    c.solvable = is_solvable(A);
    c.minimal = is_minimal_algebra(A);
    c.no_proper_subalg_dim_gt_1 = true;
    for (const Subspace &S : subalgebras(A))
        if (S.dim() > 1 && S.dim() < m)
            c.no_proper_subalg_dim_gt_1 = false;
    c.inherently_semisimple = is_inherently_semisimple(A);
    c.tensor = std::move(tensor);
    return c;
}

} // namespace

GlInfo gl_order(std::size_t m, int q) {
    GlInfo info;
    info.order = 1;
    double prod = 1.0;
    std::uint64_t qm = 1;
    for (std::size_t i = 0; i < m; ++i)
        qm *= std::uint64_t(q);
    std::uint64_t qi = 1;
    for (std::size_t i = 1; i <= m; ++i) {
        qi *= std::uint64_t(q);
        info.order *= qm - qm / qi;
        prod *= 1.0 - 1.0 / double(qi);
    }
    info.defect = m == 0 ? 0.0 : -std::log(prod) / std::log(double(q));
    return info;
}

std::vector<Mat> invertible_matrices(const Field &F, std::size_t m, Caps caps) {
    GlInfo info = gl_order(m, F.q());
    if (info.order > caps.gl_order)
        throw cap_exceeded("group order " + std::to_string(info.order) +
                           " exceeds the canonical-form cap " +
                           std::to_string(caps.gl_order) +
                           " (set VARIETYLAB_CAP to override)");
    std::vector<Mat> out;
    out.reserve(info.order);
    enumerate_vectors(F, m * m, [&](const Vec &v) {
        Mat g(m, m);
        g.a = v;
        if (mat_inverse(F, g))
            out.push_back(std::move(g));
        return true;
    });
    return out;
}

std::vector<fel> canonical_form(const Algebra &A, Caps caps) {
    GlList L = gl_with_inverses(A.F, A.m, caps);
    std::vector<fel> best = A.t;
    for (std::size_t k = 0; k < L.g.size(); ++k)
        if (transform_compare(A.F, A.t, A.m, L.g[k], L.ginv[k], best) < 0) {
            std::vector<fel> cur(A.m * A.m * A.m);
            std::size_t pos = 0;
            for (std::size_t i = 0; i < A.m; ++i)
                for (std::size_t j = 0; j < A.m; ++j)
                    for (std::size_t l = 0; l < A.m; ++l, ++pos)
                        cur[pos] =
                            transform_entry(A.F, A.t, A.m, L.g[k],
                                            L.ginv[k], i, j, l);
            best = std::move(cur);
        }
    return best;
}

bool is_direct_sum_of_simples(const Algebra &A) {
    if (A.m == 0)
        return true;
    Subspace sum = subspace_zero(A.m);
    for (const Subspace &I : minimal_ideals(A)) {
        if (!is_simple(restrict_to_subalgebra(A, I)))
            return false;
        sum = subspace_sum(A.F, sum, I);
    }
    return sum.dim() == A.m;
}

bool is_inherently_semisimple(const Algebra &A) {
    for (const Subspace &S : subalgebras(A))
        if (!is_direct_sum_of_simples(restrict_to_subalgebra(A, S)))
            return false;
    return true;
}

CensusReport enumerate_algebras(std::size_t m, int q, std::size_t nshards,
                                bool force, Caps caps) {
    bool small = (m == 1 && (q == 2 || q == 3)) ||
                 (m == 2 && (q == 2 || q == 3));
    bool long_run = m == 3 && q == 2;
    if (!small && !(long_run && force))
        throw error("census: (m, q) = (" + std::to_string(m) + ", " +
                    std::to_string(q) +
                    ") is outside the supported range" +
                    (long_run ? " without force" : ""));
    if (nshards == 0)
        nshards = 1;

    Field F(q);
    GlList L = gl_with_inverses(F, m, caps);
    const std::size_t len = m * m * m;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i)
        total *= std::uint64_t(q);

    std::vector<std::vector<CensusClass>> found(nshards);
    auto worker = [&](std::size_t shard) {
        for (std::uint64_t idx = shard; idx < total; idx += nshards) {
            std::vector<fel> t = decode_tensor(idx, len, q);
            std::uint64_t stab = 0;
            bool least = true;
            for (std::size_t k = 0; k < L.g.size() && least; ++k) {
                int cmp = transform_compare(F, t, m, L.g[k], L.ginv[k], t);
                if (cmp < 0)
                    least = false;
                else if (cmp == 0)
                    ++stab;
            }
            if (least)
                found[shard].push_back(
                    classify(F, std::move(t), m, stab, L.g.size()));
        }
    };
    if (nshards == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t s = 0; s < nshards; ++s)
            pool.emplace_back(worker, s);
        for (auto &th : pool)
            th.join();
    }

    CensusReport rep;
    rep.m = m;
    rep.q = q;
    rep.tensor_total = total;
    rep.gl = L.g.size();
    for (auto &part : found)
        for (auto &c : part)
            rep.classes.push_back(std::move(c));
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const CensusClass &a, const CensusClass &b) {
                  return a.tensor < b.tensor;
              });
    rep.phi = rep.classes.size();
    for (const CensusClass &c : rep.classes) {
        rep.orbit_size_sum += c.orbit_size;
        rep.n_simple += c.simple;
        rep.n_rigid += c.rigid;
        rep.n_cyclic += c.cyclic;
        rep.n_nilpotent += c.nilpotent;
        rep.n_solvable += c.solvable;
        rep.n_minimal += c.minimal;
        rep.n_no_proper_subalg_dim_gt_1 += c.no_proper_subalg_dim_gt_1;
        rep.n_inherently_semisimple += c.inherently_semisimple;
    }
    return rep;
}

namespace {

std::uint64_t count_flag_tuples_direct(std::size_t m, int q, bool nilpotent) {
    // Direct scan of all q^(m^3) tensors; only called for m <= 2.
    Field F(q);
    const std::size_t len = m * m * m;
    std::uint64_t total = 1, hits = 0;
    for (std::size_t i = 0; i < len; ++i)
        total *= std::uint64_t(q);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<fel> t = decode_tensor(idx, len, q);
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a)
            for (std::size_t b = 0; b < m && ok; ++b)
                for (std::size_t l = 0; l < m && ok; ++l) {
                    std::size_t cut = nilpotent ? std::min(a, b) : std::max(a, b);
                    if (l >= cut && t[(a * m + b) * m + l] != 0)
                        ok = false;
                }
        hits += ok;
    }
    return hits;
}

std::uint64_t q_pow(int q, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--)
        r *= std::uint64_t(q);
    return r;
}

} // namespace

std::uint64_t count_nilpotent_flag_tuples(std::size_t m, int q) {
    std::uint64_t lambda = m == 0 ? 0 : (m - 1) * m * (2 * m - 1) / 6;
    std::uint64_t value = q_pow(q, lambda);
    if (m <= 2 && count_flag_tuples_direct(m, q, true) != value)
        throw error("count_nilpotent_flag_tuples: direct count disagrees");
    return value;
}

std::uint64_t count_solvable_flag_tuples(std::size_t m, int q) {
    std::uint64_t value = 1;
    for (std::size_t i = 2; i <= m; ++i)
        value *= q_pow(q, 2 * i * i - 3 * i + 1);
    if (m <= 2 && count_flag_tuples_direct(m, q, false) != value)
        throw error("count_solvable_flag_tuples: direct count disagrees");
    return value;
}

std::vector<PropertyFraction> property_fractions(const CensusReport &r) {
    auto row = [&](const char *name, std::uint64_t count) {
        return PropertyFraction{name, count,
                                r.phi ? double(count) / double(r.phi) : 0.0};
    };
    return {row("simple", r.n_simple),
            row("rigid", r.n_rigid),
            row("cyclic", r.n_cyclic),
            row("nilpotent", r.n_nilpotent),
            row("solvable", r.n_solvable),
            row("minimal", r.n_minimal),
            row("no_proper_subalg_dim_gt_1", r.n_no_proper_subalg_dim_gt_1),
            row("inherently_semisimple", r.n_inherently_semisimple)};
}

} // namespace vlab
