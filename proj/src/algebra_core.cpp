#include "varietylab/algebra_core.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <string>

#include "varietylab/caps.hpp"
#include "varietylab/error.hpp"

namespace vlab {

Algebra make_algebra(const Field &F, std::size_t m, std::vector<fel> tensor) {
    if (tensor.size() != m * m * m)
        throw error("structure tensor must have dim^3 entries");
    for (fel x : tensor)
        if (x >= F.q())
            throw error("structure constant out of field range");
    return Algebra{F, m, std::move(tensor)};
}

Algebra algebra_from_table(const Field &F,
                           const std::vector<std::vector<Vec>> &table) {
    std::size_t m = table.size();
    std::vector<fel> tensor(m * m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (table[i].size() != m)
            throw error("multiplication table must be square");
        for (std::size_t j = 0; j < m; ++j) {
            if (table[i][j].size() != m)
                throw error("table entry has wrong length");
            for (std::size_t l = 0; l < m; ++l)
                tensor[(i * m + j) * m + l] = table[i][j][l];
        }
    }
    return make_algebra(F, m, std::move(tensor));
}

Algebra zero_algebra(const Field &F, std::size_t m) {
    return Algebra{F, m, std::vector<fel>(m * m * m, 0)};
}

bool algebra_equal(const Algebra &A, const Algebra &B) {
    return A.F == B.F && A.m == B.m && A.t == B.t;
}

Vec alg_mul(const Algebra &A, const Vec &u, const Vec &v) {
    if (u.size() != A.m || v.size() != A.m)
        throw error("vector dimension mismatch in algebra product");
    Vec r(A.m, 0);
    for (std::size_t i = 0; i < A.m; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < A.m; ++j) {
            if (v[j] == 0)
                continue;
            fel f = A.F.mul(u[i], v[j]);
            const fel *row = A.t.data() + (i * A.m + j) * A.m;
            for (std::size_t l = 0; l < A.m; ++l)
                r[l] = A.F.add(r[l], A.F.mul(f, row[l]));
        }
    }
    return r;
}

Mat left_mult_matrix(const Algebra &A, const Vec &v) {
    Mat M(A.m, A.m);
    Vec e(A.m, 0);
    for (std::size_t j = 0; j < A.m; ++j) {
        e[j] = 1;
        M.set_row(j, alg_mul(A, v, e));
        e[j] = 0;
    }
    return M;
}

Mat right_mult_matrix(const Algebra &A, const Vec &v) {
    Mat M(A.m, A.m);
    Vec e(A.m, 0);
    for (std::size_t j = 0; j < A.m; ++j) {
        e[j] = 1;
        M.set_row(j, alg_mul(A, e, v));
        e[j] = 0;
    }
    return M;
}

Subspace subspace_product(const Algebra &A, const Subspace &L, const Subspace &M) {
    if (L.ambient != A.m || M.ambient != A.m)
        throw error("subspace ambient mismatch in product");
    SpanBuilder sb(A.F, A.m);
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < M.dim(); ++j)
            sb.add(alg_mul(A, L.basis.row(i), M.basis.row(j)));
    return sb.subspace();
}

namespace {

// Shared shape for descending series defined by a one-step recurrence
// (next term is a function of the previous term alone, so the series is
// stationary from the first repeat on). Reports the index of the first zero
// term when the series reaches zero.
SeriesResult descending_series(
    const Algebra &A, SeriesKind kind,
    const std::function<Subspace(const Subspace &)> &next) {
    SeriesResult res;
    res.kind = kind;
    res.terms.push_back(subspace_full(A.m));
    for (;;) {
        Subspace nxt = next(res.terms.back());
        if (nxt == res.terms.back())
            break;
        res.terms.push_back(std::move(nxt));
    }
    res.terminated = res.terms.back().dim() == 0;
    res.length = 0;
    if (res.terminated)
        while (res.terms[res.length].dim() != 0)
            ++res.length;
    return res;
}

} // namespace

SeriesResult power_series(const Algebra &A) {
    // A^k = sum_{s+t=k} A^s A^t is NOT a one-step recurrence: the chain can
    // plateau and then drop again (terms like A^2 A^2 keep feeding it), e.g.
    // over GF(2) with e1e1 = e0, e1e2 = e0, e2e2 = e0+e1 one gets
    // A^3 = A^4 = <e0> but A^5 = 0. A plateau is permanent once it has run
    // from power f to power 2f: any s+t = 2f+1 has a factor with s >= f,
    // which the plateau lets us re-index upward. So: stop at zero, or once
    // the current plateau has doubled its starting power.
    SeriesResult res;
    res.kind = SeriesKind::power;
    res.terms.push_back(subspace_full(A.m));
    std::size_t plateau_start = 1;
    while (res.terms.back().dim() != 0) {
        std::size_t k = res.terms.size() + 1; // computing A^k
        Subspace nxt = subspace_zero(A.m);
        for (std::size_t s = 1; s <= k - 1; ++s)
            nxt = subspace_sum(
                A.F, nxt,
                subspace_product(A, res.terms[s - 1], res.terms[k - s - 1]));
        if (nxt == res.terms.back()) {
            if (k >= 2 * plateau_start)
                break;
        } else {
            plateau_start = k;
        }
        res.terms.push_back(std::move(nxt));
    }
    // Keep interior plateaus (term i is A^{i+1}) but show a final stabilized
    // value only once.
    while (res.terms.size() >= 2 &&
           res.terms[res.terms.size() - 1] == res.terms[res.terms.size() - 2])
        res.terms.pop_back();
    res.terminated = res.terms.back().dim() == 0;
    res.length = 0;
    if (res.terminated)
        while (res.terms[res.length].dim() != 0)
            ++res.length;
    return res;
}

std::optional<std::size_t> nilpotency_class(const Algebra &A) {
    SeriesResult s = power_series(A);
    if (!s.terminated)
        return std::nullopt;
    return s.length; // A^{length+1} = 0 and A^{length} != 0 (or length = 0)
}

SeriesResult depth_series(const Algebra &A) {
    return descending_series(A, SeriesKind::depth, [&](const Subspace &prev) {
        Subspace full = subspace_full(A.m);
        Subspace acc = subspace_product(A, full, prev);
        acc = subspace_sum(A.F, acc, subspace_product(A, prev, full));
        acc = subspace_sum(A.F, acc, subspace_product(A, prev, prev));
        return acc;
    });
}

std::optional<std::size_t> nilpotent_depth(const Algebra &A) {
    SeriesResult s = depth_series(A);
    if (!s.terminated)
        return std::nullopt;
    return s.length;
}

SeriesResult commutator_series(const Algebra &A) {
    return descending_series(A, SeriesKind::commutator,
                             [&](const Subspace &prev) {
                                 return subspace_product(A, prev, prev);
                             });
}

std::optional<std::size_t> solvable_length(const Algebra &A) {
    SeriesResult s = commutator_series(A);
    if (!s.terminated)
        return std::nullopt;
    return s.length;
}

bool is_nilpotent(const Algebra &A) { return nilpotency_class(A).has_value(); }

bool is_solvable(const Algebra &A) { return solvable_length(A).has_value(); }

Subspace annihilator(const Algebra &A) {
    // a is in the annihilator iff a*e_j = 0 and e_j*a = 0 for all j; both are
    // linear conditions on a's coordinates, one column per (side, j, l).
    Mat M(A.m, 2 * A.m * A.m);
    for (std::size_t i = 0; i < A.m; ++i)
        for (std::size_t j = 0; j < A.m; ++j)
            for (std::size_t l = 0; l < A.m; ++l) {
                M.at(i, j * A.m + l) = A.c(i, j, l);
                M.at(i, A.m * A.m + j * A.m + l) = A.c(j, i, l);
            }
    return subspace_from_mat(A.F, left_nullspace(A.F, M));
}

namespace {

// Pull a subspace of the quotient back to A: the span of the ideal and the
// lifted basis rows.
Subspace pull_back(const Algebra &A, const Quotient &Q, const Subspace &S) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < Q.ideal.dim(); ++r)
        rows.push_back(Q.ideal.basis.row(r));
    for (std::size_t r = 0; r < S.dim(); ++r)
        rows.push_back(vec_mat(A.F, S.basis.row(r), Q.lift));
    return subspace_from_rows(A.F, A.m, rows);
}

// Shared shape for the ascending series: term 0 is {0}; each step adds the
// image of `layer` of the current quotient; stops on stabilization.
SeriesResult ascending_series(
    const Algebra &A, SeriesKind kind,
    const std::function<Subspace(const Algebra &)> &layer) {
    SeriesResult res;
    res.kind = kind;
    res.terms.push_back(subspace_zero(A.m));
    for (;;) {
        Quotient Q = quotient(A, res.terms.back());
        Subspace next = pull_back(A, Q, layer(Q.alg));
        if (next == res.terms.back())
            break;
        res.terms.push_back(std::move(next));
    }
    res.terminated = res.terms.back().dim() == A.m;
    res.length = 0;
    if (res.terminated)
        while (res.terms[res.length].dim() != A.m)
            ++res.length;
    return res;
}

} // namespace

SeriesResult upper_annihilator_series(const Algebra &A) {
    return ascending_series(A, SeriesKind::upper_annihilator,
                            [](const Algebra &Q) { return annihilator(Q); });
}

Subspace ideal_generated(const Algebra &A, const std::vector<Vec> &gens) {
    SpanBuilder sb(A.F, A.m);
    std::deque<Vec> work;
    for (const Vec &g : gens)
        if (sb.add(g))
            work.push_back(g);
    Vec e(A.m, 0);
    while (!work.empty()) {
        Vec w = std::move(work.front());
        work.pop_front();
        for (std::size_t i = 0; i < A.m; ++i) {
            e[i] = 1;
            Vec l = alg_mul(A, e, w);
            Vec r = alg_mul(A, w, e);
            e[i] = 0;
            if (sb.add(l))
                work.push_back(std::move(l));
            if (sb.add(r))
                work.push_back(std::move(r));
        }
    }
    return sb.subspace();
}

Subspace subalgebra_generated(const Algebra &A, const std::vector<Vec> &gens) {
    SpanBuilder sb(A.F, A.m);
    std::vector<Vec> basis;
    std::deque<Vec> work;
    for (const Vec &g : gens)
        if (sb.add(g)) {
            basis.push_back(g);
            work.push_back(g);
        }
    while (!work.empty()) {
        Vec w = std::move(work.front());
        work.pop_front();
        // Multiply against everything known so far (w itself included).
        std::size_t snapshot = basis.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            for (Vec prod : {alg_mul(A, w, basis[i]), alg_mul(A, basis[i], w)})
                if (sb.add(prod)) {
                    basis.push_back(prod);
                    work.push_back(std::move(prod));
                }
        }
    }
    return sb.subspace();
}

namespace {

// Visit one representative per 1-dim subspace: vectors whose first nonzero
// coordinate is 1.
void enumerate_projective_points(const Field &F, std::size_t dim,
                                 const std::function<bool(const Vec &)> &fn) {
    bool go = true;
    enumerate_vectors(F, dim, [&](const Vec &v) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (v[i] == 0)
                continue;
            if (v[i] == 1)
                go = fn(v);
            break;
        }
        return go;
    });
}

bool subspace_less(const Subspace &a, const Subspace &b) {
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    return a.basis.a < b.basis.a;
}

} // namespace

std::vector<Subspace> minimal_ideals(const Algebra &A) {
    // Every minimal ideal is the ideal closure of any of its nonzero
    // elements, so closures of 1-dim seeds cover all of them.
    std::vector<Subspace> closures;
    enumerate_projective_points(A.F, A.m, [&](const Vec &v) {
        Subspace J = ideal_generated(A, {v});
        if (std::find(closures.begin(), closures.end(), J) == closures.end())
            closures.push_back(J);
        return true;
    });
    std::vector<Subspace> out;
    for (const Subspace &J : closures) {
        bool minimal = true;
        for (const Subspace &K : closures)
            if (K.dim() < J.dim() && subspace_leq(A.F, K, J)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(J);
    }
    std::sort(out.begin(), out.end(), subspace_less);
    return out;
}

std::optional<Subspace> monolith(const Algebra &A) {
    std::vector<Subspace> mins = minimal_ideals(A);
    if (mins.size() == 1)
        return mins[0];
    return std::nullopt;
}

SeriesResult socle_series(const Algebra &A) {
    return ascending_series(A, SeriesKind::socle, [](const Algebra &Q) {
        Subspace s = subspace_zero(Q.m);
        for (const Subspace &J : minimal_ideals(Q))
            s = subspace_sum(Q.F, s, J);
        return s;
    });
}

std::size_t socle_height(const Algebra &A) {
    SeriesResult s = socle_series(A);
    if (!s.terminated)
        throw error("socle series failed to reach the whole algebra");
    return s.length;
}

bool is_simple(const Algebra &A) {
    if (A.m == 0)
        return false;
    if (subspace_product(A, subspace_full(A.m), subspace_full(A.m)).dim() == 0)
        return false;
    bool simple = true;
    enumerate_projective_points(A.F, A.m, [&](const Vec &v) {
        simple = ideal_generated(A, {v}).dim() == A.m;
        return simple;
    });
    return simple;
}

bool is_minimal_algebra(const Algebra &A) {
    if (A.m == 0)
        return false;
    bool minimal = true;
    enumerate_projective_points(A.F, A.m, [&](const Vec &v) {
        minimal = subalgebra_generated(A, {v}).dim() == A.m;
        return minimal;
    });
    return minimal;
}

bool is_abelian(const Algebra &A) {
    return std::all_of(A.t.begin(), A.t.end(), [](fel x) { return x == 0; });
}

bool is_commutative(const Algebra &A) {
    for (std::size_t i = 0; i < A.m; ++i)
        for (std::size_t j = i + 1; j < A.m; ++j)
            if (A.basis_product(i, j) != A.basis_product(j, i))
                return false;
    return true;
}

bool is_one_generated(const Algebra &A) {
    if (A.m == 0)
        return true;
    bool found = false;
    enumerate_projective_points(A.F, A.m, [&](const Vec &v) {
        found = subalgebra_generated(A, {v}).dim() == A.m;
        return !found;
    });
    return found;
}

bool is_subalgebra(const Algebra &A, const Subspace &S) {
    for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j)
            if (!subspace_contains(A.F, S,
                                   alg_mul(A, S.basis.row(i), S.basis.row(j))))
                return false;
    return true;
}

bool is_ideal(const Algebra &A, const Subspace &S) {
    Vec e(A.m, 0);
    for (std::size_t j = 0; j < S.dim(); ++j) {
        Vec s = S.basis.row(j);
        for (std::size_t i = 0; i < A.m; ++i) {
            e[i] = 1;
            bool ok = subspace_contains(A.F, S, alg_mul(A, e, s)) &&
                      subspace_contains(A.F, S, alg_mul(A, s, e));
            e[i] = 0;
            if (!ok)
                return false;
        }
    }
    return true;
}

Quotient quotient(const Algebra &A, const Subspace &I) {
    if (I.ambient != A.m)
        throw error("ideal has wrong ambient dimension");
    if (!is_ideal(A, I))
        throw error("quotient by a subspace that is not an ideal");
    std::size_t r = I.dim();
    std::size_t mq = A.m - r;
    // Coset representatives: unit vectors at the non-pivot columns of I's
    // RREF basis.
    std::vector<bool> is_pivot(A.m, false);
    for (std::size_t row = 0; row < r; ++row) {
        std::size_t c = 0;
        while (I.basis.at(row, c) == 0)
            ++c;
        is_pivot[c] = true;
    }
    Mat lift(mq, A.m);
    std::size_t t = 0;
    for (std::size_t cidx = 0; cidx < A.m; ++cidx)
        if (!is_pivot[cidx])
            lift.at(t++, cidx) = 1;
    // Change of basis: rows of B are (ideal basis, lifted representatives);
    // coordinates of v in that basis are v * B^{-1}, and the projection keeps
    // the last mq of them.
    Mat B(A.m, A.m);
    for (std::size_t row = 0; row < r; ++row)
        B.set_row(row, I.basis.row(row));
    for (std::size_t row = 0; row < mq; ++row)
        B.set_row(r + row, lift.row(row));
    auto Binv = mat_inverse(A.F, B);
    if (!Binv)
        throw error("internal: quotient basis not invertible");
    Mat proj(A.m, mq);
    for (std::size_t i = 0; i < A.m; ++i)
        for (std::size_t j = 0; j < mq; ++j)
            proj.at(i, j) = Binv->at(i, r + j);
    std::vector<fel> tensor(mq * mq * mq, 0);
    for (std::size_t a = 0; a < mq; ++a)
        for (std::size_t b = 0; b < mq; ++b) {
            Vec w = vec_mat(A.F, alg_mul(A, lift.row(a), lift.row(b)), proj);
            for (std::size_t l = 0; l < mq; ++l)
                tensor[(a * mq + b) * mq + l] = w[l];
        }
    return Quotient{Algebra{A.F, mq, std::move(tensor)}, I, std::move(proj),
                    std::move(lift)};
}

Algebra direct_sum(const Algebra &A, const Algebra &B) {
    if (A.F != B.F)
        throw error("direct sum requires algebras over the same field");
    std::size_t m = A.m + B.m;
    std::vector<fel> tensor(m * m * m, 0);
    for (std::size_t i = 0; i < A.m; ++i)
        for (std::size_t j = 0; j < A.m; ++j)
            for (std::size_t l = 0; l < A.m; ++l)
                tensor[(i * m + j) * m + l] = A.c(i, j, l);
    for (std::size_t i = 0; i < B.m; ++i)
        for (std::size_t j = 0; j < B.m; ++j)
            for (std::size_t l = 0; l < B.m; ++l)
                tensor[((A.m + i) * m + (A.m + j)) * m + (A.m + l)] =
                    B.c(i, j, l);
    return Algebra{A.F, m, std::move(tensor)};
}

Algebra restrict_to_subalgebra(const Algebra &A, const Subspace &S) {
    std::size_t d = S.dim();
    std::vector<fel> tensor(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto co = coords_in(A.F, S, alg_mul(A, S.basis.row(i), S.basis.row(j)));
            if (!co)
                throw error("subspace is not closed under products");
            for (std::size_t l = 0; l < d; ++l)
                tensor[(i * d + j) * d + l] = (*co)[l];
        }
    return Algebra{A.F, d, std::move(tensor)};
}

Algebra transform_algebra(const Algebra &A, const Mat &g) {
    if (g.rows != A.m || g.cols != A.m)
        throw error("basis change matrix has wrong shape");
    auto ginv = mat_inverse(A.F, g);
    if (!ginv)
        throw error("basis change matrix is singular");
    std::vector<fel> tensor(A.m * A.m * A.m, 0);
    for (std::size_t i = 0; i < A.m; ++i)
        for (std::size_t j = 0; j < A.m; ++j) {
            Vec w = vec_mat(A.F, alg_mul(A, g.row(i), g.row(j)), *ginv);
            for (std::size_t l = 0; l < A.m; ++l)
                tensor[(i * A.m + j) * A.m + l] = w[l];
        }
    return Algebra{A.F, A.m, std::move(tensor)};
}

namespace {

void check_subspace_enum_cap(const Algebra &A) {
    Caps caps = Caps::from_env();
    double bits = double(A.m) * std::log2(double(A.F.q()));
    if (bits > std::log2(double(caps.subspace_enum)))
        throw cap_exceeded("subspace enumeration needs q^dim <= " +
                           std::to_string(caps.subspace_enum) +
                           " (set VARIETYLAB_CAP to override)");
}

} // namespace

std::vector<Subspace> subalgebras(const Algebra &A) {
    check_subspace_enum_cap(A);
    std::vector<Subspace> out;
    enumerate_subspaces(A.F, A.m, [&](const Subspace &S) {
        if (is_subalgebra(A, S))
            out.push_back(S);
        return true;
    });
    return out;
}

std::vector<Subspace> ideals(const Algebra &A) {
    check_subspace_enum_cap(A);
    std::vector<Subspace> out;
    enumerate_subspaces(A.F, A.m, [&](const Subspace &S) {
        if (is_ideal(A, S))
            out.push_back(S);
        return true;
    });
    return out;
}

std::vector<std::pair<Subspace, Subspace>> chief_series(const Algebra &A) {
    std::vector<std::pair<Subspace, Subspace>> out;
    Subspace cur = subspace_zero(A.m);
    while (cur.dim() < A.m) {
        Quotient Q = quotient(A, cur);
        std::vector<Subspace> mins = minimal_ideals(Q.alg);
        // minimal_ideals is sorted; the front is the canonical choice.
        Subspace next = pull_back(A, Q, mins.front());
        out.push_back({cur, next});
        cur = std::move(next);
    }
    return out;
}

bool is_supersolvable(const Algebra &A) {
    if (A.m == 0)
        return true;
    bool ok = false;
    enumerate_projective_points(A.F, A.m, [&](const Vec &v) {
        if (!vec_is_zero(alg_mul(A, v, v)))
            return true;
        Subspace line = subspace_from_rows(A.F, A.m, {v});
        if (!is_ideal(A, line))
            return true;
        if (is_supersolvable(quotient(A, line).alg)) {
            ok = true;
            return false;
        }
        return true;
    });
    return ok;
}

} // namespace vlab
