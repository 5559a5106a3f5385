#include "varietylab/morphisms.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "varietylab/error.hpp"

namespace vlab {

namespace {

void check_tuple_cap(const Field &F, std::size_t dim, std::size_t slots,
                     std::uint64_t cap, const std::string &what) {
    double bits = double(slots) * double(dim) * std::log2(double(F.q()));
    if (bits > std::log2(double(cap)))
        throw cap_exceeded(what + " needs |images|^tuple <= " + std::to_string(cap) +
                           " (set VARIETYLAB_CAP to override)");
}

std::vector<Vec> all_vectors(const Field &F, std::size_t dim) {
    std::vector<Vec> out;
    enumerate_vectors(F, dim, [&](const Vec &v) {
        out.push_back(v);
        return true;
    });
    return out;
}

Vec concat_pair(const Vec &a, const Vec &b) {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Componentwise product in A x B of two concatenated vectors.
Vec pair_mul(const Algebra &A, const Algebra &B, const Vec &x, const Vec &y) {
    Vec xa(x.begin(), x.begin() + A.m), xb(x.begin() + A.m, x.end());
    Vec ya(y.begin(), y.begin() + A.m), yb(y.begin() + A.m, y.end());
    return concat_pair(alg_mul(A, xa, ya), alg_mul(B, xb, yb));
}

std::size_t block_rank(const Field &F, const Mat &rows, std::size_t from,
                       std::size_t width) {
    Mat M(rows.rows, width);
    for (std::size_t r = 0; r < rows.rows; ++r)
        for (std::size_t c = 0; c < width; ++c)
            M.at(r, c) = rows.at(r, from + c);
    return rref(F, std::move(M)).rank;
}

// Valid only when gc is consistent with full domain: the graph's RREF basis
// then has identity in the A-columns, so the B-columns are the matrix rows.
Mat graph_matrix(const GraphClosure &gc, std::size_t ma, std::size_t mb) {
    Mat M(ma, mb);
    for (std::size_t r = 0; r < ma; ++r)
        for (std::size_t c = 0; c < mb; ++c)
            M.at(r, c) = gc.graph.basis.at(r, ma + c);
    return M;
}

} // namespace

Vec apply(const Morphism &f, const Vec &v) {
    return vec_mat(f.source->F, v, f.matrix);
}

bool is_homomorphism(const Morphism &f) {
    if (!f.source || !f.target)
        throw error("is_homomorphism: morphism lacks source or target");
    const Algebra &A = *f.source;
    const Algebra &B = *f.target;
    if (!(A.F == B.F))
        throw error("is_homomorphism: field mismatch");
    if (f.matrix.rows != A.m || f.matrix.cols != B.m)
        throw error("is_homomorphism: matrix shape mismatch");
    for (std::size_t i = 0; i < A.m; ++i)
        for (std::size_t j = 0; j < A.m; ++j) {
            Vec lhs = vec_mat(A.F, A.basis_product(i, j), f.matrix);
            Vec rhs = alg_mul(B, f.matrix.row(i), f.matrix.row(j));
            if (lhs != rhs)
                return false;
        }
    return true;
}

Subspace kernel(const Morphism &f) {
    return subspace_from_mat(f.source->F, left_nullspace(f.source->F, f.matrix));
}

Subspace image(const Morphism &f) {
    return subspace_from_mat(f.source->F, f.matrix);
}

GraphClosure close_graph(const Algebra &A, const Algebra &B,
                         const std::vector<Vec> &gens,
                         const std::vector<Vec> &images) {
    if (!(A.F == B.F))
        throw error("close_graph: field mismatch");
    if (gens.size() != images.size())
        throw error("close_graph: generator/image count mismatch");
    const Field &F = A.F;
    SpanBuilder sb(F, A.m + B.m);
    std::vector<Vec> fresh;
    auto add = [&](const Vec &v) {
        if (sb.add(v))
            fresh.push_back(v);
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != A.m || images[i].size() != B.m)
            throw error("close_graph: vector length mismatch");
        add(concat_pair(gens[i], images[i]));
    }
    // Close the span under the componentwise product; multiplying spanning
    // vectors is enough by bilinearity.
    std::vector<Vec> seen;
    while (!fresh.empty()) {
        Vec v = std::move(fresh.back());
        fresh.pop_back();
        for (const Vec &u : seen) {
            add(pair_mul(A, B, u, v));
            add(pair_mul(A, B, v, u));
        }
        add(pair_mul(A, B, v, v));
        seen.push_back(std::move(v));
    }
    GraphClosure gc;
    gc.graph = sb.subspace();
    gc.consistent = true;
    for (std::size_t r = 0; r < gc.graph.basis.rows && gc.consistent; ++r) {
        bool zero_a = true;
        for (std::size_t c = 0; c < A.m && zero_a; ++c)
            zero_a = gc.graph.basis.at(r, c) == 0;
        if (zero_a)
            gc.consistent = false;
    }
    gc.domain_dim = gc.consistent ? gc.graph.dim()
                                  : block_rank(F, gc.graph.basis, 0, A.m);
    return gc;
}

std::optional<Morphism> extend_hom(const Algebra &A, const std::vector<Vec> &gens,
                                   const Algebra &B, const std::vector<Vec> &images) {
    GraphClosure gc = close_graph(A, B, gens, images);
    if (!gc.consistent || gc.domain_dim != A.m)
        return std::nullopt;
    return Morphism{&A, &B, graph_matrix(gc, A.m, B.m)};
}

std::vector<Vec> generating_tuple(const Algebra &A) {
    std::vector<Vec> tuple;
    if (A.m == 0)
        return tuple;
    Subspace span = subspace_zero(A.m);
    enumerate_vectors(A.F, A.m, [&](const Vec &v) {
        if (!subspace_contains(A.F, span, v)) {
            tuple.push_back(v);
            span = subalgebra_generated(A, tuple);
        }
        return span.dim() < A.m;
    });
    return tuple;
}

namespace {

// Depth-first search over image tuples of a generating tuple, pruning every
// prefix whose graph closure is inconsistent (not a partial homomorphism) and,
// for embeddings, every prefix whose graph already meets A x {0}.
struct HomSearch {
    const Algebra &A;
    const Algebra &B;
    const std::vector<Vec> &gens;
    const std::vector<Vec> &candidates;
    bool injective_only;
    const std::function<bool(Mat &&)> &emit;
    std::vector<Vec> images;

    bool dfs() {
        std::vector<Vec> prefix(gens.begin(), gens.begin() + images.size());
        GraphClosure gc = close_graph(A, B, prefix, images);
        if (!gc.consistent)
            return true;
        if (injective_only &&
            block_rank(A.F, gc.graph.basis, A.m, B.m) < gc.graph.dim())
            return true;
        if (images.size() == gens.size()) {
            if (gc.domain_dim != A.m)
                return true;
            return emit(graph_matrix(gc, A.m, B.m));
        }
        for (const Vec &v : candidates) {
            images.push_back(v);
            bool go_on = dfs();
            images.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    }
};

} // namespace

std::optional<Morphism> find_isomorphism(const Algebra &A, const Algebra &B,
                                         Caps caps) {
    if (!(A.F == B.F))
        throw error("find_isomorphism: field mismatch");
    if (A.m != B.m)
        return std::nullopt;
    std::vector<Vec> gens = generating_tuple(A);
    check_tuple_cap(B.F, B.m, gens.size(), caps.tuple_eval, "isomorphism search");
    std::vector<Vec> candidates = all_vectors(B.F, B.m);
    std::optional<Morphism> found;
    std::function<bool(Mat &&)> emit = [&](Mat &&M) {
        found = Morphism{&A, &B, std::move(M)};
        return false;
    };
    HomSearch{A, B, gens, candidates, true, emit, {}}.dfs();
    return found;
}

AutGroup automorphism_group(const Algebra &A, Caps caps) {
    std::vector<Vec> gens = generating_tuple(A);
    check_tuple_cap(A.F, A.m, gens.size(), caps.tuple_eval, "automorphism search");
    std::vector<Vec> candidates = all_vectors(A.F, A.m);
    std::vector<Mat> autos;
    std::function<bool(Mat &&)> emit = [&](Mat &&M) {
        autos.push_back(std::move(M));
        return true;
    };
    HomSearch{A, A, gens, candidates, true, emit, {}}.dfs();

    AutGroup G;
    G.order = autos.size();
    // Pick generators greedily: keep each automorphism not yet reachable as a
    // product of the chosen ones (products suffice in a finite group).
    std::set<std::vector<fel>> closed;
    std::vector<Mat> elems;
    auto rebuild = [&]() {
        closed.clear();
        elems.clear();
        Mat I = Mat::identity(A.m);
        closed.insert(I.a);
        elems.push_back(std::move(I));
        for (std::size_t h = 0; h < elems.size(); ++h)
            for (const Morphism &g : G.generators) {
                Mat P = mat_mul(A.F, elems[h], g.matrix);
                if (closed.insert(P.a).second)
                    elems.push_back(std::move(P));
            }
    };
    rebuild();
    for (const Mat &M : autos)
        if (!closed.count(M.a)) {
            G.generators.push_back(Morphism{&A, &A, M});
            rebuild();
        }
    if (closed.size() != G.order)
        throw error("automorphism_group: generator closure mismatch");
    return G;
}

void for_each_epimorphism(const Algebra &B, const std::vector<Vec> &gens,
                          const Algebra &A,
                          const std::function<bool(const Morphism &)> &fn,
                          std::size_t shard, std::size_t nshards, Caps caps) {
    if (!(A.F == B.F))
        throw error("for_each_epimorphism: field mismatch");
    if (nshards == 0 || shard >= nshards)
        throw error("for_each_epimorphism: bad shard indices");
    check_tuple_cap(A.F, A.m, gens.size(), caps.tuple_eval,
                    "epimorphism enumeration");
    std::vector<Vec> candidates = all_vectors(A.F, A.m);
    const std::uint64_t base = candidates.size();
    std::uint64_t total = 1;
    for (std::size_t s = 0; s < gens.size(); ++s)
        total *= base;
    std::vector<Vec> images(gens.size());
    for (std::uint64_t idx = shard; idx < total; idx += nshards) {
        std::uint64_t t = idx;
        for (std::size_t s = 0; s < gens.size(); ++s) {
            images[s] = candidates[t % base];
            t /= base;
        }
        GraphClosure gc = close_graph(B, A, gens, images);
        if (!gc.consistent || gc.domain_dim != B.m)
            continue;
        Mat M = graph_matrix(gc, B.m, A.m);
        if (rref(A.F, M).rank != A.m)
            continue;
        Morphism f{&B, &A, std::move(M)};
        if (!fn(f))
            return;
    }
}

std::vector<Morphism> epimorphisms(const Algebra &B, const std::vector<Vec> &gens,
                                   const Algebra &A, Caps caps) {
    std::vector<Morphism> out;
    for_each_epimorphism(
        B, gens, A,
        [&](const Morphism &f) {
            out.push_back(f);
            return true;
        },
        0, 1, caps);
    return out;
}

bool is_residually(const Algebra &B, const std::vector<Vec> &gens,
                   const Algebra &A, Caps caps) {
    Subspace inter = subspace_full(B.m);
    auto absorb = [&](const Morphism &f) {
        inter = subspace_intersect(B.F, inter, kernel(f));
        return inter.dim() > 0;
    };
    // A small set of epimorphisms whose kernels already intersect to zero
    // certifies the answer, so try random image tuples before the full scan.
    if (!gens.empty() && A.m > 0 && B.m > 0) {
        check_tuple_cap(A.F, A.m, gens.size(), caps.tuple_eval,
                        "epimorphism enumeration");
        std::vector<Vec> candidates = all_vectors(A.F, A.m);
        std::mt19937 rng(0x5eed);
        std::vector<Vec> images(gens.size());
        for (int t = 0; t < 64 && inter.dim() > 0; ++t) {
            for (auto &img : images)
                img = candidates[rng() % candidates.size()];
            GraphClosure gc = close_graph(B, A, gens, images);
            if (!gc.consistent || gc.domain_dim != B.m)
                continue;
            Mat M = graph_matrix(gc, B.m, A.m);
            if (rref(A.F, M).rank != A.m)
                continue;
            Morphism f{&B, &A, std::move(M)};
            absorb(f);
        }
        if (inter.dim() == 0)
            return true;
    }
    for_each_epimorphism(B, gens, A, absorb, 0, 1, caps);
    return inter.dim() == 0;
}

bool is_characteristic(const Algebra &A, const Subspace &S, const AutGroup &aut) {
    for (const Morphism &g : aut.generators)
        for (std::size_t r = 0; r < S.basis.rows; ++r)
            if (!subspace_contains(A.F, S, vec_mat(A.F, S.basis.row(r), g.matrix)))
                return false;
    return true;
}

bool is_characteristic(const Algebra &A, const Subspace &S, Caps caps) {
    return is_characteristic(A, S, automorphism_group(A, caps));
}

bool is_CS(const Algebra &A, Caps caps) {
    AutGroup aut = automorphism_group(A, caps);
    bool cs = true;
    enumerate_subspaces(A.F, A.m, [&](const Subspace &S) {
        if (S.dim() > 0 && S.dim() < A.m && is_subalgebra(A, S) &&
            is_characteristic(A, S, aut))
            cs = false;
        return cs;
    });
    return cs;
}

bool is_CW(const Algebra &A, Caps caps) {
    AutGroup aut = automorphism_group(A, caps);
    bool cw = true;
    enumerate_subspaces(A.F, A.m, [&](const Subspace &S) {
        if (S.dim() > 0 && S.dim() < A.m && is_ideal(A, S) &&
            is_characteristic(A, S, aut))
            cw = false;
        return cw;
    });
    return cw;
}

bool is_fully_invariant(const Algebra &A, const Subspace &S, Caps caps) {
    if (S.ambient != A.m)
        throw error("is_fully_invariant: ambient mismatch");
    std::vector<Vec> gens = generating_tuple(A);
    check_tuple_cap(A.F, A.m, gens.size(), caps.tuple_eval,
                    "endomorphism enumeration");
    std::vector<Vec> candidates = all_vectors(A.F, A.m);
    bool invariant = true;
    std::function<bool(Mat &&)> emit = [&](Mat &&M) {
        for (std::size_t r = 0; r < S.basis.rows; ++r)
            if (!subspace_contains(A.F, S, vec_mat(A.F, S.basis.row(r), M))) {
                invariant = false;
                return false;
            }
        return true;
    };
    HomSearch{A, A, gens, candidates, false, emit, {}}.dfs();
    return invariant;
}

namespace {

// Smallest subspace of the subalgebra amb that contains B and absorbs
// multiplication by amb.
Subspace ideal_closure_in(const Algebra &A, const Subspace &amb, const Subspace &B) {
    SpanBuilder sb(A.F, A.m);
    std::vector<Vec> fresh;
    auto add = [&](const Vec &v) {
        if (sb.add(v))
            fresh.push_back(v);
    };
    for (std::size_t r = 0; r < B.basis.rows; ++r)
        add(B.basis.row(r));
    while (!fresh.empty()) {
        Vec v = std::move(fresh.back());
        fresh.pop_back();
        for (std::size_t r = 0; r < amb.basis.rows; ++r) {
            Vec u = amb.basis.row(r);
            add(alg_mul(A, u, v));
            add(alg_mul(A, v, u));
        }
    }
    return sb.subspace();
}

} // namespace

std::optional<std::size_t> subideal_depth(const Algebra &A, const Subspace &B) {
    if (!is_subalgebra(A, B))
        throw error("subideal_depth: B is not a subalgebra");
    Subspace cur = subspace_full(A.m);
    for (std::size_t depth = 0;; ++depth) {
        if (cur == B)
            return depth;
        Subspace next = ideal_closure_in(A, cur, B);
        if (next == cur)
            return std::nullopt;
        cur = std::move(next);
    }
}

bool is_retract(const Algebra &A, const Subspace &S, Caps) {
    if (!is_subalgebra(A, S))
        throw error("is_retract: not a subalgebra");
    for (const Subspace &I : ideals(A))
        if (I.dim() + S.dim() == A.m &&
            subspace_intersect(A.F, I, S).dim() == 0)
            return true;
    return false;
}

bool is_nice(const Algebra &A, Caps) {
    for (const Subspace &Bsub : subalgebras(A)) {
        Algebra R = restrict_to_subalgebra(A, Bsub);
        std::vector<Subspace> subs = subalgebras(R);
        for (const Subspace &I : ideals(R)) {
            bool complemented = false;
            for (const Subspace &C : subs)
                if (C.dim() + I.dim() == R.m &&
                    subspace_intersect(R.F, C, I).dim() == 0) {
                    complemented = true;
                    break;
                }
            if (!complemented)
                return false;
        }
    }
    return true;
}

Algebra direct_power(const Algebra &S, std::size_t k) {
    Algebra Q = zero_algebra(S.F, 0);
    for (std::size_t i = 0; i < k; ++i)
        Q = direct_sum(Q, S);
    return Q;
}

std::optional<std::vector<std::vector<std::size_t>>>
diagonal_decomposition(const Algebra &S, std::size_t k, const Subspace &img) {
    if (!is_simple(S))
        throw error("diagonal_decomposition: S must be simple");
    Algebra Q = direct_power(S, k);
    if (img.ambient != Q.m)
        throw error("diagonal_decomposition: ambient mismatch");
    if (!is_subalgebra(Q, img))
        return std::nullopt;
    const Field &F = S.F;
    const std::size_t m = S.m;

    auto block_image = [&](const Subspace &U, std::size_t j) {
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < U.basis.rows; ++r) {
            Vec v = U.basis.row(r);
            rows.emplace_back(v.begin() + j * m, v.begin() + (j + 1) * m);
        }
        return subspace_from_rows(F, m, rows);
    };

    // Factors where img projects onto all of S; a projection image strictly
    // between 0 and S rules the decomposition out.
    std::vector<std::size_t> used;
    std::vector<Subspace> kern(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t d = block_image(img, j).dim();
        if (d == 0)
            continue;
        if (d != m)
            return std::nullopt;
        used.push_back(j);
        // Vectors of img vanishing on block j.
        std::vector<Vec> rows;
        for (std::size_t c = 0; c < Q.m; ++c)
            if (c < j * m || c >= (j + 1) * m) {
                Vec unit(Q.m, 0);
                unit[c] = 1;
                rows.push_back(std::move(unit));
            }
        kern[j] = subspace_intersect(F, img, subspace_from_rows(F, Q.m, rows));
    }

    // Factors carrying the same diagonal block kill the same part of img.
    std::vector<std::vector<std::size_t>> groups;
    std::vector<Subspace> group_kern;
    for (std::size_t j : used) {
        bool placed = false;
        for (std::size_t g = 0; g < groups.size() && !placed; ++g)
            if (group_kern[g] == kern[j]) {
                groups[g].push_back(j);
                placed = true;
            }
        if (!placed) {
            groups.push_back({j});
            group_kern.push_back(kern[j]);
        }
    }

    Subspace sum = subspace_zero(Q.m);
    std::size_t total = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        Subspace delta = img;
        for (std::size_t h = 0; h < groups.size(); ++h)
            if (h != g)
                delta = subspace_intersect(F, delta, group_kern[h]);
        if (delta.dim() != m)
            return std::nullopt;
        for (std::size_t j : groups[g])
            if (block_image(delta, j).dim() != m)
                return std::nullopt;
        sum = subspace_sum(F, sum, delta);
        total += delta.dim();
    }
    if (total != img.dim() || !(sum == img))
        return std::nullopt;
    return groups;
}

} // namespace vlab
