#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "algebras.hpp"
#include "varietylab/error.hpp"
#include "varietylab/morphisms.hpp"

using namespace vlab;
using namespace vlab::testing;

namespace {

Algebra random_nilpotent(std::mt19937 &rng, const Field &F, std::size_t m) {
    std::uniform_int_distribution<int> d(0, F.q() - 1);
    std::vector<fel> t(m * m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t l = 0; l < std::min(a, b); ++l)
                t[(a * m + b) * m + l] = fel(d(rng));
    return make_algebra(F, m, std::move(t));
}

Mat random_invertible(std::mt19937 &rng, const Field &F, std::size_t m) {
    std::uniform_int_distribution<int> d(0, F.q() - 1);
    for (;;) {
        Mat g(m, m);
        for (auto &x : g.a)
            x = fel(d(rng));
        if (mat_inverse(F, g))
            return g;
    }
}

Subspace span2(const Field &F, std::size_t amb, const std::vector<Vec> &rows) {
    return subspace_from_rows(F, amb, rows);
}

// Multiplies the generators out and checks the stated order.
std::size_t closure_order(const Field &F, const AutGroup &G, std::size_t m) {
    std::set<std::vector<fel>> seen;
    std::vector<Mat> elems{Mat::identity(m)};
    seen.insert(elems[0].a);
    for (std::size_t h = 0; h < elems.size(); ++h)
        for (const Morphism &g : G.generators) {
            Mat P = mat_mul(F, elems[h], g.matrix);
            if (seen.insert(P.a).second)
                elems.push_back(P);
        }
    return seen.size();
}

} // namespace

TEST_CASE("homomorphism predicate") {
    Algebra A = alg_idem2();
    Morphism id{&A, &A, Mat::identity(2)};
    CHECK(is_homomorphism(id));
    Morphism zero{&A, &A, Mat(2, 2)};
    CHECK(is_homomorphism(zero));
    // Swapping e and f permutes the three nonzero elements.
    Mat swp(2, 2);
    swp.at(0, 1) = 1;
    swp.at(1, 0) = 1;
    CHECK(is_homomorphism(Morphism{&A, &A, swp}));
    // e -> e, f -> 0 breaks ef = e + f.
    Mat bad(2, 2);
    bad.at(0, 0) = 1;
    CHECK(!is_homomorphism(Morphism{&A, &A, bad}));

    Morphism shape{&A, &A, Mat(1, 2)};
    CHECK_THROWS_AS(is_homomorphism(shape), error);
}

TEST_CASE("graph closure and extension") {
    Algebra N = alg_nil2();
    Vec e{1, 0}, f{0, 1}, ef{1, 1};

    // e -> e + f forces f = e^2 -> (e+f)^2 = f; this is an automorphism.
    auto h = extend_hom(N, {e}, N, {ef});
    REQUIRE(h.has_value());
    CHECK(h->matrix == Mat::from_rows({{1, 1}, {0, 1}}, 2));
    CHECK(is_homomorphism(*h));

    // f alone generates only <f>: no full extension.
    CHECK(!extend_hom(N, {f}, N, {e}).has_value());

    // x^2 = x cannot go to a nonzero element of the zero algebra.
    Algebra G = alg_gf2();
    Algebra Z1 = zero_algebra(Field(2), 1);
    GraphClosure gc = close_graph(G, Z1, {{1}}, {{1}});
    CHECK(!gc.consistent);
    CHECK(!extend_hom(G, {{1}}, Z1, {{1}}).has_value());
    CHECK(extend_hom(G, {{1}}, Z1, {{0}}).has_value());
}

TEST_CASE("generating tuples") {
    // Every nonzero element of a minimal algebra generates it.
    Algebra M = alg_minrigid();
    CHECK(generating_tuple(M).size() == 1);

    Algebra S = alg_solv3();
    std::vector<Vec> gens = generating_tuple(S);
    CHECK(subalgebra_generated(S, gens).dim() == S.m);

    Algebra Z = zero_algebra(Field(2), 3);
    CHECK(generating_tuple(Z).size() == 3);

    CHECK(generating_tuple(zero_algebra(Field(2), 0)).empty());
}

TEST_CASE("isomorphism search") {
    Algebra A = alg_solv3();
    CHECK(find_isomorphism(A, A).has_value());

    std::mt19937 rng(21);
    for (int t = 0; t < 4; ++t) {
        Algebra B = transform_algebra(A, random_invertible(rng, A.F, A.m));
        auto f = find_isomorphism(A, B);
        REQUIRE(f.has_value());
        CHECK(is_homomorphism(*f));
        CHECK(rref(A.F, f->matrix).rank == A.m);
    }

    // Same dimension is not enough.
    CHECK(!find_isomorphism(alg_minrigid(), zero_algebra(Field(2), 2)).has_value());
    CHECK(!find_isomorphism(alg_nil2(), zero_algebra(Field(2), 2)).has_value());
    // The two one-dimensional algebras over GF(2).
    CHECK(!find_isomorphism(alg_gf2(), zero_algebra(Field(2), 1)).has_value());
    // Dimension mismatch is immediate.
    CHECK(!find_isomorphism(alg_gf2(), alg_nil2()).has_value());
}

TEST_CASE("automorphism groups") {
    CHECK(automorphism_group(alg_minrigid()).order == 1);
    CHECK(automorphism_group(alg_idem2()).order == 6);
    // e -> e + bf, f -> f are the only automorphisms of ee = f.
    CHECK(automorphism_group(alg_nil2()).order == 2);
    // Zero multiplication: the full general linear group.
    CHECK(automorphism_group(zero_algebra(Field(2), 2)).order == 6);
    CHECK(automorphism_group(zero_algebra(Field(3), 2)).order == 48);
    CHECK(automorphism_group(zero_algebra(Field(2), 3)).order == 168);

    Algebra S = alg_solv3();
    AutGroup G = automorphism_group(S);
    CHECK(168 % G.order == 0);
    CHECK(closure_order(S.F, G, S.m) == G.order);
    for (const Morphism &g : G.generators) {
        CHECK(is_homomorphism(g));
        CHECK(rref(S.F, g.matrix).rank == S.m);
    }

    // The order is an isomorphism invariant.
    std::mt19937 rng(23);
    for (int t = 0; t < 3; ++t) {
        Algebra B = transform_algebra(alg_idem2(), random_invertible(rng, Field(2), 2));
        CHECK(automorphism_group(B).order == 6);
    }
}

TEST_CASE("epimorphism enumeration") {
    Algebra A = alg_idem2();
    Vec e{1, 0}, f{0, 1};

    // A onto itself from its basis: exactly the automorphisms, identity included.
    std::vector<Morphism> epis = epimorphisms(A, {e, f}, A);
    CHECK(epis.size() == 6);
    bool has_id = false;
    for (const Morphism &g : epis) {
        CHECK(is_homomorphism(g));
        CHECK(is_ideal(A, kernel(g)));
        CHECK(is_subalgebra(A, image(g)));
        if (g.matrix == Mat::identity(2))
            has_id = true;
    }
    CHECK(has_id);

    // ee = f with generator e: e -> e and e -> e + f are onto.
    Algebra N = alg_nil2();
    CHECK(epimorphisms(N, {e}, N).size() == 2);

    // No epimorphism onto the one-dimensional idempotent algebra.
    CHECK(epimorphisms(A, {e, f}, alg_gf2()).empty());

    // Sharding partitions the tuple space.
    std::size_t sharded = 0;
    for (std::size_t s = 0; s < 3; ++s)
        for_each_epimorphism(
            N, {e}, N,
            [&](const Morphism &) {
                ++sharded;
                return true;
            },
            s, 3);
    CHECK(sharded == 2);
}

TEST_CASE("residual separation") {
    Algebra A = alg_idem2();
    Vec e{1, 0}, f{0, 1};
    CHECK(is_residually(A, {e, f}, A));
    CHECK(!is_residually(A, {e, f}, alg_gf2()));

    Algebra S = alg_solv3();
    CHECK(is_residually(S, generating_tuple(S), S));

    // One generator whose coordinates run over the nonzero elements makes the
    // cube of a minimal rigid algebra one-generated; the three projections
    // separate its points.
    Algebra M = alg_minrigid();
    Algebra P3 = direct_power(M, 3);
    Vec g{0, 1, 1, 0, 1, 1};
    REQUIRE(subalgebra_generated(P3, {g}).dim() == 6);
    std::vector<Morphism> epis = epimorphisms(P3, {g}, M);
    CHECK(epis.size() == 3);
    for (const Morphism &h : epis)
        CHECK(kernel(h).dim() == 4);
    CHECK(is_residually(P3, {g}, M));
}

TEST_CASE("characteristic subspaces, CS and CW") {
    Field F2(2);
    Algebra GG = direct_sum(alg_gf2(), alg_gf2());
    // Swapping the factors fixes the diagonal but moves each factor.
    CHECK(is_characteristic(GG, span2(F2, 2, {{1, 1}})));
    CHECK(!is_characteristic(GG, span2(F2, 2, {{1, 0}})));
    CHECK(!is_CS(GG));
    CHECK(is_CW(GG));

    CHECK(is_CS(alg_idem2()));
    CHECK(is_CW(alg_idem2()));
    CHECK(is_CS(direct_power(alg_idem2(), 2)));
    CHECK(!is_CS(direct_power(alg_minrigid(), 2)));

    CHECK(is_CS(zero_algebra(F2, 2)));

    Algebra N = alg_nil2();
    CHECK(!is_CS(N));
    CHECK(!is_CW(N));
}

TEST_CASE("fully invariant subspaces") {
    Algebra N = alg_nil2();
    Field F2(2);
    CHECK(is_fully_invariant(N, subspace_zero(2)));
    CHECK(is_fully_invariant(N, subspace_full(2)));
    CHECK(is_fully_invariant(N, span2(F2, 2, {{0, 1}})));
    CHECK(!is_fully_invariant(N, span2(F2, 2, {{1, 0}})));

    // The diagonal survives every automorphism but not the projection
    // (x, y) -> (x, 0).
    Algebra GG = direct_sum(alg_gf2(), alg_gf2());
    CHECK(!is_fully_invariant(GG, span2(F2, 2, {{1, 1}})));

    // The square is spanned by images of products.
    Algebra S = alg_solv3();
    Subspace sq = subspace_product(S, subspace_full(3), subspace_full(3));
    CHECK(is_fully_invariant(S, sq));
}

TEST_CASE("subideal depth") {
    Algebra S = alg_solv3();
    Field F2(2);
    CHECK(subideal_depth(S, subspace_full(3)) == 0);
    CHECK(subideal_depth(S, span2(F2, 3, {{0, 1, 0}, {0, 0, 1}})) == 1);
    // <c> is an ideal of A^2 but not of A: two steps down.
    Subspace c = span2(F2, 3, {{0, 0, 1}});
    CHECK(!is_ideal(S, c));
    CHECK(subideal_depth(S, c) == 2);

    // The diagonal of the square of a simple algebra absorbs nothing: the
    // ideal it generates is everything, so the chain stalls.
    Algebra M = alg_idem2();
    Algebra P = direct_power(M, 2);
    Subspace diag = span2(F2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(!subideal_depth(P, diag).has_value());

    CHECK_THROWS_AS(subideal_depth(alg_nil2(), span2(F2, 2, {{1, 0}})), error);

    // In a nilpotent algebra every subalgebra is a subideal, within depth
    // many steps.
    std::mt19937 rng(29);
    for (int t = 0; t < 6; ++t) {
        Algebra A = random_nilpotent(rng, F2, 3);
        std::size_t d = *nilpotent_depth(A);
        for (const Subspace &B : subalgebras(A)) {
            auto dep = subideal_depth(A, B);
            REQUIRE(dep.has_value());
            CHECK(*dep <= d);
        }
    }
}

TEST_CASE("retracts and nice algebras") {
    Field F2(2);
    Algebra M = alg_minrigid();
    Algebra P2 = direct_power(M, 2);
    Subspace diag = span2(F2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(is_retract(P2, diag));
    CHECK(is_retract(P2, subspace_full(4)));

    // Every subalgebra of a square or cube of a minimal algebra is a retract.
    for (const Subspace &S : subalgebras(P2))
        CHECK(is_retract(P2, S));
    Algebra P3 = direct_power(M, 3);
    for (const Subspace &S : subalgebras(P3))
        CHECK(is_retract(P3, S));

    Algebra N = alg_nil2();
    CHECK(!is_retract(N, span2(F2, 2, {{0, 1}})));

    // <f> has no complementary subalgebra inside ee = f.
    CHECK(!is_nice(N));
    CHECK(is_nice(zero_algebra(F2, 2)));
    CHECK(is_nice(alg_idem2()));
}

TEST_CASE("diagonal decompositions in direct powers") {
    Algebra S = alg_idem2();
    Field F2(2);

    auto part = diagonal_decomposition(S, 2, span2(F2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    REQUIRE(part.has_value());
    CHECK(*part == std::vector<std::vector<std::size_t>>{{0}});

    part = diagonal_decomposition(S, 2, span2(F2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
    REQUIRE(part.has_value());
    CHECK(*part == std::vector<std::vector<std::size_t>>{{0, 1}});

    // A diagonal twisted by the swap automorphism.
    part = diagonal_decomposition(S, 2, span2(F2, 4, {{1, 0, 0, 1}, {0, 1, 1, 0}}));
    REQUIRE(part.has_value());
    CHECK(*part == std::vector<std::vector<std::size_t>>{{0, 1}});

    // Diagonal on factors 1,2 plus the full third factor.
    part = diagonal_decomposition(
        S, 3,
        span2(F2, 6,
              {{1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));
    REQUIRE(part.has_value());
    CHECK(*part == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});

    // The full square splits into the two factors.
    part = diagonal_decomposition(S, 2, subspace_full(4));
    REQUIRE(part.has_value());
    CHECK(*part == std::vector<std::vector<std::size_t>>{{0}, {1}});

    // Subalgebras of odd dimension are never sums of diagonals.
    Algebra Q = direct_power(S, 2);
    for (const Subspace &sub : subalgebras(Q))
        if (sub.dim() % 2 == 1)
            CHECK(!diagonal_decomposition(S, 2, sub).has_value());

    // Not a subalgebra at all.
    CHECK(!diagonal_decomposition(S, 2, span2(F2, 4, {{1, 1, 0, 0}})).has_value());

    CHECK_THROWS_AS(diagonal_decomposition(alg_nil2(), 2, subspace_zero(4)), error);
}
