#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algebras.hpp"
#include "varietylab/error.hpp"

using namespace vlab;
using namespace vlab::testing;

namespace {

Algebra random_algebra(std::mt19937 &rng, const Field &F, std::size_t m) {
    std::uniform_int_distribution<int> d(0, F.q() - 1);
    std::vector<fel> t(m * m * m);
    for (auto &x : t)
        x = fel(d(rng));
    return make_algebra(F, m, std::move(t));
}

// Random tensor supported on c_{ab}^l with l < min(a,b); always nilpotent.
Algebra random_nilpotent(std::mt19937 &rng, const Field &F, std::size_t m) {
    std::uniform_int_distribution<int> d(0, F.q() - 1);
    std::vector<fel> t(m * m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t l = 0; l < std::min(a, b); ++l)
                t[(a * m + b) * m + l] = fel(d(rng));
    return make_algebra(F, m, std::move(t));
}

Subspace span2(const Field &F, std::size_t amb, const std::vector<Vec> &rows) {
    return subspace_from_rows(F, amb, rows);
}

} // namespace

TEST_CASE("bilinear multiplication") {
    Algebra A = alg_minrigid();
    Vec e{1, 0}, f{0, 1};
    CHECK(alg_mul(A, e, e) == f);
    CHECK(alg_mul(A, e, f) == Vec{0, 0});
    CHECK(alg_mul(A, f, e) == e);
    CHECK(alg_mul(A, f, f) == e);
    CHECK(alg_mul(A, vec_add(A.F, e, f), vec_add(A.F, e, f)) == f);

    Algebra Z = zero_algebra(Field(3), 2);
    CHECK(alg_mul(Z, {1, 2}, {2, 1}) == Vec{0, 0});

    Algebra V = alg_idem2();
    CHECK(alg_mul(V, {1, 1}, {1, 1}) == Vec{1, 1});
    CHECK_THROWS_AS(alg_mul(A, {1, 0, 0}, {0, 1}), error);
}

TEST_CASE("multiplication operator matrices") {
    std::mt19937 rng(7);
    Field F(3);
    Algebra A = random_algebra(rng, F, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Vec v(3), x(3);
        for (auto &c : v)
            c = fel(rng() % 3);
        for (auto &c : x)
            c = fel(rng() % 3);
        CHECK(vec_mat(F, x, left_mult_matrix(A, v)) == alg_mul(A, v, x));
        CHECK(vec_mat(F, x, right_mult_matrix(A, v)) == alg_mul(A, x, v));
    }
}

TEST_CASE("subspace products") {
    Algebra A = alg_minrigid();
    Subspace full = subspace_full(2), zero = subspace_zero(2);
    CHECK(subspace_product(A, full, zero) == zero);
    CHECK(subspace_product(A, full, full) == full);

    Algebra N = alg_nil2();
    CHECK(subspace_product(N, subspace_full(2), subspace_full(2)) ==
          span2(N.F, 2, {{0, 1}}));
}

TEST_CASE("power series and nilpotency class") {
    Algebra N = alg_nil2();
    SeriesResult s = power_series(N);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[0] == subspace_full(2));
    CHECK(s.terms[1] == span2(N.F, 2, {{0, 1}}));
    CHECK(s.terms[2].dim() == 0);
    CHECK(s.terminated);
    CHECK(nilpotency_class(N) == 2);

    CHECK(nilpotency_class(zero_algebra(Field(2), 3)) == 1);
    CHECK(nilpotency_class(zero_algebra(Field(2), 0)) == 0);

    Algebra A = alg_minrigid();
    SeriesResult sa = power_series(A);
    CHECK(sa.terms.size() == 1); // A^2 = A
    CHECK(!sa.terminated);
    CHECK(!nilpotency_class(A).has_value());
    CHECK(!is_nilpotent(alg_idem2()));
}

TEST_CASE("depth series") {
    Algebra N = alg_nil2();
    SeriesResult s = depth_series(N);
    CHECK(s.terms[1] == span2(N.F, 2, {{0, 1}}));
    CHECK(nilpotent_depth(N) == 2);
    CHECK(nilpotent_depth(zero_algebra(Field(2), 2)) == 1);
    CHECK(nilpotent_depth(zero_algebra(Field(2), 0)) == 0);
    CHECK(!nilpotent_depth(alg_minrigid()).has_value());
}

TEST_CASE("depth vs class bounds on random nilpotent algebras") {
    std::mt19937 rng(11);
    for (int q : {2, 3}) {
        Field F(q);
        for (std::size_t m = 1; m <= 4; ++m)
            for (int trial = 0; trial < 30; ++trial) {
                Algebra A = random_nilpotent(rng, F, m);
                auto c = nilpotency_class(A);
                auto d = nilpotent_depth(A);
                REQUIRE(c.has_value());
                REQUIRE(d.has_value());
                CHECK(*d <= *c);
                CHECK(*c <= (std::size_t(1) << (*d - (*d ? 1 : 0))) + 1);
            }
    }
}

TEST_CASE("annihilator and its ascending series") {
    CHECK(annihilator(zero_algebra(Field(2), 3)) == subspace_full(3));

    Algebra N = alg_nil2();
    CHECK(annihilator(N) == span2(N.F, 2, {{0, 1}}));
    SeriesResult s = upper_annihilator_series(N);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[0].dim() == 0);
    CHECK(s.terms[1] == span2(N.F, 2, {{0, 1}}));
    CHECK(s.terms[2] == subspace_full(2));
    CHECK(s.terminated);
    CHECK(s.length == 2);

    Algebra V = alg_idem2();
    CHECK(annihilator(V).dim() == 0);
    SeriesResult sv = upper_annihilator_series(V);
    CHECK(sv.terms.size() == 1);
    CHECK(!sv.terminated);
}

TEST_CASE("nilpotency characterizations agree on random algebras") {
    std::mt19937 rng(13);
    Field F(2);
    for (std::size_t m = 0; m <= 3; ++m)
        for (int trial = 0; trial < 40; ++trial) {
            Algebra A = random_algebra(rng, F, m);
            bool via_class = nilpotency_class(A).has_value();
            bool via_depth = nilpotent_depth(A).has_value();
            bool via_ann = upper_annihilator_series(A).terminated;
            CHECK(via_class == via_depth);
            CHECK(via_class == via_ann);
        }
}

TEST_CASE("commutator series and solvable length") {
    Algebra S = alg_solv3();
    SeriesResult s = commutator_series(S);
    REQUIRE(s.terms.size() == 4);
    CHECK(s.terms[1] == span2(S.F, 3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(s.terms[2] == span2(S.F, 3, {{0, 0, 1}}));
    CHECK(s.terms[3].dim() == 0);
    CHECK(solvable_length(S) == 3);
    CHECK(is_solvable(S));
    CHECK(!is_nilpotent(S));

    CHECK(solvable_length(zero_algebra(Field(2), 2)) == 1);
    CHECK(solvable_length(zero_algebra(Field(2), 0)) == 0);
    CHECK(!solvable_length(alg_minrigid()).has_value());
    CHECK(!is_solvable(alg_idem2()));
}

TEST_CASE("generated ideals and subalgebras") {
    Algebra A = alg_minrigid();
    CHECK(ideal_generated(A, {{0, 0}}).dim() == 0);
    CHECK(subalgebra_generated(A, {}).dim() == 0);
    CHECK(subalgebra_generated(A, {{1, 0}}) == subspace_full(2));

    Algebra N = alg_nil2();
    CHECK(ideal_generated(N, {{0, 1}}) == span2(N.F, 2, {{0, 1}}));
    CHECK(subalgebra_generated(N, {{0, 1}}) == span2(N.F, 2, {{0, 1}}));

    // In the solvable example, the ideal closure of c pulls in b (since
    // ca = b), giving the 2-dim ideal <b,c>.
    Algebra S = alg_solv3();
    CHECK(ideal_generated(S, {{0, 0, 1}}) ==
          span2(S.F, 3, {{0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("minimal ideals, monolith, socle") {
    Algebra V = alg_idem2();
    auto mv = minimal_ideals(V);
    REQUIRE(mv.size() == 1);
    CHECK(mv[0] == subspace_full(2));
    CHECK(monolith(V) == subspace_full(2));
    CHECK(socle_height(V) == 1);

    Algebra N = alg_nil2();
    auto mn = minimal_ideals(N);
    REQUIRE(mn.size() == 1);
    CHECK(mn[0] == span2(N.F, 2, {{0, 1}}));

    Algebra NN = direct_sum(N, N);
    auto mnn = minimal_ideals(NN);
    CHECK(mnn.size() == 3); // <f1>, <f2>, <f1+f2>
    CHECK(!monolith(NN).has_value());
    SeriesResult soc = socle_series(NN);
    CHECK(soc.terms[1] == span2(NN.F, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}}));
    CHECK(socle_height(NN) == 2);

    CHECK(socle_height(zero_algebra(Field(2), 0)) == 0);
    CHECK(socle_height(zero_algebra(Field(3), 2)) == 1);
}

TEST_CASE("socle series equals annihilator series on nilpotent algebras") {
    std::mt19937 rng(17);
    std::vector<Algebra> sample = {alg_nil2(), direct_sum(alg_nil2(), alg_nil2())};
    Field F2(2), F3(3);
    for (int trial = 0; trial < 15; ++trial) {
        sample.push_back(random_nilpotent(rng, F2, 3));
        sample.push_back(random_nilpotent(rng, F3, 3));
    }
    for (const Algebra &A : sample) {
        REQUIRE(is_nilpotent(A));
        SeriesResult soc = socle_series(A);
        SeriesResult ann = upper_annihilator_series(A);
        CHECK(soc.terms == ann.terms);
        CHECK(socle_height(A) == *nilpotent_depth(A));
    }
}

TEST_CASE("nonzero ideals of nilpotent algebras meet the annihilator") {
    std::mt19937 rng(19);
    Field F(2);
    for (int trial = 0; trial < 10; ++trial) {
        Algebra A = random_nilpotent(rng, F, 3);
        Subspace ann = annihilator(A);
        for (const Subspace &J : ideals(A))
            if (J.dim() > 0)
                CHECK(subspace_intersect(F, J, ann).dim() > 0);
    }
}

TEST_CASE("simplicity and minimality predicates") {
    CHECK(is_simple(alg_minrigid()));
    CHECK(is_minimal_algebra(alg_minrigid()));
    CHECK(is_simple(alg_idem2()));
    CHECK(!is_minimal_algebra(alg_idem2()));
    CHECK(is_simple(alg_gf2()));
    CHECK(is_minimal_algebra(alg_gf2()));
    CHECK(!is_simple(alg_nil2()));
    CHECK(!is_minimal_algebra(alg_nil2()));
    CHECK(!is_simple(zero_algebra(Field(2), 1)));
    CHECK(!is_simple(zero_algebra(Field(2), 0)));
    CHECK(!is_minimal_algebra(zero_algebra(Field(2), 0)));

    CHECK(is_abelian(zero_algebra(Field(2), 2)));
    CHECK(!is_abelian(alg_nil2()));
    CHECK(is_commutative(alg_idem2()));
    CHECK(!is_commutative(alg_minrigid()));
    CHECK(is_one_generated(alg_minrigid()));
    CHECK(is_one_generated(alg_nil2()));
    CHECK(!is_one_generated(zero_algebra(Field(2), 2)));
}

TEST_CASE("quotients") {
    Algebra A = alg_minrigid();
    Quotient q0 = quotient(A, subspace_zero(2));
    CHECK(q0.alg.m == 2);
    CHECK(q0.alg.t == A.t);

    Quotient qa = quotient(A, subspace_full(2));
    CHECK(qa.alg.m == 0);

    Algebra N = alg_nil2();
    Quotient qn = quotient(N, span2(N.F, 2, {{0, 1}}));
    CHECK(qn.alg.m == 1);
    CHECK(is_abelian(qn.alg));
    CHECK(vec_mat(N.F, {0, 1}, qn.proj) == Vec{0});
    CHECK(vec_mat(N.F, {1, 0}, qn.proj) == Vec{1});

    // The projection is multiplicative.
    std::mt19937 rng(23);
    Field F(3);
    for (int trial = 0; trial < 5; ++trial) {
        Algebra R = random_algebra(rng, F, 3);
        for (const Subspace &I : ideals(R)) {
            Quotient Q = quotient(R, I);
            for (int t2 = 0; t2 < 8; ++t2) {
                Vec u(3), v(3);
                for (auto &c : u)
                    c = fel(rng() % 3);
                for (auto &c : v)
                    c = fel(rng() % 3);
                CHECK(vec_mat(F, alg_mul(R, u, v), Q.proj) ==
                      alg_mul(Q.alg, vec_mat(F, u, Q.proj),
                              vec_mat(F, v, Q.proj)));
            }
        }
    }

    // <e> is a subalgebra of the idempotent example but not an ideal.
    Algebra V = alg_idem2();
    CHECK_THROWS_AS(quotient(V, span2(V.F, 2, {{1, 0}})), error);
}

TEST_CASE("direct sums of simple algebras have only block ideals") {
    Algebra V = alg_idem2();
    Algebra VV = direct_sum(V, V);
    CHECK(VV.m == 4);
    auto ids = ideals(VV);
    std::vector<Subspace> expect = {
        subspace_zero(4),
        span2(VV.F, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}),
        span2(VV.F, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}),
        subspace_full(4),
    };
    CHECK(ids.size() == 4);
    for (const Subspace &e : expect)
        CHECK(std::find(ids.begin(), ids.end(), e) != ids.end());
}

TEST_CASE("subalgebra and ideal lists") {
    Algebra Z = zero_algebra(Field(2), 2);
    CHECK(subalgebras(Z).size() == 5);
    CHECK(ideals(Z).size() == 5);

    Algebra A = alg_minrigid();
    auto sa = subalgebras(A);
    CHECK(sa.size() == 2);

    Algebra V = alg_idem2();
    auto sv = subalgebras(V);
    CHECK(sv.size() == 5);
    CHECK(std::find(sv.begin(), sv.end(), span2(V.F, 2, {{1, 1}})) != sv.end());
    CHECK(ideals(V).size() == 2);
}

TEST_CASE("restriction to a subalgebra") {
    Algebra V = alg_idem2();
    Algebra E = restrict_to_subalgebra(V, span2(V.F, 2, {{1, 0}}));
    CHECK(algebra_equal(E, alg_gf2()));
    Algebra D = restrict_to_subalgebra(V, span2(V.F, 2, {{1, 1}}));
    CHECK(algebra_equal(D, alg_gf2()));
    CHECK_THROWS_AS(restrict_to_subalgebra(alg_minrigid(),
                                           span2(Field(2), 2, {{1, 0}})),
                    error);
}

TEST_CASE("chief series and supersolvability") {
    Algebra N = alg_nil2();
    auto cs = chief_series(N);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].first.dim() == 0);
    CHECK(cs[0].second == span2(N.F, 2, {{0, 1}}));
    CHECK(cs[1].second == subspace_full(2));
    CHECK(is_supersolvable(N));

    Algebra V = alg_idem2();
    auto cv = chief_series(V);
    REQUIRE(cv.size() == 1);
    CHECK(cv[0].second == subspace_full(2));
    CHECK(!is_supersolvable(V));

    CHECK(is_supersolvable(zero_algebra(Field(2), 3)));
    CHECK(is_supersolvable(zero_algebra(Field(2), 0)));
    CHECK(!is_supersolvable(alg_gf2()));

    // The solvable length-3 example has a unique minimal ideal <b,c> and in
    // particular no 1-dim (abelian) ideals.
    Algebra S = alg_solv3();
    auto ms = minimal_ideals(S);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0] == span2(S.F, 3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(!is_supersolvable(S));
    auto css = chief_series(S);
    REQUIRE(css.size() == 2);
    CHECK(css[0].second.dim() == 2);
}

TEST_CASE("power series containments on random tensors") {
    std::mt19937 rng(29);
    for (int q : {2, 3}) {
        Field F(q);
        for (std::size_t m = 1; m <= 4; ++m)
            for (int trial = 0; trial < 15; ++trial) {
                Algebra A = random_algebra(rng, F, m);
                SeriesResult s = power_series(A);
                Subspace full = subspace_full(m);
                for (std::size_t i = 1; i < s.terms.size(); ++i) {
                    CHECK(subspace_leq(F, s.terms[i], s.terms[i - 1]));
                    CHECK(subspace_leq(
                        F, subspace_product(A, full, s.terms[i - 1]), s.terms[i]));
                    CHECK(subspace_leq(
                        F, subspace_product(A, s.terms[i - 1], full), s.terms[i]));
                }
                // The last listed term is stable.
                Subspace last = s.terms.back();
                CHECK(subspace_leq(F, subspace_product(A, full, last), last));
                CHECK(subspace_leq(F, subspace_product(A, last, full), last));
            }
    }
}

TEST_CASE("tensor validation") {
    Field F(2);
    CHECK_THROWS_AS(make_algebra(F, 2, std::vector<fel>(7, 0)), error);
    CHECK_THROWS_AS(make_algebra(F, 1, {2}), error);
    CHECK_THROWS_AS(direct_sum(alg_gf2(), zero_algebra(Field(3), 1)), error);
}
