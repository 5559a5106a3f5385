#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "algebras.hpp"
#include "varietylab/birkhoff_free.hpp"
#include "varietylab/error.hpp"
#include "varietylab/morphisms.hpp"
#include "varietylab/poly_lang.hpp"

using namespace vlab;
using namespace vlab::testing;

namespace {

std::size_t max_chief_factor_dim(const Algebra &A) {
    std::size_t best = 0;
    for (const auto &[below, above] : chief_series(A))
        best = std::max(best, above.dim() - below.dim());
    return best;
}

NAPoly idempotent_law(const Field &F) {
    // x1 x1 - x1
    return make_poly(F, {{fel(1), mon_mul(mon_var(0), mon_var(0))},
                         {F.neg(1), mon_var(0)}});
}

} // namespace

TEST_CASE("ambient algebra: blocks, generators, product, materialization") {
    Field F(2);

    BirkhoffAmbient amb = birkhoff_algebra(alg_gf2(), 2);
    CHECK(amb.blocks == 3);
    CHECK(amb.dim == 3);
    REQUIRE(amb.generators.size() == 2);
    CHECK(amb.generators[0] == Vec{1, 0, 1});
    CHECK(amb.generators[1] == Vec{0, 1, 1});

    // Blockwise product agrees with the materialized structure constants.
    Algebra mat = amb.materialize();
    enumerate_vectors(F, 3, [&](const Vec &u) {
        enumerate_vectors(F, 3, [&](const Vec &v) {
            CHECK(amb.mul(u, v) == alg_mul(mat, u, v));
            return true;
        });
        return true;
    });
    // For the ground field the ambient is the cube of the field.
    Algebra cube = direct_sum(direct_sum(alg_gf2(), alg_gf2()), alg_gf2());
    CHECK(algebra_equal(mat, cube));

    BirkhoffAmbient amb_n = birkhoff_algebra(alg_nil2(), 1);
    CHECK(amb_n.blocks == 3);
    CHECK(amb_n.dim == 6);
    // Block b of the single generator is the b-th nonzero element, in
    // odometer order (1,0), (0,1), (1,1).
    CHECK(amb_n.generators[0] == Vec{1, 0, 0, 1, 1, 1});
    Algebra mat_n = amb_n.materialize();
    Vec u{1, 1, 0, 1, 1, 0}, v{0, 1, 1, 0, 1, 1};
    CHECK(amb_n.mul(u, v) == alg_mul(mat_n, u, v));

    // Degenerate shapes.
    CHECK(birkhoff_algebra(alg_nil2(), 0).dim == 0);
    CHECK(birkhoff_algebra(zero_algebra(F, 0), 3).dim == 0);

    // Caps: rank 6 over the 4-element algebra needs 2*(4^6-1) = 8190 > 4096,
    // and materializing a 510-dim ambient needs 510^3 tensor entries.
    CHECK_THROWS_AS(birkhoff_algebra(alg_nil2(), 6), cap_exceeded);
    CHECK_THROWS_AS(birkhoff_algebra(alg_nil2(), 4).materialize(), cap_exceeded);
}

TEST_CASE("free algebra dimensions match the frozen tables") {
    DimensionTable nil2 = dimension_table(alg_nil2(), 4);
    CHECK(nil2.d == std::vector<std::size_t>{2, 5, 9, 14});
    CHECK(nil2.b == std::vector<std::size_t>{6, 30, 126, 510});
    CHECK(nil2.d_k == std::vector<long long>{2, 1, 0, 0});

    DimensionTable gf2 = dimension_table(alg_gf2(), 5);
    CHECK(gf2.d == std::vector<std::size_t>{1, 3, 7, 15, 31});
    CHECK(gf2.b == gf2.d);
    CHECK(gf2.d_k == std::vector<long long>{1, 1, 1, 1, 1});

    DimensionTable mr = dimension_table(alg_minrigid(), 2);
    CHECK(mr.d == std::vector<std::size_t>{6, 30});
    CHECK(mr.b == mr.d);
    CHECK(mr.d_k == std::vector<long long>{6, 18});

    DimensionTable id2 = dimension_table(alg_idem2(), 2);
    CHECK(id2.d == std::vector<std::size_t>{1, 5});
    CHECK(id2.b == std::vector<std::size_t>{6, 30});
    CHECK(id2.d_k == std::vector<long long>{1, 3});

    DimensionTable sv = dimension_table(alg_solv3(), 2);
    CHECK(sv.d == std::vector<std::size_t>{10, 104});
    CHECK(sv.b == std::vector<std::size_t>{21, 189});
    CHECK(sv.d_k == std::vector<long long>{10, 84});

    // The free dimension never exceeds the ambient dimension.
    for (const DimensionTable *T : {&nil2, &gf2, &mr, &id2, &sv})
        for (std::size_t i = 0; i < T->d.size(); ++i)
            CHECK(T->d[i] <= T->b[i]);

    // Roots are d(n)^(1/n).
    CHECK(nil2.roots[0] == doctest::Approx(2.0));
    CHECK(nil2.roots[1] == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("dimension prefix predicts later dimensions") {
    // Rank 5 and 6 need a 2*(4^6-1) = 8190 dimensional ambient.
    Caps big = Caps::from_env();
    big.ambient_dims = 16384;
    DimensionTable direct = dimension_table(alg_nil2(), 6, big);
    CHECK(direct.d == std::vector<std::size_t>{2, 5, 9, 14, 20, 27});

    DimensionTable prefix = dimension_table(alg_nil2(), 4);
    CHECK(predicted_dimension(prefix, 5) == 20);
    CHECK(predicted_dimension(prefix, 6) == 27);

    // For the ground field every rank contributes a fresh coordinate
    // (d_k = 1 for all k), so a truncated prefix undercounts strictly,
    // while the full-length reconstruction is exact.
    DimensionTable gcut = dimension_table(alg_gf2(), 3);
    CHECK(predicted_dimension(gcut, 4) == 14);
    CHECK(predicted_dimension(dimension_table(alg_gf2(), 4), 4) == 15);

    // Caps: rank 6 is rejected outright at the default ambient limit.
    CHECK_THROWS_AS(dimension_table(alg_nil2(), 6), cap_exceeded);
}

TEST_CASE("free algebra structure: span, squares, witness degrees") {
    FreeAlgebraRep F1m = free_algebra(alg_minrigid(), 1);
    CHECK(F1m.dim() == 6);
    CHECK(F1m.rank() == 1);
    CHECK(F1m.span.dim() == 6);
    CHECK(F1m.relations.empty());
    CHECK(F1m.max_witness_degree == 4);
    // One generator of a simple algebra with full square: the free algebra
    // keeps a full square too.
    CHECK(free_square(F1m).dim() == 6);
    // And it is the cube of the generator algebra.
    Algebra cube = direct_sum(direct_sum(alg_minrigid(), alg_minrigid()),
                              alg_minrigid());
    CHECK(find_isomorphism(free_as_algebra(F1m), cube).has_value());

    FreeAlgebraRep F2n = free_algebra(alg_nil2(), 2);
    CHECK(F2n.dim() == 5);
    CHECK(F2n.max_witness_degree == 2);
    CHECK(free_square(F2n).dim() == 3);
    Algebra F2n_alg = free_as_algebra(F2n);
    CHECK(is_commutative(F2n_alg));
    CHECK(is_nilpotent(F2n_alg));
    CHECK(nilpotency_class(F2n_alg) == 2);

    FreeAlgebraRep F1i = free_algebra(alg_idem2(), 1);
    CHECK(F1i.dim() == 1);
    CHECK(F1i.max_witness_degree == 1);
    CHECK(find_isomorphism(free_as_algebra(F1i), alg_gf2()).has_value());

    // Rank 0 and the zero generator algebra give the zero free algebra.
    CHECK(free_algebra(alg_nil2(), 0).dim() == 0);
    CHECK(free_algebra(zero_algebra(Field(2), 0), 2).dim() == 0);

    // Basis expressions evaluate back to the basis vectors: the first basis
    // vector of a rank-2 free algebra is the first generator.
    CHECK(F2n.basis_vectors[0] == F2n.ambient.generators[0]);
    CHECK(mon_to_string(F2n.expressions[0]) == "x1");
    CHECK(mon_to_string(F2n.expressions[1]) == "x2");
}

TEST_CASE("recorded relations are identities of the generator algebra") {
    FreeAlgebraRep F2n = free_algebra(alg_nil2(), 2);
    CHECK(F2n.relations.size() == 10); // capped
    for (const NAPoly &r : F2n.relations)
        CHECK(is_identity(alg_nil2(), r));
    // The first one found is commutativity (over GF(2)).
    CHECK(poly_to_string(F2n.relations[0]) == "(x1 x2) + (x2 x1)");

    FreeAlgebraRep F1i = free_algebra(alg_idem2(), 1);
    REQUIRE(F1i.relations.size() >= 1);
    CHECK(poly_to_string(F1i.relations[0]) == "x1 + (x1 x1)");
    for (const NAPoly &r : F1i.relations)
        CHECK(is_identity(alg_idem2(), r));

    for (const NAPoly &r : free_algebra(alg_idem2(), 2).relations)
        CHECK(is_identity(alg_idem2(), r));
    for (const NAPoly &r : free_algebra(alg_solv3(), 1).relations)
        CHECK(is_identity(alg_solv3(), r));

    // The ground field's free algebra fills its ambient space, but the
    // square of the first generator comes up dependent before that happens,
    // so exactly the idempotent law is caught.
    FreeAlgebraRep F2g = free_algebra(alg_gf2(), 2);
    REQUIRE(F2g.relations.size() == 1);
    CHECK(poly_to_string(F2g.relations[0]) == "x1 + (x1 x1)");
    CHECK(is_identity(alg_gf2(), F2g.relations[0]));

    // Sanity: the idempotent law is not an identity where it should not be.
    CHECK_FALSE(is_identity(alg_nil2(), idempotent_law(Field(2))));
    CHECK(is_identity(alg_idem2(), idempotent_law(Field(2))));
}

TEST_CASE("free algebras over a minimal generator split into copies of it") {
    Field F(2);

    FreeAlgebraRep F1m = free_algebra(alg_minrigid(), 1);
    auto parts = decompose_free_minimal(F1m);
    REQUIRE(parts.size() == 3); // (4^1 - 1) / |Aut| = 3 / 1
    Subspace total = subspace_zero(F1m.ambient.dim);
    for (const Subspace &S : parts) {
        CHECK(S.dim() == 2);
        CHECK(subspace_leq(F, S, F1m.span));
        total = subspace_sum(F, total, S);
    }
    CHECK(total == F1m.span);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            CHECK(subspace_intersect(F, parts[i], parts[j]).dim() == 0);
    // Each summand really carries the generator algebra's product.
    Algebra amb1 = F1m.ambient.materialize();
    for (const Subspace &S : parts)
        CHECK(find_isomorphism(restrict_to_subalgebra(amb1, S), alg_minrigid())
                  .has_value());

    CHECK(decompose_free_minimal(free_algebra(alg_minrigid(), 2)).size() == 15);
    CHECK(decompose_free_minimal(free_algebra(alg_gf2(), 2)).size() == 3);
    CHECK(decompose_free_minimal(free_algebra(alg_gf2(), 3)).size() == 7);

    // Rejected generator algebras: not minimal, or with zero product.
    CHECK_THROWS_AS(decompose_free_minimal(free_algebra(alg_idem2(), 2)), error);
    CHECK_THROWS_AS(decompose_free_minimal(free_algebra(alg_nil2(), 2)), error);
    CHECK_THROWS_AS(decompose_free_minimal(free_algebra(zero_algebra(F, 1), 1)),
                    error);
}

TEST_CASE("variety membership through the graph test") {
    Field F(2);
    Vec e{1, 0}, f{0, 1};

    // Every algebra lies in its own variety (basis tuple generates).
    CHECK(in_variety(alg_minrigid(), {e, f}, alg_minrigid()));
    CHECK(in_variety(alg_idem2(), {e, f}, alg_idem2()));
    CHECK(in_variety(alg_nil2(), {e}, alg_nil2())); // e alone generates

    CHECK_FALSE(in_variety(alg_idem2(), {e, f}, alg_minrigid()));
    CHECK(in_variety(alg_gf2(), {Vec{1}}, alg_idem2()));
    CHECK(in_variety(zero_algebra(F, 1), {Vec{1}}, alg_nil2()));
    CHECK_FALSE(in_variety(alg_gf2(), {Vec{1}}, alg_nil2()));
    CHECK_FALSE(in_variety(alg_nil2(), {e}, alg_gf2()));

    // The nilpotent square-zero quotient of the solvable algebra stays in
    // its variety; the ground field does not enter it.
    CHECK(in_variety(zero_algebra(F, 1), {Vec{1}}, alg_solv3()));
    CHECK_FALSE(in_variety(alg_gf2(), {Vec{1}}, alg_solv3()));

    // The tuple must generate.
    CHECK_THROWS_AS(in_variety(alg_idem2(), {e}, alg_minrigid()), error);
    CHECK_THROWS_AS(in_variety(alg_nil2(), {f}, alg_gf2()), error);

    // Degenerate corners: the zero algebra lies in every variety, and only
    // it lies in the variety of the zero algebra.
    CHECK(in_variety(zero_algebra(F, 0), {}, alg_minrigid()));
    CHECK(in_variety(zero_algebra(F, 0), {}, zero_algebra(F, 0)));
    CHECK_FALSE(in_variety(alg_gf2(), {Vec{1}}, zero_algebra(F, 0)));
}

TEST_CASE("generation behaves like the nilpotent criterion predicts") {
    Field F(2);

    FreeAlgebraRep F2n = free_algebra(alg_nil2(), 2);
    const Vec &g1 = F2n.ambient.generators[0];
    const Vec &g2 = F2n.ambient.generators[1];
    CHECK(malcev_generation_check(F2n, {g1, g2}));
    // Perturbing generators by square elements keeps generation: in a
    // nilpotent variety only the cosets modulo the square matter.
    Subspace sq = free_square(F2n);
    REQUIRE(sq.dim() >= 1);
    Vec g1p = vec_add(F, g1, sq.basis.row(0));
    Vec g2p = vec_add(F, g2, sq.basis.row(sq.dim() - 1));
    CHECK(malcev_generation_check(F2n, {g1p, g2p}));
    CHECK_FALSE(malcev_generation_check(F2n, {g1}));
    CHECK_FALSE(malcev_generation_check(F2n, {}));

    // Converse witness outside nilpotency: the free algebra equals its own
    // square, so the coset criterion degenerates while generation fails.
    FreeAlgebraRep F1m = free_algebra(alg_minrigid(), 1);
    CHECK(free_square(F1m).dim() == F1m.dim());
    CHECK_FALSE(malcev_generation_check(F1m, {}));
    CHECK(malcev_generation_check(F1m, {F1m.ambient.generators[0]}));

    Vec outside(F2n.ambient.dim, 0); // not in the span unless it is, so check
    outside[2] = 1;
    if (!subspace_contains(F, F2n.span, outside))
        CHECK_THROWS_AS(malcev_generation_check(F2n, {outside}), error);
}

TEST_CASE("membership of the one-dimensional algebras") {
    CHECK(variety_contains_one_dim(alg_nil2(), OneDimKind::zero_mult));
    CHECK_FALSE(variety_contains_one_dim(alg_nil2(), OneDimKind::ground_field));

    CHECK_FALSE(variety_contains_one_dim(alg_gf2(), OneDimKind::zero_mult));
    CHECK(variety_contains_one_dim(alg_gf2(), OneDimKind::ground_field));

    CHECK_FALSE(variety_contains_one_dim(alg_idem2(), OneDimKind::zero_mult));
    CHECK(variety_contains_one_dim(alg_idem2(), OneDimKind::ground_field));

    CHECK_FALSE(variety_contains_one_dim(alg_minrigid(), OneDimKind::zero_mult));
    CHECK_FALSE(variety_contains_one_dim(alg_minrigid(), OneDimKind::ground_field));

    CHECK(variety_contains_one_dim(alg_solv3(), OneDimKind::zero_mult));
    CHECK_FALSE(variety_contains_one_dim(alg_solv3(), OneDimKind::ground_field));

    // Consistency with the direct membership test.
    Field F(2);
    CHECK(variety_contains_one_dim(alg_nil2(), OneDimKind::zero_mult) ==
          in_variety(zero_algebra(F, 1), {Vec{1}}, alg_nil2()));
}

TEST_CASE("socle heights of free algebras") {
    CHECK(socle_heights_of_frees(alg_nil2(), 3) ==
          std::vector<std::size_t>{2, 2, 2});
    CHECK(socle_heights_of_frees(alg_gf2(), 4) ==
          std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(socle_heights_of_frees(alg_idem2(), 2) ==
          std::vector<std::size_t>{1, 1});
    CHECK(socle_heights_of_frees(alg_minrigid(), 1) ==
          std::vector<std::size_t>{1});
}

TEST_CASE("growth report: roots, ratios, simple-generator witness") {
    ExponentReport mr = exponent_report(alg_minrigid(), 2);
    CHECK(mr.roots[0] == doctest::Approx(6.0));
    CHECK(mr.roots[1] == doctest::Approx(std::sqrt(30.0)));
    REQUIRE(mr.ratios.size() == 1);
    CHECK(mr.ratios[0] == doctest::Approx(5.0));
    // d(n) stays below |A|^n * dim A = 8, 32; the witness constant is the
    // worst ratio d(n) / (|A|^n dim A).
    CHECK(mr.upper_bound_holds);
    CHECK(mr.witness_c == doctest::Approx(0.75));

    ExponentReport id2 = exponent_report(alg_idem2(), 2);
    CHECK(id2.upper_bound_holds);
    CHECK(id2.witness_c == doctest::Approx(1.0 / 8.0));

    // Non-simple generator: no witness constant is computed.
    ExponentReport n2 = exponent_report(alg_nil2(), 3);
    CHECK(n2.witness_c == 0.0);
    CHECK(n2.ratios[0] == doctest::Approx(2.5));
}

TEST_CASE("rank-2 free algebra of the idempotent generator splits off its "
          "nilpotent-free part") {
    Field F(2);
    FreeAlgebraRep F2 = free_algebra(alg_idem2(), 2);
    Algebra Falg = free_as_algebra(F2);
    REQUIRE(Falg.m == 5);

    auto mins = minimal_ideals(Falg);
    REQUIRE(mins.size() == 4);
    std::vector<std::size_t> dims;
    for (const Subspace &S : mins)
        dims.push_back(S.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 1, 1, 2});

    Subspace P = subspace_zero(5), Q = subspace_zero(5);
    for (const Subspace &S : mins) {
        if (S.dim() == 2)
            P = S;
        else
            Q = subspace_sum(F, Q, S);
    }
    CHECK(P.dim() == 2);
    CHECK(Q.dim() == 3);
    CHECK(is_ideal(Falg, P));
    CHECK(is_ideal(Falg, Q));
    CHECK(subspace_intersect(F, P, Q).dim() == 0);
    CHECK(subspace_sum(F, P, Q).dim() == 5);

    // The two-dimensional part is a copy of the generator algebra; the
    // complement is the rank-2 free algebra over the ground field, and the
    // idempotent law holds on both.
    Algebra Palg = restrict_to_subalgebra(Falg, P);
    Algebra Qalg = restrict_to_subalgebra(Falg, Q);
    CHECK(find_isomorphism(Palg, alg_idem2()).has_value());
    Algebra gf2_free2 = free_as_algebra(free_algebra(alg_gf2(), 2));
    CHECK(find_isomorphism(Qalg, gf2_free2).has_value());
    CHECK(is_identity(Qalg, idempotent_law(F)));
    CHECK(is_identity(Palg, idempotent_law(F)));
}

TEST_CASE("chief factors of free algebras stay within the generator's bound") {
    CHECK(max_chief_factor_dim(alg_idem2()) == 2);
    CHECK(max_chief_factor_dim(alg_minrigid()) == 2);
    CHECK(max_chief_factor_dim(alg_nil2()) == 1);

    for (std::size_t n = 1; n <= 2; ++n) {
        Algebra Fi = free_as_algebra(free_algebra(alg_idem2(), n));
        CHECK(max_chief_factor_dim(Fi) <= 2);
        Algebra Fn = free_as_algebra(free_algebra(alg_nil2(), n));
        CHECK(max_chief_factor_dim(Fn) <= 1);
    }
    Algebra Fm = free_as_algebra(free_algebra(alg_minrigid(), 1));
    CHECK(max_chief_factor_dim(Fm) <= 2);
}
