#include <doctest.h>

#include "helpers.hpp"
#include "starorder/errors.hpp"
#include "starorder/harness/generators.hpp"
#include "starorder/star_order.hpp"

using namespace starorder;
using namespace testutil;

TEST_CASE("star_leq examples") {
    const ComplexMatrix a = rows({{1.0, Complex(0.0, 2.0)}, {3.0, 4.0}});
    CHECK(star_leq(a, a));
    CHECK(star_leq(ComplexMatrix::Zero(2, 2), a));
    CHECK(star_leq(diag({1.0, 0.0}), diag({1.0, 2.0})));
    CHECK_FALSE(star_leq(diag({1.0, 0.0}), diag({2.0, 2.0})));
    CHECK_THROWS_AS(star_leq(diag({1.0}), diag({1.0, 2.0})), ShapeError);
}

TEST_CASE("star_leq agrees with the direct Drazin evaluation") {
    harness::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Eigen::Index n = rng.integer(1, 6);
        auto [a, b] = harness::gen_comparable_pair(rng, n);
        if (rng.coin()) b = harness::gen_matrix(rng, n);
        CHECK(star_leq(a, b) == drazin_oracle(a, b));
    }
}

TEST_CASE("drazin_residual") {
    CHECK(drazin_residual(diag({1.0, 0.0}), diag({1.0, 2.0})) == doctest::Approx(0.0));
    CHECK(drazin_residual(diag({1.0, 0.0}), diag({2.0, 2.0})) > 0.1);
}

TEST_CASE("orthogonal examples") {
    CHECK(orthogonal(unit(2, 1, 1), unit(2, 2, 2)));
    const ComplexMatrix a = rows({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(orthogonal(a, ComplexMatrix::Zero(2, 2)));
    CHECK_FALSE(orthogonal(diag({1.0, 0.0}), diag({2.0, 0.0})));
    // one-sided orthogonality is not enough: E11 and E12 have E11* E12 = E12 != 0
    CHECK_FALSE(orthogonal(unit(2, 1, 1), unit(2, 1, 2)));
    CHECK_FALSE(orthogonal(unit(2, 1, 1), unit(2, 2, 1)));
    CHECK_THROWS_AS(orthogonal(diag({1.0}), diag({1.0, 2.0})), ShapeError);
}

TEST_CASE("block_witness examples") {
    SUBCASE("diagonal ranges") {
        const auto w = block_witness(diag({1.0, 0.0}), diag({1.0, 2.0}));
        REQUIRE(w);
        CHECK(dist(w->p_h1, diag({1.0, 0.0})) < 1e-12);
        CHECK(dist(w->p_k1, diag({1.0, 0.0})) < 1e-12);
        CHECK(dist(w->p_h2, diag({0.0, 1.0})) < 1e-12);
        CHECK(dist(w->p_k2, diag({0.0, 1.0})) < 1e-12);
    }
    SUBCASE("(A, A)") {
        const ComplexMatrix a = rows({{1.0, 1.0, 0.0}, {1.0, 1.0, 0.0}, {0.0, 0.0, 0.0}});
        const auto w = block_witness(a, a);
        REQUIRE(w);
        const ComplexMatrix q = range_basis(a.adjoint());
        CHECK(dist(w->p_h1, q * q.adjoint()) < 1e-12);
        CHECK(dist(w->p_h1 + w->p_h2, ComplexMatrix::Identity(3, 3)) < 1e-12);
        CHECK(dist(w->p_k1 + w->p_k2, ComplexMatrix::Identity(3, 3)) < 1e-12);
    }
    SUBCASE("order fails") { CHECK_FALSE(block_witness(diag({1.0, 0.0}), diag({2.0, 2.0}))); }
}

TEST_CASE("witness_holds rejects broken witnesses") {
    const auto w = block_witness(diag({1.0, 0.0}), diag({1.0, 2.0}));
    REQUIRE(w);
    BlockWitness broken = *w;
    broken.p_h2 = diag({0.0, 0.5});
    CHECK_FALSE(witness_holds(broken, diag({1.0, 0.0}), diag({1.0, 2.0})));
    broken = *w;
    broken.p_h1 = ComplexMatrix::Identity(2, 2);
    CHECK_FALSE(witness_holds(broken, diag({1.0, 0.0}), diag({1.0, 2.0})));
    // a valid decomposition under which B's off-diagonal block does not vanish
    CHECK_FALSE(witness_holds(*w, diag({1.0, 0.0}), rows({{1.0, 1.0}, {0.0, 2.0}})));
}

TEST_CASE("try_join examples") {
    SUBCASE("orthogonal pieces") {
        const auto d = try_join(diag({1.0, 0.0, 0.0}), diag({0.0, 2.0, 0.0}));
        REQUIRE(d);
        CHECK(dist(*d, diag({1.0, 2.0, 0.0})) < 1e-12);
    }
    SUBCASE("conflicting values on a shared direction") {
        CHECK_FALSE(try_join(diag({1.0, 0.0}), diag({2.0, 0.0})));
    }
    SUBCASE("idempotence") {
        const ComplexMatrix a = rows({{1.0, 2.0}, {0.0, Complex(0.0, 1.0)}});
        const auto d = try_join(a, a);
        REQUIRE(d);
        CHECK(dist(*d, a) < 1e-12);
    }
    SUBCASE("comparable pair joins to the larger") {
        const auto d = try_join(diag({1.0, 0.0}), diag({1.0, 2.0}));
        REQUIRE(d);
        CHECK(dist(*d, diag({1.0, 2.0})) < 1e-12);
    }
    SUBCASE("zero is neutral") {
        const ComplexMatrix b = rows({{0.0, 2.0}, {3.0, 0.0}});
        const auto d = try_join(ComplexMatrix::Zero(2, 2), b);
        REQUIRE(d);
        CHECK(dist(*d, b) < 1e-12);
    }
    SUBCASE("ambiguous principal angle is a numeric failure") {
        // row spaces span{e1} and span{e1 + t e2} with 1 - cos(angle) ~ t^2 / 2 = group_tol
        const double t = std::sqrt(2e-8);
        ComplexMatrix b = ComplexMatrix::Zero(2, 2);
        b(0, 0) = 1.0;
        b(0, 1) = t;
        CHECK_THROWS_AS(try_join(diag({1.0, 0.0}), b), NumericFailure);
    }
}

TEST_CASE("try_join results are upper bounds below constructed bounds") {
    harness::Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = rng.integer(1, 6);
        const harness::Triple tr = harness::gen_nested_triple(rng, n);
        const auto d = try_join(tr.a, tr.b);
        REQUIRE(d);
        CHECK(star_leq(tr.a, *d));
        CHECK(star_leq(tr.b, *d));
        CHECK(star_leq(*d, tr.c));
    }
}

TEST_CASE("supremum_with_bound") {
    SUBCASE("diagonal example") {
        const ComplexMatrix b = diag({1.0, 2.0, 3.0});
        const std::vector<ComplexMatrix> s{diag({1.0, 0.0, 0.0}), diag({0.0, 0.0, 3.0})};
        const ComplexMatrix d = supremum_with_bound(s, b);
        CHECK(dist(d, diag({1.0, 0.0, 3.0})) < 1e-12);
        for (const auto& a : s) CHECK(drazin_oracle(a, d));
        CHECK(drazin_oracle(d, b));
    }
    SUBCASE("singleton and empty family") {
        const ComplexMatrix b = rows({{1.0, 2.0}, {3.0, 4.0}});
        CHECK(dist(supremum_with_bound({b}, b), b) < 1e-12);
        CHECK(supremum_with_bound({}, b).norm() == 0.0);
    }
    SUBCASE("precondition names the offending member") {
        const ComplexMatrix b = diag({1.0, 2.0});
        try {
            supremum_with_bound({diag({1.0, 0.0}), diag({3.0, 0.0})}, b);
            FAIL("expected ContractError");
        } catch (const ContractError& e) {
            CHECK(std::string(e.what()).find("member 1") != std::string::npos);
        }
    }
}

TEST_CASE("poset axioms on constructed inputs") {
    harness::Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const Eigen::Index n = rng.integer(1, 8);
        const harness::Triple tr = harness::gen_nested_triple(rng, n);
        CHECK(star_leq(tr.a, tr.a));
        CHECK(star_leq(tr.a, tr.b));
        CHECK(star_leq(tr.b, tr.c));
        CHECK(star_leq(tr.a, tr.c));
        if (star_leq(tr.b, tr.a)) CHECK(approx_eq(tr.a, tr.b));
    }
}

TEST_CASE("A <=* A + B iff A _|_ B") {
    harness::Rng rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const Eigen::Index n = rng.integer(1, 6);
        auto [a, b] = harness::gen_orthogonal_pair(rng, n);
        if (trial % 2) b += harness::gen_matrix(rng, n, 0.1);
        CHECK(star_leq(a, a + b) == orthogonal(a, b));
    }
}
