#include <doctest.h>

#include "helpers.hpp"
#include "starorder/errors.hpp"
#include "starorder/harness/generators.hpp"
#include "starorder/penrose.hpp"
#include "starorder/spectral_model.hpp"
#include "starorder/star_order.hpp"

using namespace starorder;
using namespace testutil;

namespace {

SpectralModel atom_band() { return SpectralModel({{1.0, "u", 1}}, {{2.0, 3.0, "v"}}); }

}  // namespace

TEST_CASE("model invariants") {
    CHECK_NOTHROW(atom_band());
    CHECK_THROWS_AS(SpectralModel({{0.0, "u", 1}}, {}), ContractError);
    CHECK_THROWS_AS(SpectralModel({{1.0, "u", 0}}, {}), ContractError);
    CHECK_THROWS_AS(SpectralModel({{1.0, "u", 1}, {1.0, "w", 1}}, {}), ContractError);
    CHECK_THROWS_AS(SpectralModel({{1.0, "u", 1}, {2.0, "u", 1}}, {}), ContractError);
    CHECK_THROWS_AS(SpectralModel({}, {{2.0, 2.0, "v"}}), ContractError);
    CHECK_THROWS_AS(SpectralModel({}, {{0.0, 2.0, "v"}}), ContractError);
    CHECK_THROWS_AS(SpectralModel({}, {{1.0, 3.0, "v"}, {2.0, 4.0, "w"}}), ContractError);
    CHECK_THROWS_AS(SpectralModel({}, {{1.0, 2.0, "v"}, {2.0, 4.0, "w"}}), ContractError);
    CHECK_THROWS_AS(SpectralModel({{2.5, "u", 1}}, {{2.0, 3.0, "v"}}), ContractError);
    CHECK_THROWS_AS(SpectralModel({{3.0, "u", 1}}, {{2.0, 3.0, "v"}}), ContractError);
    CHECK_THROWS_AS(SpectralModel({{1.0, "", 1}}, {}), ContractError);
    // canonical ordering
    const SpectralModel m({{5.0, "b", 1}, {1.0, "a", 2}}, {{7.0, 8.0, "d"}, {2.0, 3.0, "c"}});
    CHECK(m.atoms()[0].label == "a");
    CHECK(m.bands()[0].label == "c");
    CHECK(m == SpectralModel({{1.0, "a", 2}, {5.0, "b", 1}}, {{2.0, 3.0, "c"}, {7.0, 8.0, "d"}}));
}

TEST_CASE("model_type_split examples") {
    const TypeSplit s = model_type_split(atom_band());
    CHECK(s.type1 == SpectralModel({{1.0, "u", 1}}, {}));
    CHECK(s.type2 == SpectralModel({}, {{2.0, 3.0, "v"}}));

    const SpectralModel atoms({{1.0, "u", 1}, {4.0, "w", 2}}, {});
    CHECK(model_type_split(atoms).type1 == atoms);
    CHECK(model_type_split(atoms).type2.empty());

    const TypeSplit e = model_type_split(SpectralModel{});
    CHECK(e.type1.empty());
    CHECK(e.type2.empty());
}

TEST_CASE("model_merge") {
    const SpectralModel m1({{1.0, "u", 1}}, {});
    const SpectralModel m2({}, {{2.0, 3.0, "v"}});
    CHECK(model_merge(m1, m2) == atom_band());
    CHECK(model_merge(SpectralModel{}, atom_band()) == atom_band());
    CHECK_THROWS_AS(model_merge(m1, SpectralModel({{5.0, "u", 1}}, {})), ContractError);
    CHECK_THROWS_AS(model_merge(SpectralModel({{2.5, "x", 1}}, {}), m2), ContractError);
    CHECK_THROWS_AS(model_merge(m1, SpectralModel({{1.0, "y", 1}}, {})), ContractError);

    harness::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const SpectralModel m = harness::gen_model(rng);
        const TypeSplit s = model_type_split(m);
        CHECK(model_merge(s.type1, s.type2) == m);
        const TypeSplit again = model_type_split(model_merge(s.type1, s.type2));
        CHECK(again.type1 == s.type1);
        CHECK(again.type2 == s.type2);
    }
}

TEST_CASE("model_star_leq examples") {
    CHECK(model_star_leq(SpectralModel({{2.0, "u", 1}}, {}), SpectralModel({{2.0, "u", 1}, {3.0, "w", 1}}, {})));
    CHECK_FALSE(model_star_leq(SpectralModel({{2.0, "u", 1}}, {}), SpectralModel({{2.0, "w", 1}}, {})));
    CHECK_FALSE(model_star_leq(SpectralModel({}, {{1.0, 2.0, "v"}}), SpectralModel({}, {{1.0, 3.0, "v"}})));
    CHECK(model_star_leq(SpectralModel({{2.0, "u", 1}}, {}), SpectralModel({{2.0, "u", 3}}, {})));
    CHECK_FALSE(model_star_leq(SpectralModel({{2.0, "u", 3}}, {}), SpectralModel({{2.0, "u", 1}}, {})));
    CHECK(model_star_leq(SpectralModel{}, atom_band()));
    CHECK(model_star_leq(atom_band(), atom_band()));
}

TEST_CASE("band_cell_values") {
    const Band b{1.0, 2.0, "v"};
    CHECK(band_cell_values(b, {1.0, 1.5, 2.0}) == std::vector<double>{1.5, 2.0});
    CHECK(band_cell_values(b, {0.0, 1.0, 2.0, 3.0}) == std::vector<double>{2.0});
    CHECK_THROWS_AS(band_cell_values(b, {1.0, 1.5}), ContractError);
    CHECK_THROWS_AS(band_cell_values(b, {1.2, 2.0}), ContractError);
    CHECK_THROWS_AS(band_cell_values(b, {1.0, 1.0, 2.0}), ContractError);
    CHECK_THROWS_AS(band_cell_values(b, {}), ContractError);
}

TEST_CASE("discretize examples") {
    SUBCASE("band, three-point partition, dim 1") {
        const Discretization d = discretize(SpectralModel({}, {{1.0, 2.0, "v"}}), {1.0, 1.5, 2.0}, 1);
        const auto& terms = d.decomposition.terms;
        REQUIRE(terms.size() == 2);
        CHECK(terms[0].value == 1.5);
        CHECK(terms[1].value == 2.0);
        CHECK(rank(terms[0].isometry) == 1);
        CHECK(orthogonal(terms[0].isometry, terms[1].isometry));
        CHECK(d.adjustments.empty());
        CHECK_NOTHROW(validate(d.decomposition));
    }
    SUBCASE("pure atom") {
        const Discretization d = discretize(SpectralModel({{2.0, "u", 1}}, {}), {1.0}, 1);
        REQUIRE(d.decomposition.terms.size() == 1);
        CHECK(d.decomposition.dim == 1);
        CHECK(d.decomposition.terms[0].value == 2.0);
        CHECK(dist(d.decomposition.terms[0].isometry, diag({1.0})) == 0.0);
    }
    SUBCASE("one cell with dim 3") {
        const Discretization d = discretize(SpectralModel({}, {{1.0, 2.0, "v"}}), {1.0, 2.0}, 3);
        REQUIRE(d.decomposition.terms.size() == 1);
        CHECK(d.decomposition.terms[0].value == 2.0);
        CHECK(rank(d.decomposition.terms[0].isometry) == 3);
        CHECK(is_partial_isometry(d.decomposition.terms[0].isometry));
    }
    SUBCASE("uncovered band") {
        CHECK_THROWS_AS(discretize(SpectralModel({}, {{1.0, 2.0, "v"}}), {1.0, 1.5}, 1), ContractError);
        CHECK_THROWS_AS(discretize(SpectralModel({}, {{1.0, 2.0, "v"}}), {1.0, 2.0}, 0), ContractError);
    }
    SUBCASE("near-equal values are pushed apart and recorded") {
        // band cell value 2 and an atom just above it
        const SpectralModel m({{2.0 + 1e-12, "u", 1}}, {{1.0, 2.0, "v"}});
        const Discretization d = discretize(m, {1.0, 2.0}, 1);
        REQUIRE(d.adjustments.size() == 1);
        CHECK(d.adjustments[0].original == 2.0 + 1e-12);
        CHECK(d.adjustments[0].adjusted > 2.0 + 1e-8 * (2.0 + 1e-12) * 0.99);
        CHECK_NOTHROW(validate(d.decomposition));
    }
    SUBCASE("atoms use their multiplicity") {
        const Discretization d = discretize(SpectralModel({{2.0, "u", 3}}, {{4.0, 5.0, "v"}}), {4.0, 5.0}, 2);
        CHECK(d.decomposition.dim == 5);
        CHECK(rank(d.decomposition.terms[0].isometry) == 3);
        CHECK(rank(d.decomposition.terms[1].isometry) == 2);
    }
}

TEST_CASE("discretization density: halving the mesh halves the Hausdorff distance") {
    const Band b{1.0, 2.0, "v"};
    double prev = 0.0;
    for (int level = 0; level <= 8; ++level) {
        const int cells = 1 << level;
        std::vector<double> part;
        for (int k = 0; k <= cells; ++k) part.push_back(1.0 + static_cast<double>(k) / cells);
        std::vector<double> values;
        for (const auto& t : discretize(SpectralModel({}, {b}), part, 1).decomposition.terms) {
            values.push_back(t.value);
        }
        const double h = band_hausdorff(b, values);
        CHECK(h == 1.0 / cells);
        if (level > 0) CHECK(h == prev / 2.0);
        prev = h;
    }
}

TEST_CASE("band_hausdorff by brute force") {
    harness::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Band b{1.0, 1.0 + rng.uniform(0.5, 3.0), "v"};
        std::vector<double> pts;
        const int k = rng.integer(1, 6);
        for (int i = 0; i < k; ++i) pts.push_back(rng.uniform(b.lo, b.hi));
        double brute = 0.0;
        for (int s = 0; s <= 20000; ++s) {
            const double x = b.lo + (b.hi - b.lo) * s / 20000.0;
            double d = INFINITY;
            for (double p : pts) d = std::min(d, std::abs(x - p));
            brute = std::max(brute, d);
        }
        CHECK(band_hausdorff(b, pts) == doctest::Approx(brute).epsilon(1e-3));
    }
    CHECK(band_hausdorff({1.0, 2.0, "v"}, {}) == INFINITY);
}

TEST_CASE("order consistency with shared layouts") {
    harness::Rng rng(37);
    std::vector<double> part;
    for (int k = 0; k <= 64; ++k) part.push_back(k / 4.0);
    for (int trial = 0; trial < 100; ++trial) {
        const SpectralModel mb = harness::gen_model(rng);
        const SpectralModel ma = harness::gen_sub_model(rng, mb);
        REQUIRE(model_star_leq(ma, mb));
        const CoordinateLayout layout = joint_layout({&ma, &mb}, part, 1);
        CHECK(pd_star_leq(discretize(ma, part, 1, layout).decomposition,
                          discretize(mb, part, 1, layout).decomposition));
    }
    // without a shared layout the label is missing
    const SpectralModel m({{2.0, "u", 1}}, {});
    CoordinateLayout empty;
    empty.dim = 1;
    CHECK_THROWS_AS(discretize(m, {1.0}, 1, empty), ContractError);
}
