#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "wlbound/bounds.hpp"
#include "wlbound/errors.hpp"
#include "wlbound/rademacher.hpp"
#include "wlbound/rng.hpp"
#include "wlbound/serialize.hpp"

using namespace wlb;

TEST_CASE("upper_bound_colors") {
    CHECK(upper_bound_colors(4, 16) == doctest::Approx(0.5));
    CHECK(upper_bound_colors(1, 1) == 1.0);
    CHECK(upper_bound_colors(7, 7) == doctest::Approx(1.0));
    CHECK_THROWS_AS(upper_bound_colors(5, 4), ValidationError);
    CHECK_THROWS_AS(upper_bound_colors(0, 4), ValidationError);
    CHECK_THROWS_AS(upper_bound_colors(1, 0), ValidationError);
}

TEST_CASE("exact complexity never exceeds the color bound") {
    SplitMix64 rng(41);
    for (int round = 0; round < 200; ++round) {
        const std::size_t m = 1 + rng.next_below(120);
        const auto part = partition_from_multiplicities(wlbtest::random_multiplicities(rng, m));
        const double exact = exact_rademacher(part).value;
        CHECK(exact <= upper_bound_colors(part.p, part.m) + 1e-12);
    }
}

TEST_CASE("general_upper_bound") {
    CHECK(general_upper_bound(2.0, 4, 4) == doctest::Approx(1.0));
    CHECK(general_upper_bound(0.0, 3, 9) == 0.0);
    // with sup_l = sqrt(m) it collapses onto the color bound
    CHECK(general_upper_bound(std::sqrt(16.0), 4, 16) ==
          doctest::Approx(upper_bound_colors(4, 16)));
    CHECK_THROWS_AS(general_upper_bound(-1.0, 2, 4), ValidationError);
}

TEST_CASE("lower_bound_uniform") {
    CHECK(lower_bound_uniform(2, 4) == doctest::Approx(0.5));
    CHECK(lower_bound_uniform(1, 2) == doctest::Approx(0.5));
    CHECK(lower_bound_uniform(8, 8) == doctest::Approx(std::sqrt(0.5)));
    CHECK_THROWS_AS(lower_bound_uniform(3, 4), ValidationError);
}

TEST_CASE("uniform partitions sit between their bounds") {
    SplitMix64 rng(42);
    for (std::size_t m = 1; m <= 60; ++m) {
        for (std::size_t p = 1; p <= m; ++p) {
            if (m % p != 0) continue;
            const std::vector<std::size_t> mults(p, m / p);
            const double exact = exact_rademacher(partition_from_multiplicities(mults)).value;
            CHECK(exact >= lower_bound_uniform(p, m) - 1e-12);
            CHECK(exact <= upper_bound_colors(p, m) + 1e-12);
            if (m / p == 2)  // classes of two signs hit the lower bound exactly
                CHECK(exact == doctest::Approx(lower_bound_uniform(p, m)).epsilon(1e-12));
        }
    }
}

TEST_CASE("dudley_first_term") {
    CHECK(dudley_first_term(1.0, 4, 100) == doctest::Approx(0.08));
    CHECK(dudley_first_term(0.0, 4, 100) == 0.0);
    // compared with the classical 4 alpha / sqrt(m) it gains when p < m
    for (std::size_t m : {4u, 25u, 100u})
        for (std::size_t p = 1; p <= m; ++p)
            CHECK(dudley_first_term(0.5, p, m) <= 4.0 * 0.5 / std::sqrt(m) + 1e-12);
}

TEST_CASE("dudley_bound reduces to the first term without entropy") {
    const std::vector<double> grid{0.5, 1.0, 2.0};
    const auto zero = [](double) { return 0.0; };
    const DudleyResult r = dudley_bound(grid, zero, 4, 16);
    CHECK(r.alpha == 0.5);
    CHECK(r.value == doctest::Approx(dudley_first_term(0.5, 4, 16)));
}

TEST_CASE("dudley_bound validates its inputs") {
    const std::vector<double> grid{1.0};
    CHECK_THROWS_AS(dudley_bound(grid, [](double) { return -1.0; }, 2, 16), ValidationError);
    CHECK_THROWS_AS(dudley_bound({}, [](double) { return 0.0; }, 2, 16), ValidationError);
    const std::vector<double> bad_grid{0.0};
    CHECK_THROWS_AS(dudley_bound(bad_grid, [](double) { return 0.0; }, 2, 16), ValidationError);
}

TEST_CASE("dudley_bound with defaults dominates the exact value") {
    SplitMix64 rng(43);
    for (int round = 0; round < 25; ++round) {
        const std::size_t p = 1 + rng.next_below(12);
        const std::size_t mu = 1 + rng.next_below(16);
        const std::size_t m = p * mu;
        const auto part = partition_from_multiplicities(std::vector<std::size_t>(p, mu));
        const auto grid = default_alpha_grid(m);
        const DudleyResult r = dudley_bound(grid, default_covering_log(p, m), p, m);
        CHECK(r.value >= exact_rademacher(part).value);
        CHECK(r.alpha > 0.0);
    }
}

TEST_CASE("default_alpha_grid spans three decades") {
    const auto grid = default_alpha_grid(16);
    REQUIRE(grid.size() == 32);
    CHECK(grid.front() == doctest::Approx(4e-3));
    CHECK(grid.back() == doctest::Approx(4.0));
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("stability_bound") {
    const SamplePartition a = partition_from_multiplicities({3, 1});
    const SamplePartition b = partition_from_multiplicities({2, 2});
    const MultiplicityDiff diff = multiplicity_diff(a, b);
    CHECK(diff.total_epsilon() == 2);
    CHECK(stability_bound(diff, 4) == doctest::Approx(0.5));

    const double actual = std::abs(exact_rademacher(a).value - exact_rademacher(b).value);
    CHECK(actual == doctest::Approx(0.125));
    CHECK(actual <= stability_bound(diff, 4));

    CHECK(stability_bound(multiplicity_diff(a, a), 4) == 0.0);
}

TEST_CASE("complexity differences respect the multiplicity bound") {
    SplitMix64 rng(44);
    for (int round = 0; round < 200; ++round) {
        const std::size_t m = 1 + rng.next_below(80);
        const auto a = partition_from_multiplicities(wlbtest::random_multiplicities(rng, m));
        const auto b = partition_from_multiplicities(wlbtest::random_multiplicities(rng, m));
        const double diff_bound = stability_bound(multiplicity_diff(a, b), m);
        const double actual =
            std::abs(exact_rademacher(a).value - exact_rademacher(b).value);
        CHECK(actual <= diff_bound + 1e-12);
    }
}

TEST_CASE("generalization_bound") {
    GenBoundInputs inputs{0.2, 1.0, 0.5, 0.05, 100};
    CHECK(generalization_bound(inputs) == doctest::Approx(1.6074).epsilon(1e-4));

    // gamma 0 leaves only risk and slack
    inputs.gamma = 0.0;
    const double slack = 3.0 * std::sqrt(std::log(40.0) / 200.0);
    CHECK(generalization_bound(inputs) == doctest::Approx(0.2 + slack));

    // more data shrinks the slack, higher confidence raises it
    GenBoundInputs more = {0.2, 1.0, 0.5, 0.05, 400};
    CHECK(generalization_bound(more) < generalization_bound({0.2, 1.0, 0.5, 0.05, 100}));
    GenBoundInputs stricter = {0.2, 1.0, 0.5, 0.01, 100};
    CHECK(generalization_bound(stricter) > generalization_bound({0.2, 1.0, 0.5, 0.05, 100}));

    CHECK_THROWS_AS(generalization_bound({-0.1, 1.0, 0.5, 0.05, 100}), ValidationError);
    CHECK_THROWS_AS(generalization_bound({0.2, 1.0, 0.5, 1.5, 100}), ValidationError);
    CHECK_THROWS_AS(generalization_bound({0.2, 1.0, 0.5, 0.05, 0}), ValidationError);
}

TEST_CASE("ce_lipschitz_constant") {
    CHECK(ce_lipschitz_constant(0.0) == 0.5);
    CHECK(ce_lipschitz_constant(1.0) == doctest::Approx(1.0 / (1.0 + std::exp(-1.0))));
    CHECK(ce_lipschitz_constant(1.0) == doctest::Approx(0.7311).epsilon(1e-4));
    double prev = 0.0;
    for (double z = 0.0; z <= 8.0; z += 0.25) {
        const double value = ce_lipschitz_constant(z);
        CHECK(value >= prev);
        CHECK(value < 1.0);
        prev = value;
    }
    CHECK_THROWS_AS(ce_lipschitz_constant(-0.5), ValidationError);
}

TEST_CASE("rescaled_ce_lipschitz") {
    CHECK(rescaled_ce_lipschitz(-1.0, 1.0, 1.0, 0.0) == 2.0);
    CHECK(rescaled_ce_lipschitz(-5.0, 3.0, 1.0, 0.0) == 2.0);  // interval ends don't matter
    CHECK(rescaled_ce_lipschitz(-1.0, 1.0, 2.5, 0.0) == doctest::Approx(5.0));

    double prev = 0.0;
    for (double z = 0.0; z <= 6.0; z += 0.5) {
        const double value = rescaled_ce_lipschitz(-1.0, 1.0, 1.0, z);
        CHECK(value >= prev);
        prev = value;
    }
    CHECK(rescaled_ce_lipschitz(-1.0, 1.0, 1.0, 30.0) > 1e10);

    CHECK_THROWS_AS(rescaled_ce_lipschitz(1.0, 1.0, 1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(rescaled_ce_lipschitz(-1.0, 1.0, 0.0, 0.0), ValidationError);
}

TEST_CASE("loss_lipschitz_constant dispatch") {
    LossSpec logistic;
    logistic.kind = LossSpec::Kind::logistic_ce;
    logistic.b_phi = 1.0;
    logistic.b_beta = 1.0;
    CHECK(loss_lipschitz_constant(logistic) == ce_lipschitz_constant(1.0));

    LossSpec rescaled;
    rescaled.kind = LossSpec::Kind::rescaled_ce;
    CHECK(loss_lipschitz_constant(rescaled) == rescaled_ce_lipschitz(-1.0, 1.0, 1.0, 1.0));

    LossSpec margin;
    margin.kind = LossSpec::Kind::margin_tanh;
    CHECK(loss_lipschitz_constant(margin) == 1.0);
}

TEST_CASE("make_bound_report collects all applicable bounds") {
    const auto part = partition_from_multiplicities({2, 2});
    const BoundReport report = make_bound_report(part);
    CHECK(report.m == 4);
    CHECK(report.p == 2);
    CHECK(report.exact == doctest::Approx(0.5));
    REQUIRE(report.brute_force.has_value());
    CHECK(*report.brute_force == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.upper_colors == doctest::Approx(std::sqrt(0.5)));
    CHECK(report.uniform_multiplicities);
    REQUIRE(report.lower_uniform.has_value());
    CHECK(*report.lower_uniform == doctest::Approx(0.5));
    REQUIRE(report.dudley.has_value());
    CHECK(report.dudley->value >= report.exact);
    CHECK_FALSE(report.general_upper.has_value());
    CHECK_FALSE(report.notes.empty());
}

TEST_CASE("make_bound_report skips inapplicable bounds") {
    const auto part = partition_from_multiplicities({3, 1});
    BoundReportOptions opts;
    opts.sup_l = 40.0;
    const BoundReport report = make_bound_report(part, opts);
    CHECK_FALSE(report.uniform_multiplicities);
    CHECK_FALSE(report.lower_uniform.has_value());
    REQUIRE(report.general_upper.has_value());
    CHECK(*report.general_upper == doctest::Approx(40.0 * std::sqrt(2.0) / 4.0));

    // a sup_l this large turns the bound vacuous and says so
    bool flagged = false;
    for (const std::string& note : report.notes)
        if (note.find("general_upper") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("large samples skip brute force enumeration") {
    const auto part = partition_from_multiplicities({10, 10});
    const BoundReport report = make_bound_report(part);
    CHECK_FALSE(report.brute_force.has_value());
}

TEST_CASE("bound report serialization") {
    const auto part = partition_from_multiplicities({2, 2});
    const BoundReport report = make_bound_report(part);

    const Json doc = to_json(report);
    CHECK(doc["m"] == 4);
    CHECK(doc["p"] == 2);
    CHECK(doc.contains("exact"));
    CHECK(doc.contains("brute_force"));
    CHECK(doc.contains("lower_uniform"));
    CHECK(doc.contains("dudley"));

    const std::string csv = to_csv(report);
    CHECK(csv.rfind("name,value,inputs,note\n", 0) == 0);
    CHECK(csv.find("\nexact,") != std::string::npos);
    CHECK(csv.find("\nupper_colors,") != std::string::npos);
    CHECK(csv.find("\ndudley,") != std::string::npos);
}
