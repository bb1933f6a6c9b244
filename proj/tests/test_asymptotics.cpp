#include "discount/asymptotics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "discount/curve.hpp"
#include "discount/errors.hpp"
#include "discount/exact_mixture.hpp"
#include "discount/means.hpp"
#include "support/instances.hpp"

namespace discount {
namespace {

ScenarioSet example1() {
    return ScenarioSet({{1.0 / 3, Exponential{0.01}}, {1.0 / 3, Exponential{0.02}}, {1.0 / 3, Exponential{0.03}}});
}

ScenarioSet example2() {
    return ScenarioSet({{1.0 / 3, Hyperbolic{0.01}}, {1.0 / 3, Hyperbolic{0.02}}, {1.0 / 3, Hyperbolic{0.03}}});
}

TEST(EstimateLimit, ExampleHyperbolicMixture) {
    const auto s = example2();
    const double target = theorem2_target(s);
    const auto est = estimate_limit(mix(s), RateKind::Hyperbolic, 1e8, target);
    EXPECT_NEAR(est.estimate, 9.0 / 550.0, 1e-6);
    EXPECT_LE(std::abs(est.estimate - 9.0 / 550.0), est.error_bound);
    EXPECT_EQ(est.verdict, Verdict::Consistent);
    EXPECT_FALSE(est.fit.ill_conditioned);
}

TEST(EstimateLimit, ConstantRateHasTinyBound) {
    for (double rate : {1e-3, 0.05, 0.7}) {
        const auto e = estimate_limit(Exponential{rate}, RateKind::Exponential, 1e4);
        EXPECT_NEAR(e.estimate, rate, 1e-12 * rate);
        EXPECT_LT(e.error_bound, 1e-12);
        const auto h = estimate_limit(Hyperbolic{rate}, RateKind::Hyperbolic, 1e8);
        EXPECT_NEAR(h.estimate, rate, 1e-12);
        EXPECT_LT(h.error_bound, 1e-12);
    }
}

TEST(EstimateLimit, ExampleExponentialMixtureApproachesSmallestRate) {
    const auto e = estimate_limit(mix(example1()), RateKind::Exponential, 1e4, weitzman_limit(example1()));
    EXPECT_NEAR(e.estimate, 0.01, 1e-4);
    EXPECT_EQ(e.verdict, Verdict::Consistent);
}

TEST(EstimateLimit, HyperbolicRateOfExponentialDiverges) {
    const auto e = estimate_limit(Exponential{0.05}, RateKind::Hyperbolic, 1e8);
    EXPECT_EQ(e.verdict, Verdict::Diverges);
    EXPECT_TRUE(std::isinf(e.estimate));
    const auto m = estimate_limit(mix(example1()), RateKind::Hyperbolic, 1e4);
    EXPECT_EQ(m.verdict, Verdict::Diverges);
}

TEST(EstimateLimit, WrongTargetIsInconsistent) {
    const auto e = estimate_limit(mix(example2()), RateKind::Hyperbolic, 1e8, 0.02);
    EXPECT_EQ(e.verdict, Verdict::Inconsistent);
    const auto n = estimate_limit(mix(example2()), RateKind::Hyperbolic, 1e8);
    EXPECT_EQ(n.verdict, Verdict::NoTarget);
}

TEST(EstimateLimit, Errors) {
    EXPECT_THROW(estimate_limit(Hyperbolic{0.1}, RateKind::Hyperbolic, 0.0), DomainError);
    EXPECT_THROW(estimate_limit(Hyperbolic{0.1}, RateKind::Hyperbolic, -5.0), DomainError);
    EXPECT_THROW(estimate_limit(Hyperbolic{0.1}, RateKind::Hyperbolic, INFINITY), DomainError);
    LimitConfig tiny;
    tiny.grid_exponent = 2;
    EXPECT_THROW(estimate_limit(Hyperbolic{0.1}, RateKind::Hyperbolic, 1e6, std::nullopt, tiny), ValidationError);
    // r(t) ~ 1/t drops below the normal range near the top of the double range.
    LimitConfig short_grid;
    short_grid.grid_exponent = 4;
    EXPECT_THROW(estimate_limit(Hyperbolic{1.0}, RateKind::Exponential, 1.7e308, std::nullopt, short_grid),
                 InsufficientHorizonError);
}

TEST(Weitzman, Examples) {
    EXPECT_DOUBLE_EQ(weitzman_limit(example1()), 0.01);
    EXPECT_DOUBLE_EQ(weitzman_limit(example2()), 0.0);
    EXPECT_DOUBLE_EQ(weitzman_limit(ScenarioSet({{0.5, Exponential{0.02}}, {0.5, Hyperbolic{0.05}}})), 0.0);
    EXPECT_DOUBLE_EQ(weitzman_limit(ScenarioSet({{1.0, Exponential{0.07}}})), 0.07);
}

TEST(Theorem2Target, Examples) {
    EXPECT_NEAR(theorem2_target(example2()), 9.0 / 550.0, 1e-17);
    EXPECT_NEAR(theorem2_target(ScenarioSet({{0.5, Hyperbolic{0.01}}, {0.5, Hyperbolic{0.03}}})), 0.015, 1e-17);
    EXPECT_THROW(theorem2_target(example1()), UnsupportedFamilyError);
}

TEST(Monotone, SingleExponentialHyperbolicRateIncreases) {
    const auto grid = geometric_grid(1.0, 1e3, 50);
    const auto rep = verify_monotone_numeric(Exponential{0.05}, RateKind::Hyperbolic, grid);
    EXPECT_FALSE(rep.pass);
    ASSERT_TRUE(rep.first_violation.has_value());
    EXPECT_EQ(*rep.first_violation, 0u);
    EXPECT_EQ(rep.t_before, grid[0]);
    EXPECT_GT(rep.value_after, rep.value_before);
}

TEST(Monotone, ExamplesPass) {
    EXPECT_TRUE(verify_monotone_numeric(mix(example2()), RateKind::Hyperbolic, geometric_grid(1.0, 1e6, 256)).pass);
    EXPECT_TRUE(verify_monotone_numeric(mix(example1()), RateKind::Exponential, geometric_grid(1.0, 1e4, 256)).pass);
    // Constant rates stay within the slack.
    EXPECT_TRUE(verify_monotone_numeric(Exponential{0.03}, RateKind::Exponential, linear_grid(0.0, 1e3, 100)).pass);
}

TEST(Monotone, ValueChecks) {
    const std::vector<double> t{1, 2, 3, 4};
    EXPECT_TRUE(verify_monotone_values(t, std::vector<double>{4, 3, 3, 1}).pass);
    const auto rep = verify_monotone_values(t, std::vector<double>{4, 3, 3.5, 1});
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(*rep.first_violation, 1u);
    EXPECT_THROW(verify_monotone_values(std::vector<double>{1, 2}, std::vector<double>{2, 1}), ValidationError);
    EXPECT_THROW(verify_monotone_values(std::vector<double>{1, 1, 2}, std::vector<double>{3, 2, 1}), ValidationError);
    EXPECT_THROW(verify_monotone_values(t, std::vector<double>{3, 2, 1}), ValidationError);
}

TEST(Property, EstimatorErrorBoundCoversExactLimit) {
    std::mt19937_64 rng(7);
    int covered = 0;
    const int trials = 200;
    for (int i = 0; i < trials; ++i) {
        const auto s = testing::random_exact_instance(rng, 2, 6);
        const double exact = exact_harmonic_mean(s).to_double();
        const auto est = estimate_limit(mix(s.to_float()), RateKind::Hyperbolic, 1e8, exact);
        if (std::abs(est.estimate - exact) <= est.error_bound) {
            ++covered;
        } else {
            EXPECT_TRUE(est.fit.ill_conditioned) << "instance " << i;
        }
    }
    EXPECT_GE(covered, trials * 95 / 100);
}

TEST(Property, HyperbolicRateLiesBetweenMeans) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> logt(-3.0, 9.0);
    for (int i = 0; i < 300; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        const auto s = testing::random_hyperbolic_set(rng, n);
        std::vector<double> rates, weights;
        for (const auto& sc : s.scenarios()) {
            rates.push_back(component_rate(sc.model));
            weights.push_back(sc.weight);
        }
        const double hm = harmonic_mean(rates, weights);
        const double am = arithmetic_mean(rates, weights);
        const double t = std::pow(10.0, logt(rng));
        const double h = local_hyp_rate(mix(s), t);
        EXPECT_LE(hm, h * (1 + 1e-12)) << t;
        EXPECT_LE(h, am * (1 + 1e-12)) << t;
    }
}

TEST(Property, HyperbolicMixturesAreDecreasing) {
    std::mt19937_64 rng(9);
    const auto grid = geometric_grid(1e-2, 1e6, 200);
    for (int i = 0; i < 100; ++i) {
        const auto s = testing::random_hyperbolic_set(rng, std::uniform_int_distribution<int>(2, 6)(rng));
        EXPECT_TRUE(verify_monotone_numeric(mix(s), RateKind::Hyperbolic, grid).pass);
    }
}

}  // namespace
}  // namespace discount
