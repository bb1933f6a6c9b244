#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "discount/certify.hpp"
#include "discount/curve.hpp"
#include "discount/errors.hpp"
#include "discount/exact_mixture.hpp"
#include "discount/sturm.hpp"
#include "support/instances.hpp"

namespace discount {
namespace {

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

ExactScenarioSet example2() {
    return ExactScenarioSet({{Rational(1, 3), Rational(1, 100)},
                             {Rational(1, 3), Rational(1, 50)},
                             {Rational(1, 3), Rational(3, 100)}});
}

// h(t) straight from the definition, in exact arithmetic.
Rational oracle_h(const ExactScenarioSet& s, const Rational& t) {
    Rational d;
    for (const auto& sc : s.scenarios()) d += sc.weight / (Rational(1) + sc.rate * t);
    return (Rational(1) / d - Rational(1)) / t;
}

TEST(MixtureToRational, SingleComponent) {
    const auto f = mixture_to_rational(ExactScenarioSet({{Rational(1), Rational(1, 40)}}));
    EXPECT_EQ(f.num(), poly({1}));
    EXPECT_EQ(f.den(), poly({1, Rational(1, 40)}));
}

TEST(MixtureToRational, TwoComponentsByHand) {
    const auto f = mixture_to_rational(
        ExactScenarioSet({{Rational(1, 2), Rational(1, 100)}, {Rational(1, 2), Rational(1, 50)}}));
    EXPECT_EQ(f.num(), poly({1, Rational(3, 200)}));
    EXPECT_EQ(f.den(), poly({1, Rational(3, 100), Rational(1, 5000)}));
}

TEST(MixtureToRational, ExampleShape) {
    const auto f = mixture_to_rational(example2());
    EXPECT_EQ(f.num().degree(), 2);
    EXPECT_EQ(f.den().degree(), 3);
    EXPECT_EQ(f.num().coeff(0), Rational(1));
    EXPECT_EQ(f.den().coeff(0), Rational(1));
}

TEST(MixtureToRational, Errors) {
    EXPECT_THROW(mixture_to_rational(ScenarioSet({{0.5, Hyperbolic{0.01}}, {0.5, Exponential{0.02}}})),
                 UnsupportedFamilyError);
    EXPECT_THROW(
        mixture_to_rational(ScenarioSet({{1.0 / 3, Hyperbolic{0.01}}, {1.0 / 3, Hyperbolic{0.02}}, {1.0 / 3, Hyperbolic{0.03}}})),
        ExactnessError);
    EXPECT_NO_THROW(mixture_to_rational(ScenarioSet({{0.5, Hyperbolic{0.01}}, {0.5, Hyperbolic{0.02}}})));
    EXPECT_THROW(ExactScenarioSet({{Rational(1, 2), Rational(1, 10)}, {Rational(1, 3), Rational(1, 5)}}),
                 ExactnessError);
    EXPECT_THROW(ExactScenarioSet({{Rational(1), Rational(0)}}), ValidationError);
}

TEST(MixtureToRational, MergesEqualRates) {
    const ExactScenarioSet s({{Rational(1, 4), Rational(1, 10)}, {Rational(1, 2), Rational(1, 5)}, {Rational(1, 4), Rational(1, 10)}});
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.scenarios()[0].weight, Rational(1, 2));
    EXPECT_EQ(mixture_to_rational(s).den().degree(), 2);
}

TEST(HExact, InvertsSingleHyperbolic) {
    const auto h = h_exact(mixture_to_rational(ExactScenarioSet({{Rational(1), Rational(7, 9)}})));
    EXPECT_EQ(h.num(), poly({Rational(7, 9)}));
    EXPECT_EQ(h.den(), poly({1}));
}

TEST(HExact, TwoScenarioClosedForm) {
    const Rational p1(1, 2), p2(1, 2), h1(3, 100), h2(1, 100);
    const auto h = h_exact(mixture_to_rational(ExactScenarioSet({{p1, h1}, {p2, h2}})));
    const RationalFunction expected(poly({p1 * h1 + p2 * h2, h1 * h2}), poly({1, p1 * h2 + p2 * h1}));
    EXPECT_EQ(h, expected);
}

TEST(HExact, ExampleAtZeroIsArithmeticMean) {
    const auto h = h_exact(mixture_to_rational(example2()));
    EXPECT_EQ(h(Rational(0)), Rational(1, 50));
    EXPECT_DOUBLE_EQ(local_hyp_rate(mix(example2().to_float()), 0.0), 0.02);
}

TEST(HExact, RequiresUnitValueAtZero) {
    EXPECT_THROW(h_exact(RationalFunction(poly({2}), poly({1, 1}))), PreconditionError);
    EXPECT_THROW(h_exact(RationalFunction(poly({1}), poly({0, 1}))), PreconditionError);
}

TEST(ExactEngine, AgreesWithFloatingEvaluation) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> tdist(0.0, 1e6);
    for (int k = 0; k < 20; ++k) {
        const auto exact = testing::random_exact_instance(rng);
        const auto model = mix(exact.to_float());
        const auto d = mixture_to_rational(exact);
        const auto h = h_exact(d);
        for (int i = 0; i < 100; ++i) {
            const double t = tdist(rng);
            const double df = eval_discount(model, t);
            EXPECT_NEAR(d.evaluate(t), df, 1e-10 * df);
            if (t > 0.0) {
                const double hf = local_hyp_rate(model, t);
                EXPECT_NEAR(h.evaluate(t), hf, 1e-10 * hf);
            }
        }
    }
}

TEST(ExactEngine, IncrementalMixingMatchesFlat) {
    // D = (1 - p_{k+1}) D^(k) + p_{k+1} D_{k+1}, built one component at a time.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = testing::random_exact_instance(rng, 2, 6);
        const auto items = s.scenarios();
        RationalFunction acc = mixture_to_rational(ExactScenarioSet({{Rational(1), items[0].rate}}));
        Rational mass = items[0].weight;
        for (std::size_t k = 1; k < items.size(); ++k) {
            const Rational next_mass = mass + items[k].weight;
            const auto single = mixture_to_rational(ExactScenarioSet({{Rational(1), items[k].rate}}));
            acc = acc * (mass / next_mass) + single * (items[k].weight / next_mass);
            mass = next_mass;
        }
        EXPECT_EQ(acc, mixture_to_rational(s));
    }
}

TEST(ExactEngine, TwoScenarioDerivativeNumeratorIsConstant) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = testing::random_exact_instance(rng, 2, 2);
        const auto& a = s.scenarios()[0];
        const auto& b = s.scenarios()[1];
        const auto dh = differentiate(h_exact(mixture_to_rational(s)));
        const Rational gap = a.rate - b.rate;
        ASSERT_EQ(dh.num().degree(), 0);
        EXPECT_EQ(dh.num().coeff(0), -(a.weight * b.weight * gap * gap));
        const Polynomial base = Polynomial::linear(1, a.weight * b.rate + b.weight * a.rate);
        EXPECT_EQ(dh.den(), base * base);
    }
}

TEST(Certify, TextbookNegative) {
    const RationalFunction f(Polynomial::constant(-1), Polynomial::linear(1, 1) * Polynomial::linear(1, 1));
    const auto c = certify_negative(f);
    EXPECT_TRUE(c.valid);
    EXPECT_EQ(c.claim, SignClaim::StrictlyNegative);
    EXPECT_EQ(c.numerator_roots, 0);
    EXPECT_EQ(c.sample_sign, -1);
}

TEST(Certify, FalsifiedClaimIsReportedNotThrown) {
    const RationalFunction pos(Polynomial::constant(1), Polynomial::linear(1, 1));
    const auto c = certify_negative(pos);
    EXPECT_FALSE(c.valid);
    EXPECT_FALSE(c.reason.empty());
    EXPECT_TRUE(certify_positive(pos).valid);
    // Sign change at t = 2.
    const RationalFunction crossing(Polynomial::linear(-2, 1), Polynomial::linear(1, 1));
    const auto cc = certify_negative(crossing);
    EXPECT_FALSE(cc.valid);
    EXPECT_EQ(cc.numerator_roots, 1);
}

TEST(Certify, PoleOnHalfLineThrows) {
    EXPECT_THROW(certify_negative(RationalFunction(Polynomial::constant(-1), Polynomial::linear(-3, 1))), PoleError);
    EXPECT_THROW(certify_negative(RationalFunction(Polynomial::constant(-1), Polynomial::linear(0, 1))), PoleError);
}

TEST(Certify, ExampleInstance) {
    const auto c = certify_theorem1(example2());
    EXPECT_TRUE(c.valid) << c.summary();
    EXPECT_EQ(c.claim, SignClaim::StrictlyNegative);

    // Dense-sampling oracle for the numerator of h'.
    const auto dh = differentiate(h_exact(mixture_to_rational(example2())));
    EXPECT_EQ(sturm_root_count(dh.num(), Bound::at(0), Bound::plus_infinity()), 0);
    for (double t : geometric_grid(1e-4, 1e9, 2000)) EXPECT_LT(dh.evaluate(t), 0.0) << t;
}

TEST(Certify, EqualRatesGiveIdenticallyZero) {
    const ExactScenarioSet s({{Rational(1, 3), Rational(1, 20)}, {Rational(2, 3), Rational(1, 20)}});
    const auto c = certify_theorem1(s);
    EXPECT_TRUE(c.valid);
    EXPECT_EQ(c.claim, SignClaim::IdenticallyZero);
}

TEST(Certify, RandomFourScenarioInstancesAgreeWithSampledOracle) {
    std::mt19937_64 rng(404);
    const auto grid = geometric_grid(1e-3, 1e9, 60);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = testing::random_exact_instance(rng, 4, 4);
        Rational prev = oracle_h(s, Rational::from_double(grid[0]));
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const Rational cur = oracle_h(s, Rational::from_double(grid[i]));
            ASSERT_LT(cur, prev);
            prev = cur;
        }
        EXPECT_TRUE(certify_theorem1(s).valid);
    }
}

TEST(Theorem2, ExactLimitIsHarmonicMean) {
    const auto lim = exact_limit(h_exact(mixture_to_rational(example2())));
    ASSERT_TRUE(lim.finite);
    EXPECT_EQ(lim.value, Rational(9, 550));
    EXPECT_TRUE(exact_limit(mixture_to_rational(ExactScenarioSet({{Rational(1), Rational(1, 7)}}))).value.is_zero());
    EXPECT_EQ(exact_limit(h_exact(mixture_to_rational(ExactScenarioSet({{Rational(1), Rational(1, 7)}})))).value,
              Rational(1, 7));

    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = testing::random_exact_instance(rng);
        Rational inv;
        for (const auto& sc : s.scenarios()) inv += sc.weight / sc.rate;
        const auto l = exact_limit(h_exact(mixture_to_rational(s)));
        ASSERT_TRUE(l.finite);
        EXPECT_EQ(l.value, Rational(1) / inv);
        EXPECT_EQ(exact_harmonic_mean(s), Rational(1) / inv);
    }
}

}  // namespace
}  // namespace discount
