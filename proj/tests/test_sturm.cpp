#include "discount/sturm.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "discount/errors.hpp"

namespace discount {
namespace {

Polynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

const Bound kZero = Bound::at(0);
const Bound kInf = Bound::plus_infinity();

TEST(Sturm, TextbookCounts) {
    EXPECT_EQ(sturm_root_count(poly({-1, 0, 1}), kZero, kInf), 1);
    EXPECT_EQ(sturm_root_count(poly({1, 0, 1}), kZero, kInf), 0);
    EXPECT_EQ(sturm_root_count(poly({-1, 0, 1}), Bound::minus_infinity(), kInf), 2);
    EXPECT_EQ(sturm_root_count(poly({5}), kZero, kInf), 0);
}

TEST(Sturm, OpenEndpointsExcludeRoots) {
    // t (t - 1) (t - 2)
    const auto p = poly({0, 1}) * poly({-1, 1}) * poly({-2, 1});
    EXPECT_EQ(sturm_root_count(p, kZero, kInf), 2);
    EXPECT_EQ(sturm_root_count(p, kZero, Bound::at(2)), 1);
    EXPECT_EQ(sturm_root_count(p, kZero, Bound::at(Rational(5, 2))), 2);
    EXPECT_EQ(sturm_root_count(p, Bound::at(1), Bound::at(2)), 0);
}

TEST(Sturm, RepeatedRootsCountOnce) {
    const auto p = poly({-1, 1}) * poly({-1, 1}) * poly({-1, 1}) * poly({3, 1});
    EXPECT_EQ(sturm_root_count(p, kZero, kInf), 1);
    EXPECT_EQ(sturm_root_count(p, Bound::minus_infinity(), kInf), 2);
}

TEST(Sturm, Errors) {
    EXPECT_THROW(sturm_root_count(Polynomial(), kZero, kInf), DomainError);
    EXPECT_THROW(sturm_root_count(poly({1, 1}), kInf, kZero), ValidationError);
    EXPECT_THROW(sturm_root_count(poly({1, 1}), Bound::at(2), Bound::at(2)), ValidationError);
}

TEST(Sturm, PlantedRationalRoots) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 7);
    std::uniform_int_distribution<int> degree(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const int deg = degree(rng);
        Polynomial p = Polynomial::constant(Rational(std::uniform_int_distribution<long>(1, 5)(rng)));
        std::set<Rational> positive;
        int placed = 0;
        // Planted linear factors, optionally with an irreducible quadratic.
        if (deg >= 2 && trial % 3 == 0) {
            p *= poly({1 + std::abs(num(rng)), 0, 1});
            placed += 2;
        }
        while (placed < deg) {
            const Rational root(num(rng), den(rng));
            p *= Polynomial::linear(-root, 1);
            if (root.sign() > 0) positive.insert(root);
            ++placed;
        }
        ASSERT_EQ(sturm_root_count(p, kZero, kInf), static_cast<int>(positive.size())) << p.str();
    }
}

}  // namespace
}  // namespace discount
