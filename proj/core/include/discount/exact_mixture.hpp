#pragma once

/**
 * @file exact_mixture.hpp
 * @brief Hyperbolic mixtures as exact rational functions of t.
 *
 * For weights p_i and rates h_i the mixture discount function is
 *
 *   D(t) = [sum_i p_i prod_{j != i} (1 + h_j t)] / prod_i (1 + h_i t)
 *
 * and the local hyperbolic rate h(t) = (1/D - 1)/t is again rational once
 * the common factor t is cancelled.
 */

#include <span>
#include <vector>

#include "discount/model.hpp"
#include "discount/rational.hpp"
#include "discount/rational_function.hpp"

namespace discount {

struct ExactScenario {
    Rational weight;
    Rational rate;
};

/// All-hyperbolic scenario set over exact rationals.
///
/// Weights must be positive and sum to exactly 1; rates must be positive.
/// Scenarios with equal rates are merged by summing their weights.
class ExactScenarioSet {
public:
    explicit ExactScenarioSet(std::vector<ExactScenario> scenarios);

    /// Exact binary values of a floating set; throws UnsupportedFamilyError
    /// for exponential components and ExactnessError unless the weights
    /// sum to exactly 1.
    static ExactScenarioSet from_float(const ScenarioSet& set);

    std::span<const ExactScenario> scenarios() const { return scenarios_; }
    std::size_t size() const { return scenarios_.size(); }

    /// Nearest floating-point counterpart.
    ScenarioSet to_float() const;

private:
    std::vector<ExactScenario> scenarios_;
};

RationalFunction mixture_to_rational(const ExactScenarioSet& scenarios);
RationalFunction mixture_to_rational(const ScenarioSet& scenarios);

/// Local hyperbolic rate (1/D - 1)/t of an exact discount function with D(0) = 1.
/// Throws PreconditionError otherwise.
RationalFunction h_exact(const RationalFunction& discount);

/// (sum_i p_i / h_i)^{-1} in exact arithmetic.
Rational exact_harmonic_mean(const ExactScenarioSet& scenarios);

}  // namespace discount
