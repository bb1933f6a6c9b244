#pragma once

/**
 * @file asymptotics.hpp
 * @brief Numerical long-horizon limits of local discount rates.
 *
 * Limits are extrapolated from a geometric grid t_k = horizon * 2^-k with the
 * two-parameter model value(t) = L + a/t, which is the leading behaviour of
 * the local hyperbolic rate of a hyperbolic mixture.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "discount/model.hpp"

namespace discount {

enum class RateKind { Exponential, Hyperbolic };

std::string to_string(RateKind kind);

/// local_exp_rate or local_hyp_rate, selected by `kind`.
double local_rate(const DiscountModel& model, RateKind kind, double t);

struct LimitConfig {
    int grid_exponent = 12;     ///< K: grid has K + 1 points
    double tolerance = 1e-6;    ///< absolute slack for verdicts
    double divergence_growth = 0.01;  ///< relative rise over the last octave that signals divergence
};

enum class Verdict { Consistent, Inconsistent, NoTarget, Diverges };

std::string to_string(Verdict v);

struct FitDiagnostics {
    double max_residual = 0.0;  ///< max |value - (L + a/t)| over the fitted points
    double slope = 0.0;         ///< fitted a
    int points_used = 0;        ///< fitted points after trimming
    bool ill_conditioned = false;
    double end_growth = 0.0;    ///< value(horizon) / value(horizon/2) - 1
};

struct LimitEstimate {
    double estimate = 0.0;  ///< +inf when diverging
    double error_bound = 0.0;
    double horizon = 0.0;
    FitDiagnostics fit;
    std::optional<double> target;
    Verdict verdict = Verdict::NoTarget;
};

/// Extrapolate lim_{t->inf} of the chosen local rate.
///
/// The fit starts on the largest-t half of the grid and drops the
/// smallest-t point while the maximum residual exceeds |a|/horizon and
/// more than three points remain. The error bound is the final maximum
/// residual plus |a|/horizon. A non-finite value, a clamped discount
/// factor under the hyperbolic rate, or a rise of more than
/// `divergence_growth` over the last octave yields Verdict::Diverges.
/// Throws DomainError for a nonpositive horizon and
/// InsufficientHorizonError when every grid value underflows.
LimitEstimate estimate_limit(const DiscountModel& model, RateKind kind, double horizon,
                             std::optional<double> target = std::nullopt, const LimitConfig& config = {});

/// min_i lim r_i(t): the rate for exponential components, 0 for hyperbolic ones.
double weitzman_limit(const ScenarioSet& scenarios);

/// Probability-weighted harmonic mean of the hyperbolic rates.
/// Throws UnsupportedFamilyError if any component is exponential.
double theorem2_target(const ScenarioSet& scenarios);

struct MonotoneReport {
    bool pass = true;
    std::optional<std::size_t> first_violation;  ///< index i of the failing pair (i, i+1)
    double t_before = 0.0;
    double t_after = 0.0;
    double value_before = 0.0;
    double value_after = 0.0;
};

inline constexpr double kMonotoneSlack = 1e-13;

/// Checks values[i+1] <= values[i] * (1 + slack) for consecutive samples.
/// Needs at least three strictly increasing times; throws ValidationError otherwise.
MonotoneReport verify_monotone_values(std::span<const double> times, std::span<const double> values);

MonotoneReport verify_monotone_numeric(const DiscountModel& model, RateKind kind, std::span<const double> grid);

}  // namespace discount
