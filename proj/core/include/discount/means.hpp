#pragma once

#include <span>

namespace discount {

/// Weighted harmonic mean (sum_i w_i / x_i)^{-1}.
/// Values must be positive, weights positive and summing to 1 within 1e-12.
double harmonic_mean(std::span<const double> values, std::span<const double> weights);

/// Weighted arithmetic mean sum_i w_i x_i, validated like harmonic_mean.
double arithmetic_mean(std::span<const double> values, std::span<const double> weights);

}  // namespace discount
