#pragma once

#include <span>
#include <vector>

#include "discount/model.hpp"

namespace discount {

struct RateSample {
    double t;
    double d;
    double r_local;
    double h_local;
    bool clamped;  ///< d underflowed and was clamped
};

/// Sampled (t, D, r, h) table; t strictly increasing.
struct RateCurve {
    std::vector<RateSample> samples;
};

/// Throws ValidationError unless `grid` is non-empty, finite, non-negative and strictly increasing.
void validate_grid(std::span<const double> grid);

RateCurve sample_curve(const DiscountModel& model, std::span<const double> grid);

/// `points` values from lo to hi inclusive, equally spaced.
std::vector<double> linear_grid(double lo, double hi, int points);

/// `points` values from lo to hi inclusive, equally spaced in log t. Requires lo > 0.
std::vector<double> geometric_grid(double lo, double hi, int points);

}  // namespace discount
