#include "discount/curve.hpp"

#include <cmath>
#include <sstream>

#include "discount/errors.hpp"

namespace discount {

void validate_grid(std::span<const double> grid) {
    if (grid.empty()) throw ValidationError("grid must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) {
            std::ostringstream os;
            os << "grid point " << i << " must be finite and non-negative, got " << grid[i];
            throw ValidationError(os.str());
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            std::ostringstream os;
            os << "grid must be strictly increasing (point " << i << ")";
            throw ValidationError(os.str());
        }
    }
}

RateCurve sample_curve(const DiscountModel& model, std::span<const double> grid) {
    validate_grid(grid);
    RateCurve curve;
    curve.samples.reserve(grid.size());
    for (double t : grid) {
        const auto d = eval_discount_checked(model, t);
        curve.samples.push_back({t, d.value, local_exp_rate(model, t), local_hyp_rate(model, t), d.clamped});
    }
    return curve;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 1) throw ValidationError("grid needs at least one point");
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) throw ValidationError("grid bounds must be finite and ordered");
    if (points == 1) return {lo};
    std::vector<double> out(static_cast<std::size_t>(points));
    const double step = (hi - lo) / (points - 1);
    for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = lo + step * k;
    out.back() = hi;
    return out;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
    if (points < 1) throw ValidationError("grid needs at least one point");
    if (!(lo > 0.0) || !std::isfinite(hi) || lo > hi) {
        throw ValidationError("geometric grid needs 0 < min <= max");
    }
    if (points == 1) return {lo};
    std::vector<double> out(static_cast<std::size_t>(points));
    const double ratio = std::log(hi / lo);
    for (int k = 0; k < points; ++k) {
        out[static_cast<std::size_t>(k)] = lo * std::exp(ratio * k / (points - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace discount
