#include "discount/means.hpp"

#include <cmath>
#include <sstream>

#include "discount/errors.hpp"
#include "discount/model.hpp"

namespace discount {
namespace {

void validate(std::span<const double> values, std::span<const double> weights) {
    if (values.empty()) throw ValidationError("mean of an empty list");
    if (values.size() != weights.size()) throw ValidationError("values and weights differ in length");
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
            std::ostringstream os;
            os << "mean inputs must be positive, got " << values[i];
            throw DomainError(os.str());
        }
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
            std::ostringstream os;
            os << "mean weights must be positive, got " << weights[i];
            throw ValidationError(os.str());
        }
        sum += weights[i];
    }
    if (std::abs(sum - 1.0) > ScenarioSet::kWeightTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "mean weights must sum to 1, got " << sum;
        throw ValidationError(os.str());
    }
}

}  // namespace

double harmonic_mean(std::span<const double> values, std::span<const double> weights) {
    validate(values, weights);
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] / values[i];
    return 1.0 / acc;
}

double arithmetic_mean(std::span<const double> values, std::span<const double> weights) {
    validate(values, weights);
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] * values[i];
    return acc;
}

}  // namespace discount
