#include "discount/exact_mixture.hpp"

#include <algorithm>

#include "discount/errors.hpp"

namespace discount {

ExactScenarioSet::ExactScenarioSet(std::vector<ExactScenario> scenarios) {
    if (scenarios.empty()) throw ValidationError("scenario set must not be empty");
    Rational sum;
    for (const auto& s : scenarios) {
        if (s.weight.sign() <= 0) throw ValidationError("scenario weight must be positive, got " + s.weight.str());
        if (s.rate.sign() <= 0) throw ValidationError("hyperbolic rate must be positive, got " + s.rate.str());
        sum += s.weight;
    }
    if (sum != Rational(1)) {
        throw ExactnessError("exact scenario weights must sum to exactly 1, got " + sum.str() +
                             " (give repeating fractions like 1/3 as fractions)");
    }
    for (auto& s : scenarios) {
        auto it = std::find_if(scenarios_.begin(), scenarios_.end(),
                               [&](const ExactScenario& kept) { return kept.rate == s.rate; });
        if (it == scenarios_.end()) {
            scenarios_.push_back(std::move(s));
        } else {
            it->weight += s.weight;
        }
    }
}

ExactScenarioSet ExactScenarioSet::from_float(const ScenarioSet& set) {
    std::vector<ExactScenario> out;
    for (const auto& s : set.scenarios()) {
        const auto* h = std::get_if<Hyperbolic>(&s.model);
        if (h == nullptr) throw UnsupportedFamilyError("exact rational form exists only for hyperbolic components");
        out.push_back({Rational::from_double(s.weight), Rational::from_double(h->rate)});
    }
    return ExactScenarioSet(std::move(out));
}

ScenarioSet ExactScenarioSet::to_float() const {
    std::vector<Scenario> out;
    out.reserve(scenarios_.size());
    for (const auto& s : scenarios_) out.push_back({s.weight.to_double(), Hyperbolic{s.rate.to_double()}});
    return ScenarioSet(std::move(out));
}

RationalFunction mixture_to_rational(const ExactScenarioSet& scenarios) {
    const auto items = scenarios.scenarios();
    std::vector<Polynomial> factors;
    factors.reserve(items.size());
    for (const auto& s : items) factors.push_back(Polynomial::linear(1, s.rate));

    Polynomial den = Polynomial::constant(1);
    for (const auto& f : factors) den *= f;

    Polynomial num;
    for (std::size_t i = 0; i < items.size(); ++i) {
        Polynomial term = Polynomial::constant(items[i].weight);
        for (std::size_t j = 0; j < items.size(); ++j) {
            if (j != i) term *= factors[j];
        }
        num += term;
    }
    return {std::move(num), std::move(den)};
}

RationalFunction mixture_to_rational(const ScenarioSet& scenarios) {
    return mixture_to_rational(ExactScenarioSet::from_float(scenarios));
}

RationalFunction h_exact(const RationalFunction& discount) {
    const Rational n0 = discount.num().coeff(0);
    const Rational d0 = discount.den().coeff(0);
    if (d0.is_zero() || n0 != d0) {
        throw PreconditionError("local hyperbolic rate needs D(0) = 1 exactly");
    }
    // 1/D - 1 = (den - num)/num; den - num vanishes at 0 so t divides it.
    Polynomial shortfall = (discount.den() - discount.num()).divide_by_t();
    return {std::move(shortfall), discount.num()};
}

Rational exact_harmonic_mean(const ExactScenarioSet& scenarios) {
    Rational acc;
    for (const auto& s : scenarios.scenarios()) acc += s.weight / s.rate;
    return Rational(1) / acc;
}

}  // namespace discount
