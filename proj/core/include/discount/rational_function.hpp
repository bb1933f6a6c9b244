#pragma once

#include <string>

#include "discount/polynomial.hpp"

namespace discount {

/// Exact quotient num(t)/den(t) of rational-coefficient polynomials.
///
/// Always stored reduced: common polynomial factors are cancelled, a zero
/// numerator has denominator 1, and the denominator is scaled so that
/// den(0) = 1 when den(0) != 0 (otherwise den is monic).
class RationalFunction {
public:
    /// Throws DomainError if `den` is the zero polynomial.
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction constant(Rational c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Exact value; throws PoleError where den(t) = 0.
    Rational operator()(const Rational& t) const;
    /// Value at the exact binary rational of `t`, rounded to double.
    double evaluate(double t) const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator*(const Rational& c) const;
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Quotient-rule derivative, reduced.
RationalFunction differentiate(const RationalFunction& f);

/// lim f(t) as t -> +inf.
struct ExactLimit {
    bool finite;
    Rational value;          ///< meaningful when finite
    int divergence_sign = 0; ///< +1 / -1 when not finite
};

ExactLimit exact_limit(const RationalFunction& f);

}  // namespace discount
