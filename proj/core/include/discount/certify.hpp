#pragma once

#include <string>

#include "discount/exact_mixture.hpp"
#include "discount/rational_function.hpp"

namespace discount {

enum class SignClaim { StrictlyNegative, StrictlyPositive, IdenticallyZero };

std::string to_string(SignClaim claim);

/// Machine-checked evidence about the sign of a rational function on (0, inf).
///
/// A strict-sign claim holds when the numerator has no root in (0, inf),
/// the denominator has none in [0, inf), and the sign at one interior
/// sample point matches the claim.
struct SignCertificate {
    SignClaim claim = SignClaim::StrictlyNegative;
    bool valid = false;
    int numerator_roots = 0;  ///< distinct roots of the numerator in (0, inf)
    Rational sample_point;
    int sample_sign = 0;
    int sign_at_zero = 0;      ///< sign of f(0)
    int sign_at_infinity = 0;  ///< sign of f as t -> inf
    std::string reason;        ///< why an invalid certificate failed

    std::string summary() const;
};

/// Certify f(t) < 0 for all t > 0. A zero function yields an
/// IdenticallyZero certificate. A falsified claim is returned as an
/// invalid certificate; a pole in [0, inf) throws PoleError.
SignCertificate certify_negative(const RationalFunction& f);

SignCertificate certify_positive(const RationalFunction& f);

/// The derivative of the local hyperbolic rate of an exact mixture is
/// strictly negative on (0, inf), or identically zero when every scenario
/// shares one rate.
SignCertificate certify_theorem1(const ExactScenarioSet& scenarios);

}  // namespace discount
