#include "discount/certify.hpp"

#include <sstream>

#include "discount/errors.hpp"
#include "discount/sturm.hpp"

namespace discount {
namespace {

SignCertificate certify_strict(const RationalFunction& f, SignClaim claim) {
    const Polynomial& den = f.den();
    if (den.sign_at(0) == 0 || sturm_root_count(den, Bound::at(0), Bound::plus_infinity()) != 0) {
        throw PoleError("denominator " + den.str() + " vanishes on [0, inf)");
    }

    SignCertificate cert;
    cert.sample_point = Rational(1);
    if (f.is_zero()) {
        cert.claim = SignClaim::IdenticallyZero;
        cert.valid = true;
        return cert;
    }
    cert.claim = claim;

    const Polynomial& num = f.num();
    const int den_sign = den.sign_at(0);
    cert.numerator_roots = sturm_root_count(num, Bound::at(0), Bound::plus_infinity());
    cert.sample_sign = num.sign_at(cert.sample_point) * den_sign;
    cert.sign_at_zero = num.sign_at(0) * den_sign;
    cert.sign_at_infinity = num.sign_at_infinity(+1) * den.sign_at_infinity(+1);

    const int wanted = claim == SignClaim::StrictlyNegative ? -1 : +1;
    if (cert.numerator_roots != 0) {
        std::ostringstream os;
        os << "numerator has " << cert.numerator_roots << " root(s) in (0, inf)";
        cert.reason = os.str();
    } else if (cert.sample_sign != wanted) {
        cert.reason = "sign at t = " + cert.sample_point.str() + " contradicts the claim";
    } else {
        cert.valid = true;
    }
    return cert;
}

}  // namespace

std::string to_string(SignClaim claim) {
    switch (claim) {
        case SignClaim::StrictlyNegative:
            return "strictly negative";
        case SignClaim::StrictlyPositive:
            return "strictly positive";
        case SignClaim::IdenticallyZero:
            return "identically zero";
    }
    return "unknown";
}

std::string SignCertificate::summary() const {
    std::ostringstream os;
    os << (valid ? "certified " : "NOT certified ") << to_string(claim) << " on (0, inf)";
    if (claim != SignClaim::IdenticallyZero) {
        os << ": numerator roots in (0, inf) = " << numerator_roots << ", sign at t=" << sample_point.str()
           << " is " << sample_sign << ", sign at 0 is " << sign_at_zero << ", sign at inf is "
           << sign_at_infinity;
    }
    if (!valid) os << " (" << reason << ")";
    return os.str();
}

SignCertificate certify_negative(const RationalFunction& f) { return certify_strict(f, SignClaim::StrictlyNegative); }

SignCertificate certify_positive(const RationalFunction& f) { return certify_strict(f, SignClaim::StrictlyPositive); }

SignCertificate certify_theorem1(const ExactScenarioSet& scenarios) {
    const RationalFunction local_rate = h_exact(mixture_to_rational(scenarios));
    return certify_negative(differentiate(local_rate));
}

}  // namespace discount
