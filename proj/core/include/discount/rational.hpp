#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace discount {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (zero is 0/1).
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Exact binary value of a finite double.
    static Rational from_double(double value);

    /// Parse "7", "-0.01", "2.5e-3" (literal decimal expansion) or "1/3",
    /// "0.5/3" (quotient of two decimal literals). Throws ValidationError.
    static Rational parse(std::string_view text);

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    /// Nearest double, ties to even.
    double to_double() const;

    /// "9/550", "-3", "0".
    std::string str() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

}  // namespace discount
