#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "discount/rational.hpp"

namespace discount {

/// Dense univariate polynomial over Rational. Coefficient i multiplies t^i;
/// trailing zeros are never stored, so the zero polynomial is empty.
class Polynomial {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(Rational c);
    /// c0 + c1 t
    static Polynomial linear(Rational c0, Rational c1);
    /// c t^degree
    static Polynomial monomial(Rational c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// kZeroDegree for the zero polynomial.
    int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }
    /// Coefficient of t^i (zero past the degree).
    Rational coeff(int i) const;
    /// Throws PreconditionError for the zero polynomial.
    const Rational& leading() const;

    Rational operator()(const Rational& t) const;
    int sign_at(const Rational& t) const { return (*this)(t).sign(); }
    /// Sign as t -> +inf (direction > 0) or t -> -inf (direction < 0).
    int sign_at_infinity(int direction) const;

    Polynomial derivative() const;
    /// Scaled to leading coefficient 1 (zero stays zero).
    Polynomial monic() const;
    /// p(t) / t for p with zero constant term; throws PreconditionError otherwise.
    Polynomial divide_by_t() const;

    struct DivMod;
    /// Euclidean division; throws DomainError when `divisor` is zero.
    DivMod divmod(const Polynomial& divisor) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// "1 + 3/200*t + 1/5000*t^2"
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// a / b where b is known to divide a; throws PreconditionError on a nonzero remainder.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

}  // namespace discount
