#include "discount/rational_function.hpp"

#include "discount/errors.hpp"

namespace discount {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Polynomial g = gcd(num, den);
    num_ = exact_quotient(num, g);
    den_ = exact_quotient(den, g);
    const Rational at_zero = den_.coeff(0);
    const Rational scale = at_zero.is_zero() ? den_.leading() : at_zero;
    const Rational inv = Rational(1) / scale;
    num_ *= inv;
    den_ *= inv;
}

RationalFunction RationalFunction::constant(Rational c) {
    return {Polynomial::constant(std::move(c)), Polynomial::constant(1)};
}

Rational RationalFunction::operator()(const Rational& t) const {
    const Rational d = den_(t);
    if (d.is_zero()) throw PoleError("rational function evaluated at a pole t = " + t.str());
    return num_(t) / d;
}

double RationalFunction::evaluate(double t) const { return (*this)(Rational::from_double(t)).to_double(); }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator*(const Rational& c) const { return {num_ * c, den_}; }

std::string RationalFunction::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

RationalFunction differentiate(const RationalFunction& f) {
    const Polynomial& n = f.num();
    const Polynomial& d = f.den();
    return {n.derivative() * d - n * d.derivative(), d * d};
}

ExactLimit exact_limit(const RationalFunction& f) {
    if (f.is_zero()) return {true, Rational{}};
    const int dn = f.num().degree();
    const int dd = f.den().degree();
    if (dn < dd) return {true, Rational{}};
    if (dn == dd) return {true, f.num().leading() / f.den().leading()};
    return {false, Rational{}, f.num().leading().sign() * f.den().leading().sign()};
}

}  // namespace discount
