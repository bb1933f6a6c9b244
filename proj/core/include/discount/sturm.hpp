#pragma once

#include <vector>

#include "discount/polynomial.hpp"

namespace discount {

/// Interval endpoint: an exact rational or +/- infinity.
struct Bound {
    enum class Kind { Finite, PlusInfinity, MinusInfinity };
    Kind kind = Kind::Finite;
    Rational value;

    static Bound at(Rational v) { return {Kind::Finite, std::move(v)}; }
    static Bound plus_infinity() { return {Kind::PlusInfinity, {}}; }
    static Bound minus_infinity() { return {Kind::MinusInfinity, {}}; }
};

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k), ending at the
/// last nonzero remainder.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots of `p` in the open interval (lo, hi).
/// Works on the square-free part p / gcd(p, p'); infinite endpoints use
/// leading-coefficient signs. Throws DomainError for the zero polynomial and
/// ValidationError unless lo < hi.
int sturm_root_count(const Polynomial& p, const Bound& lo, const Bound& hi);

}  // namespace discount
