#include "discount/rational.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <cmath>
#include <string>

#include "discount/errors.hpp"

namespace discount {
namespace {

[[noreturn]] void bad_literal(std::string_view text) {
    throw ValidationError("not a decimal or fraction literal: \"" + std::string(text) + "\"");
}

// [+-]digits[.digits][(e|E)[+-]digits], expanded literally.
Rational parse_decimal(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits.push_back(text[i++]);
        seen_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits.push_back(text[i++]);
            --scale;
            seen_digit = true;
        }
    }
    if (!seen_digit) bad_literal(whole);
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        std::string exp_digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exp_digits.push_back(text[i++]);
        if (exp_digits.empty() || exp_digits.size() > 4) bad_literal(whole);
        const long e = std::stol(exp_digits);
        scale += exp_negative ? -e : e;
    }
    if (i != text.size()) bad_literal(whole);

    mpz_class mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    mpq_class q = scale < 0 ? mpq_class(mantissa, power) : mpq_class(mantissa * power);
    q.canonicalize();
    return Rational(q);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

double Rational::to_double() const {
    // mpq_get_d truncates; pick whichever neighbour is nearer, ties to even.
    const double truncated = q_.get_d();
    if (!std::isfinite(truncated) || sign() == 0) return truncated;
    const double away = std::nextafter(truncated, sign() > 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away)) return truncated;
    const mpq_class gap_t = abs(q_ - mpq_class(truncated));
    const mpq_class gap_a = abs(mpq_class(away) - q_);
    const int c = cmp(gap_t, gap_a);
    if (c < 0) return truncated;
    if (c > 0) return away;
    return (std::bit_cast<std::uint64_t>(truncated) & 1U) == 0 ? truncated : away;
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to a rational");
    return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) bad_literal(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text, text);
    const auto num = parse_decimal(text.substr(0, slash), text);
    const auto den = parse_decimal(text.substr(slash + 1), text);
    if (den.is_zero()) throw ValidationError("fraction with zero denominator: \"" + std::string(text) + "\"");
    return num / den;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

}  // namespace discount
