#include "discount/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "discount/errors.hpp"

namespace discount {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::linear(Rational c0, Rational c1) { return Polynomial({std::move(c0), std::move(c1)}); }

Polynomial Polynomial::monomial(Rational c, int degree) {
    if (degree < 0) throw DomainError("monomial degree must be non-negative");
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = std::move(c);
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational{};
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw PreconditionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
    mpq_class acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t.raw();
        acc += it->raw();
    }
    return Rational(std::move(acc));
}

int Polynomial::sign_at_infinity(int direction) const {
    if (is_zero()) return 0;
    const int s = leading().sign();
    return (direction < 0 && degree() % 2 == 1) ? -s : s;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    const Rational lc = leading();
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c /= lc;
    return out;
}

Polynomial Polynomial::divide_by_t() const {
    if (is_zero()) return {};
    if (!coeffs_.front().is_zero()) throw PreconditionError("polynomial has a nonzero constant term; not divisible by t");
    return Polynomial(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial{}, *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
    const Rational& lc = divisor.leading();
    for (int k = degree() - dd; k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + dd);
        if (rem[top].is_zero()) continue;
        const Rational factor = rem[top] / lc;
        quot[static_cast<std::size_t>(k)] = factor;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) os << mag.str();
        if (i >= 1) os << (unit ? "" : "*") << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).remainder;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto qr = a.divmod(b);
    if (!qr.remainder.is_zero()) throw PreconditionError("polynomial division is not exact");
    return std::move(qr.quotient);
}

}  // namespace discount
