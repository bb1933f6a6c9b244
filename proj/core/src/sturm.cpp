#include "discount/sturm.hpp"

#include "discount/errors.hpp"

namespace discount {
namespace {

int sign_at(const Polynomial& p, const Bound& b) {
    switch (b.kind) {
        case Bound::Kind::PlusInfinity:
            return p.sign_at_infinity(+1);
        case Bound::Kind::MinusInfinity:
            return p.sign_at_infinity(-1);
        case Bound::Kind::Finite:
            break;
    }
    return p.sign_at(b.value);
}

// Sign changes along the chain at `b`, zeros skipped.
int variations(const std::vector<Polynomial>& chain, const Bound& b) {
    int count = 0;
    int previous = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, b);
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++count;
        previous = s;
    }
    return count;
}

bool ordered(const Bound& lo, const Bound& hi) {
    if (lo.kind == Bound::Kind::PlusInfinity || hi.kind == Bound::Kind::MinusInfinity) return false;
    if (lo.kind == Bound::Kind::MinusInfinity || hi.kind == Bound::Kind::PlusInfinity) return true;
    return lo.value < hi.value;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    Polynomial next = p.derivative();
    while (!next.is_zero()) {
        chain.push_back(next);
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        next = -a.divmod(b).remainder;
    }
    return chain;
}

int sturm_root_count(const Polynomial& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw DomainError("root count of the zero polynomial is undefined");
    if (!ordered(lo, hi)) throw ValidationError("root-count interval must satisfy lo < hi");
    const Polynomial square_free = exact_quotient(p, gcd(p, p.derivative()));
    const auto chain = sturm_sequence(square_free);
    // V(lo) - V(hi) counts roots in (lo, hi]; a root exactly at hi is removed.
    int count = variations(chain, lo) - variations(chain, hi);
    if (hi.kind == Bound::Kind::Finite && square_free.sign_at(hi.value) == 0) --count;
    return count;
}

}  // namespace discount
