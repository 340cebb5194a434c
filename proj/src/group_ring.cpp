#include "modec/group_ring.hpp"

#include <sstream>

namespace modec {

GroupRingElement rr_zero() { return {}; }

GroupRingElement rr_one() { return rr_monomial(1, g_zero()); }

GroupRingElement rr_monomial(const Rational& q, const GroupElement& g) {
    GroupRingElement r;
    if (!is_zero(q)) r.terms.emplace(g, q);
    return r;
}

GroupRingElement rr_add(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [g, q] : b.terms) {
        auto it = r.terms.find(g);
        if (it == r.terms.end()) {
            r.terms.emplace(g, q);
        } else {
            it->second += q;
            if (is_zero(it->second)) r.terms.erase(it);
        }
    }
    return r;
}

GroupRingElement rr_neg(const GroupRingElement& a) {
    GroupRingElement r = a;
    for (auto& [g, q] : r.terms) q = -q;
    return r;
}

GroupRingElement rr_sub(const GroupRingElement& a, const GroupRingElement& b) {
    return rr_add(a, rr_neg(b));
}

GroupRingElement rr_mul(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [ga, qa] : a.terms) {
        for (const auto& [gb, qb] : b.terms) {
            GroupElement g = g_add(ga, gb);
            Rational q = qa * qb;
            auto it = r.terms.find(g);
            if (it == r.terms.end()) {
                if (!is_zero(q)) r.terms.emplace(std::move(g), std::move(q));
            } else {
                it->second += q;
                if (is_zero(it->second)) r.terms.erase(it);
            }
        }
    }
    return r;
}

GroupElement content_poly(const GroupRingElement& a) {
    if (a.is_zero()) throw ZeroElement("content of the zero element");
    auto it = a.terms.begin();
    GroupElement c = it->first;
    for (++it; it != a.terms.end(); ++it) c = g_meet(c, it->first);
    return c;
}

std::string rr_to_string(const GroupRingElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, q] : a.terms) {
        Rational aq = abs(q);
        if (first) {
            if (sgn(q) < 0) os << '-';
            first = false;
        } else {
            os << (sgn(q) < 0 ? " - " : " + ");
        }
        if (g_is_zero(g)) {
            os << rat_to_string(aq);
        } else {
            if (aq != 1) os << rat_to_string(aq) << '*';
            os << "X^" << g_to_string(g);
        }
    }
    return os.str();
}

FractionElement fr_make(GroupRingElement num, GroupRingElement den) {
    if (den.is_zero()) throw DivisionByZero("fraction with zero denominator");
    return FractionElement{std::move(num), std::move(den)};
}

FractionElement fr_zero() { return FractionElement{rr_zero(), rr_one()}; }
FractionElement fr_one() { return FractionElement{rr_one(), rr_one()}; }
FractionElement fr_of(const GroupRingElement& a) { return FractionElement{a, rr_one()}; }

bool fr_eq(const FractionElement& a, const FractionElement& b) {
    return rr_mul(a.num, b.den) == rr_mul(b.num, a.den);
}

FractionElement fr_add(const FractionElement& a, const FractionElement& b) {
    return fr_make(rr_add(rr_mul(a.num, b.den), rr_mul(b.num, a.den)), rr_mul(a.den, b.den));
}

FractionElement fr_neg(const FractionElement& a) { return FractionElement{rr_neg(a.num), a.den}; }

FractionElement fr_sub(const FractionElement& a, const FractionElement& b) {
    return fr_add(a, fr_neg(b));
}

FractionElement fr_mul(const FractionElement& a, const FractionElement& b) {
    return fr_make(rr_mul(a.num, b.num), rr_mul(a.den, b.den));
}

FractionElement fr_div(const FractionElement& a, const FractionElement& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero fraction");
    return fr_make(rr_mul(a.num, b.den), rr_mul(a.den, b.num));
}

GroupElement content_fraction(const FractionElement& a) {
    if (a.is_zero()) throw ZeroElement("content of the zero fraction");
    return g_sub(content_poly(a.num), content_poly(a.den));
}

std::string fr_to_string(const FractionElement& a) {
    if (a.den == rr_one()) return rr_to_string(a.num);
    return "(" + rr_to_string(a.num) + ")/(" + rr_to_string(a.den) + ")";
}

} // namespace modec
