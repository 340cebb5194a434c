#pragma once

#include <map>
#include <string>

#include "modec/group.hpp"

namespace modec {

/**
 * An element of the rational group algebra over the lattice group: a finite
 * formal sum of terms q * X^gamma. Stored as a map from exponent to nonzero
 * coefficient; the map order makes every traversal deterministic.
 */
struct GroupRingElement {
    std::map<GroupElement, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    bool operator==(const GroupRingElement& o) const { return terms == o.terms; }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }
    bool operator<(const GroupRingElement& o) const { return terms < o.terms; }
};

GroupRingElement rr_zero();
GroupRingElement rr_one();

/// The single term q * X^g; returns zero when q = 0.
GroupRingElement rr_monomial(const Rational& q, const GroupElement& g);

GroupRingElement rr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement rr_neg(const GroupRingElement& a);
GroupRingElement rr_sub(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement rr_mul(const GroupRingElement& a, const GroupRingElement& b);

/// Meet of the exponents occurring in a nonzero element; throws ZeroElement on 0.
GroupElement content_poly(const GroupRingElement& a);

std::string rr_to_string(const GroupRingElement& a);

/**
 * A formal quotient of two group ring elements with nonzero denominator.
 * Quotients are not reduced; equality is decided by cross multiplication.
 */
struct FractionElement {
    GroupRingElement num;
    GroupRingElement den; // nonzero

    bool is_zero() const { return num.is_zero(); }
};

FractionElement fr_make(GroupRingElement num, GroupRingElement den);
FractionElement fr_zero();
FractionElement fr_one();
FractionElement fr_of(const GroupRingElement& a);

bool fr_eq(const FractionElement& a, const FractionElement& b);
FractionElement fr_add(const FractionElement& a, const FractionElement& b);
FractionElement fr_neg(const FractionElement& a);
FractionElement fr_sub(const FractionElement& a, const FractionElement& b);
FractionElement fr_mul(const FractionElement& a, const FractionElement& b);
FractionElement fr_div(const FractionElement& a, const FractionElement& b);

/// content(num) - content(den); throws ZeroElement when the value is zero.
GroupElement content_fraction(const FractionElement& a);

std::string fr_to_string(const FractionElement& a);

} // namespace modec
