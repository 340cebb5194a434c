#pragma once

#include <utility>
#include <vector>

#include "modec/condition.hpp"

namespace modec {

/// Quadruple tested by the double-radical relation: for every pair of primes
/// (p, q) with p + q proper, a in p, or b not in p, or c in q, or d not in q.
struct DPRTuple {
    DomainElement a, b, c, d;
};

/// n-ary variant: b and d are replaced by equal-length lists, read as
/// "some b_i lies outside p" / "some d_i lies outside q".
struct DPRnQuery {
    DomainElement a, c;
    std::vector<DomainElement> bs, ds;
};

/// Order at the localization at p: holds iff gamma(a, b) avoids p.
bool leq_p(const DomainElement& a, const DomainElement& b, const PrimeDescriptor& p);
bool lt_p(const DomainElement& a, const DomainElement& b, const PrimeDescriptor& p);

/// Symbolic form of the order at the intersection of the two primes of a
/// compatible pair; evaluating at (p, q) with p + q proper gives a <= b there.
Cond leq_pq_condition(const DomainElement& a, const DomainElement& b);
Cond lt_pq_condition(const DomainElement& a, const DomainElement& b);

/// Independent route to leq_p through division witnesses; the identities of
/// the witness triple are re-checked on the way.
bool leq_p_tuganbaev(const DomainElement& a, const DomainElement& b, const PrimeDescriptor& p);

/// Collapses one disjunctive clause to the quadruple whose dpr verdict equals
/// "the clause holds at every compatible pair": products on the positive
/// sides, canonical gcds on the negated sides (empty product 1, empty gcd 0).
DPRTuple clause_to_dpr(RingKind kind, const CnfClause& clause);

/// Decides the double-radical relation on a Krull-dimension-one instance.
bool dpr(const DomainRing& ring, const DPRTuple& t);

/// n-ary reduction: gcd-folds the lists and defers to dpr.
bool dpr_n(const DomainRing& ring, const DPRnQuery& q);

/// Whether the condition holds at every compatible prime pair, via CNF and
/// one dpr decision per clause.
bool holds_for_all_pairs(const DomainRing& ring, const Cond& c);

/// All compatible prime pairs over the relevant primes of the listed
/// elements: equal pairs plus pairs involving the zero ideal.
std::vector<std::pair<PrimeDescriptor, PrimeDescriptor>> compatible_pairs(
    const DomainRing& ring, const std::vector<DomainElement>& elems);

/// Oracle: direct evaluation of the defining disjunction at every compatible
/// pair. The pair (Zero, Zero) doubles for any prime avoiding all four
/// elements, which makes the finite enumeration complete.
bool dpr_oracle_enum(const DomainRing& ring, const DPRTuple& t);

/// Oracle: searches for a maximal ideal witnessing failure through the
/// radical relation of the rank-one localization at it.
bool dpr_oracle_localization(const DomainRing& ring, const DPRTuple& t);

/// Oracle, sequence-ring instance only: decides properness of the associated
/// quotient ideal directly from content supports; equals NOT dpr.
bool kjo_quotient_proper(const DomainRing& ring, const DPRTuple& t);

/// Oracle: evaluates the condition itself at every compatible pair drawn
/// from the condition's own elements plus the extras.
bool holds_oracle_enum(const DomainRing& ring, const Cond& c,
                       const std::vector<DomainElement>& extra = {});

} // namespace modec
