#include "modec/prime_logic.hpp"

#include "modec/errors.hpp"

namespace modec {

static void check_dim(const DomainRing& ring) {
    if (!ring.krull_dim_one)
        throw DimensionUnsupported("decision requires a Krull-dimension-one instance");
}

bool leq_p(const DomainElement& a, const DomainElement& b, const PrimeDescriptor& p) {
    return !prime_contains(p, gamma(a, b));
}

bool lt_p(const DomainElement& a, const DomainElement& b, const PrimeDescriptor& p) {
    return leq_p(a, b, p) && !leq_p(b, a, p);
}

Cond leq_pq_condition(const DomainElement& a, const DomainElement& b) {
    DomainElement g = gamma(a, b);
    return c_or2(c_not(c_memp(g)), c_not(c_memq(g)));
}

Cond lt_pq_condition(const DomainElement& a, const DomainElement& b) {
    DomainElement g = gamma(b, a);
    return c_and({leq_pq_condition(a, b), c_memp(g), c_memq(g)});
}

bool leq_p_tuganbaev(const DomainElement& a, const DomainElement& b,
                     const PrimeDescriptor& p) {
    // Swapped so the witness identities read b*alpha = a*r and a*(alpha-1) = b*s.
    TuganbaevTriple t = tuganbaev(b, a);
    return !prime_contains(p, t.alpha) || !prime_contains(p, t.s);
}

static DomainElement fold_product(RingKind kind, const std::vector<DomainElement>& xs) {
    DomainElement acc = d_one(kind);
    for (const DomainElement& x : xs) acc = d_mul(acc, x);
    return acc;
}

static DomainElement fold_gcd(RingKind kind, const std::vector<DomainElement>& xs) {
    DomainElement acc = d_zero(kind);
    for (const DomainElement& x : xs) acc = gcd_canon(acc, x);
    return acc;
}

DPRTuple clause_to_dpr(RingKind kind, const CnfClause& clause) {
    return DPRTuple{fold_product(kind, clause.p_pos), fold_gcd(kind, clause.p_neg),
                    fold_product(kind, clause.q_pos), fold_gcd(kind, clause.q_neg)};
}

bool dpr(const DomainRing& ring, const DPRTuple& t) {
    check_dim(ring);
    if (!rad_member(ring, d_mul(t.a, t.c), gcd_canon(t.b, t.d))) return false;
    if (d_is_zero(t.d) && !d_is_zero(t.c) && !rad_member(ring, t.a, t.b)) return false;
    if (d_is_zero(t.b) && !d_is_zero(t.a) && !rad_member(ring, t.c, t.d)) return false;
    return true;
}

bool dpr_n(const DomainRing& ring, const DPRnQuery& q) {
    if (q.bs.empty() || q.bs.size() != q.ds.size())
        throw PreconditionViolation("dpr_n requires nonempty lists of equal length");
    return dpr(ring, DPRTuple{q.a, fold_gcd(ring.kind, q.bs),
                              q.c, fold_gcd(ring.kind, q.ds)});
}

bool holds_for_all_pairs(const DomainRing& ring, const Cond& c) {
    check_dim(ring);
    for (const CnfClause& clause : cond_cnf(c))
        if (!dpr(ring, clause_to_dpr(ring.kind, clause))) return false;
    return true;
}

std::vector<std::pair<PrimeDescriptor, PrimeDescriptor>> compatible_pairs(
    const DomainRing& ring, const std::vector<DomainElement>& elems) {
    std::vector<PrimeDescriptor> ps = relevant_primes(ring, elems);
    std::vector<std::pair<PrimeDescriptor, PrimeDescriptor>> out;
    for (const PrimeDescriptor& p : ps)
        for (const PrimeDescriptor& q : ps)
            if (p == q || p.is_zero_ideal() || q.is_zero_ideal())
                out.emplace_back(p, q);
    return out;
}

bool dpr_oracle_enum(const DomainRing& ring, const DPRTuple& t) {
    for (const auto& [p, q] : compatible_pairs(ring, {t.a, t.b, t.c, t.d})) {
        bool ok = prime_contains(p, t.a) || !prime_contains(p, t.b) ||
                  prime_contains(q, t.c) || !prime_contains(q, t.d);
        if (!ok) return false;
    }
    return true;
}

bool dpr_oracle_localization(const DomainRing& ring, const DPRTuple& t) {
    // Membership in the radical of the extension of (b) in the rank-one
    // localization at m.
    auto in_rad_at = [](const DomainElement& a, const DomainElement& b,
                        const PrimeDescriptor& m) {
        if (d_is_zero(b)) return d_is_zero(a);
        if (prime_contains(m, b)) return prime_contains(m, a);
        return true; // b is a unit of the localization
    };
    // A maximal ideal avoiding all four elements witnesses failure exactly
    // when both quotients degenerate to "nonzero over zero"; such an ideal
    // always exists but is never listed, so handle it up front.
    if (d_is_zero(t.b) && !d_is_zero(t.a) && d_is_zero(t.d) && !d_is_zero(t.c))
        return false;
    for (const PrimeDescriptor& m : relevant_primes(ring, {t.a, t.b, t.c, t.d})) {
        if (m.is_zero_ideal()) continue;
        if (!in_rad_at(t.a, t.b, m) && !in_rad_at(t.c, t.d, m)) return false;
    }
    return true;
}

bool kjo_quotient_proper(const DomainRing& ring, const DPRTuple& t) {
    if (ring.kind != RingKind::Kjo)
        throw InstanceMismatch("quotient-properness check is specific to the sequence ring");
    // The primes p with b in p and a not in p, described as: nothing (Empty),
    // the zero ideal plus every direction outside supp(a) (Cozero), or an
    // explicit set of directions (Directions).
    enum class Kind { Empty, Cozero, Directions };
    struct Side {
        Kind kind;
        SupportSet dirs;
    };
    auto side = [](const DomainElement& a, const DomainElement& b) -> Side {
        if (d_is_zero(a)) return {Kind::Empty, {}};
        if (d_is_zero(b)) return {Kind::Cozero, {}};
        SupportSet diff = support_difference(g_support(content_fraction(b.frac())),
                                             g_support(content_fraction(a.frac())));
        if (diff.empty()) return {Kind::Empty, {}};
        return {Kind::Directions, std::move(diff)};
    };
    Side left = side(t.a, t.b);
    Side right = side(t.c, t.d);
    if (left.kind == Kind::Empty || right.kind == Kind::Empty) return false;
    // A Cozero side contains the zero ideal, which is compatible with
    // everything, so any nonempty other side yields a witnessing pair.
    if (left.kind == Kind::Cozero || right.kind == Kind::Cozero) return true;
    return support_intersects(left.dirs, right.dirs);
}

bool holds_oracle_enum(const DomainRing& ring, const Cond& c,
                       const std::vector<DomainElement>& extra) {
    std::vector<DomainElement> elems = cond_elements(c);
    elems.insert(elems.end(), extra.begin(), extra.end());
    for (const auto& [p, q] : compatible_pairs(ring, elems))
        if (!cond_eval(c, p, q)) return false;
    return true;
}

} // namespace modec
