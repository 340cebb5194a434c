#include "modec/domain.hpp"

#include <sstream>
#include <utility>

#include "modec/errors.hpp"

namespace modec {

// --- polynomials -----------------------------------------------------------

Polynomial poly_make(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
    return Polynomial{std::move(coeffs)};
}

Polynomial poly_zero() { return {}; }
Polynomial poly_one() { return poly_make({rat_of(1)}); }
Polynomial poly_x() { return poly_make({rat_of(0), rat_of(1)}); }
Polynomial poly_const(const Rational& q) { return poly_make({q}); }

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c.size(), b.c.size()), rat_of(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return poly_make(std::move(c));
}

Polynomial poly_neg(const Polynomial& a) {
    std::vector<Rational> c = a.c;
    for (auto& q : c) q = -q;
    return Polynomial{std::move(c)};
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    return poly_add(a, poly_neg(b));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero();
    std::vector<Rational> c(a.c.size() + b.c.size() - 1, rat_of(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] += a.c[i] * b.c[j];
    return poly_make(std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {poly_zero(), a};
    std::vector<Rational> rem = a.c;
    std::vector<Rational> quo(a.c.size() - b.c.size() + 1, rat_of(0));
    for (long k = static_cast<long>(quo.size()) - 1; k >= 0; --k) {
        size_t top = static_cast<size_t>(k) + b.c.size() - 1;
        Rational q = rem[top] / b.lead();
        if (is_zero(q)) continue;
        quo[static_cast<size_t>(k)] = q;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem[static_cast<size_t>(k) + i] -= q * b.c[i];
    }
    return {poly_make(std::move(quo)), poly_make(std::move(rem))};
}

Polynomial poly_monic(const Polynomial& a) {
    if (a.is_zero()) return a;
    std::vector<Rational> c = a.c;
    Rational lead = c.back();
    for (auto& q : c) q /= lead;
    return Polynomial{std::move(c)};
}

Polynomial poly_derivative(const Polynomial& a) {
    if (a.c.size() <= 1) return poly_zero();
    std::vector<Rational> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * rat_of(static_cast<long>(i));
    return poly_make(std::move(c));
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r = poly_divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return poly_monic(r0);
}

std::string poly_to_string(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = a.degree(); k >= 0; --k) {
        const Rational& q = a.c[static_cast<size_t>(k)];
        if (is_zero(q)) continue;
        Rational mag = q > 0 ? q : Rational(-q);
        if (first) {
            if (q < 0) os << "-";
            first = false;
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1) && k > 0;
        if (!unit_coeff) os << rat_to_string(mag);
        if (k > 0) {
            if (!unit_coeff) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// --- ring instances and elements -------------------------------------------

DomainRing DomainRing::kjo() {
    DomainRing r;
    r.kind = RingKind::Kjo;
    return r;
}

DomainRing DomainRing::rational_poly() {
    DomainRing r;
    r.kind = RingKind::RationalPoly;
    // Declared monic irreducibles; factorization is trial division over these.
    r.pool = {
        poly_x(),
        poly_make({rat_of(-1), rat_of(1)}),           // x - 1
        poly_make({rat_of(1), rat_of(1)}),            // x + 1
        poly_make({rat_of(-2), rat_of(1)}),           // x - 2
        poly_make({rat_of(2), rat_of(1)}),            // x + 2
        poly_make({rat_of(-3), rat_of(1)}),           // x - 3
        poly_make({rat_of(1), rat_of(0), rat_of(1)}), // x^2 + 1
        poly_make({rat_of(-2), rat_of(0), rat_of(1)}),// x^2 - 2
        poly_make({rat_of(1), rat_of(1), rat_of(1)}), // x^2 + x + 1
    };
    return r;
}

static void require_same(const DomainElement& a, const DomainElement& b) {
    if (a.kind != b.kind)
        throw InstanceMismatch("elements belong to different ring instances");
}

static void require_kind(const DomainElement& a, RingKind k, const char* what) {
    if (a.kind != k) throw InstanceMismatch(std::string(what) + ": wrong ring instance");
}

DomainElement kjo_elem(FractionElement f) {
    if (!f.is_zero()) {
        GroupElement c = content_fraction(f);
        if (!g_leq(g_zero(), c))
            throw NegativeElement("fraction with negative content: " + fr_to_string(f));
    }
    return DomainElement{RingKind::Kjo, std::move(f)};
}

DomainElement kjo_monomial(const Rational& q, const GroupElement& g) {
    return kjo_elem(fr_of(rr_monomial(q, g)));
}

DomainElement qx_elem(Polynomial p) {
    return DomainElement{RingKind::RationalPoly, std::move(p)};
}

DomainElement d_zero(RingKind k) {
    return k == RingKind::Kjo ? DomainElement{k, fr_zero()} : DomainElement{k, poly_zero()};
}

DomainElement d_one(RingKind k) {
    return k == RingKind::Kjo ? DomainElement{k, fr_one()} : DomainElement{k, poly_one()};
}

DomainElement d_const(RingKind k, const Rational& q) {
    if (k == RingKind::Kjo) return kjo_elem(fr_of(rr_monomial(q, g_zero())));
    return qx_elem(poly_const(q));
}

bool d_is_zero(const DomainElement& a) {
    return a.kind == RingKind::Kjo ? a.frac().is_zero() : a.poly().is_zero();
}

bool d_eq(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (a.kind == RingKind::Kjo) return fr_eq(a.frac(), b.frac());
    return a.poly() == b.poly();
}

bool is_unit(const DomainElement& a) {
    if (d_is_zero(a)) return false;
    if (a.kind == RingKind::Kjo) return g_is_zero(content_fraction(a.frac()));
    return a.poly().degree() == 0;
}

DomainElement d_add(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (a.kind == RingKind::Kjo) return kjo_elem(fr_add(a.frac(), b.frac()));
    return qx_elem(poly_add(a.poly(), b.poly()));
}

DomainElement d_neg(const DomainElement& a) {
    if (a.kind == RingKind::Kjo) return kjo_elem(fr_neg(a.frac()));
    return qx_elem(poly_neg(a.poly()));
}

DomainElement d_sub(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (a.kind == RingKind::Kjo) return kjo_elem(fr_sub(a.frac(), b.frac()));
    return qx_elem(poly_sub(a.poly(), b.poly()));
}

DomainElement d_mul(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (a.kind == RingKind::Kjo) return kjo_elem(fr_mul(a.frac(), b.frac()));
    return qx_elem(poly_mul(a.poly(), b.poly()));
}

DomainElement d_pow(const DomainElement& a, unsigned long n) {
    DomainElement acc = d_one(a.kind);
    for (unsigned long i = 0; i < n; ++i) acc = d_mul(acc, a);
    return acc;
}

GroupElement d_content(const DomainElement& a) {
    require_kind(a, RingKind::Kjo, "content");
    return content_fraction(a.frac()); // throws ZeroElement on zero
}

bool divides(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (d_is_zero(b)) return true;
    if (d_is_zero(a)) return false;
    if (a.kind == RingKind::Kjo) {
        GroupElement diff = g_sub(content_fraction(b.frac()), content_fraction(a.frac()));
        return g_leq(g_zero(), diff);
    }
    return poly_divmod(b.poly(), a.poly()).second.is_zero();
}

DomainElement div_exact(const DomainElement& b, const DomainElement& a) {
    require_same(a, b);
    if (d_is_zero(a)) throw DivisionByZero("exact division by zero");
    if (!divides(a, b))
        throw NotDivisible(d_to_string(a) + " does not divide " + d_to_string(b));
    if (d_is_zero(b)) return d_zero(b.kind);
    if (b.kind == RingKind::Kjo)
        return kjo_elem(fr_div(b.frac(), a.frac()));
    return qx_elem(poly_divmod(b.poly(), a.poly()).first);
}

DomainElement canonical_associate(const DomainElement& a) {
    if (d_is_zero(a)) return d_zero(a.kind);
    if (a.kind == RingKind::Kjo)
        return kjo_monomial(rat_of(1), content_fraction(a.frac()));
    return qx_elem(poly_monic(a.poly()));
}

DomainElement gcd_canon(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (d_is_zero(a)) return canonical_associate(b);
    if (d_is_zero(b)) return canonical_associate(a);
    if (a.kind == RingKind::Kjo) {
        GroupElement m = g_meet(content_fraction(a.frac()), content_fraction(b.frac()));
        return kjo_monomial(rat_of(1), m);
    }
    return qx_elem(poly_gcd(a.poly(), b.poly()));
}

DomainElement lcm_canon(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (d_is_zero(a) || d_is_zero(b)) return d_zero(a.kind);
    if (a.kind == RingKind::Kjo) {
        GroupElement j = g_join(content_fraction(a.frac()), content_fraction(b.frac()));
        return kjo_monomial(rat_of(1), j);
    }
    Polynomial prod = poly_mul(a.poly(), b.poly());
    Polynomial g = poly_gcd(a.poly(), b.poly());
    return qx_elem(poly_monic(poly_divmod(prod, g).first));
}

static XgcdResult xgcd_kjo(const DomainElement& a, const DomainElement& b) {
    const FractionElement& af = a.frac();
    const FractionElement& bf = b.frac();
    GroupElement A = content_fraction(af);
    GroupElement C = content_fraction(bf);
    GroupElement M = g_meet(A, C);
    GroupRingElement den = rr_add(rr_monomial(rat_of(1), g_sub(A, M)),
                                  rr_monomial(rat_of(1), g_sub(C, M)));
    DomainElement g = kjo_monomial(rat_of(1), M);
    DomainElement u = kjo_elem(fr_make(rr_mul(rr_monomial(rat_of(1), A), af.den),
                                       rr_mul(den, af.num)));
    DomainElement v = kjo_elem(fr_make(rr_mul(rr_monomial(rat_of(1), C), bf.den),
                                       rr_mul(den, bf.num)));
    return {g, u, v};
}

static XgcdResult xgcd_qx(const DomainElement& a, const DomainElement& b) {
    Polynomial r0 = a.poly(), r1 = b.poly();
    Polynomial s0 = poly_one(), s1 = poly_zero();
    Polynomial t0 = poly_zero(), t1 = poly_one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = poly_sub(s0, poly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = poly_sub(t0, poly_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Polynomial lead = poly_const(r0.lead());
    auto scale = [&](const Polynomial& p) { return poly_divmod(p, lead).first; };
    return {qx_elem(scale(r0)), qx_elem(scale(s0)), qx_elem(scale(t0))};
}

XgcdResult xgcd(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (d_is_zero(a) && d_is_zero(b)) throw BothZero("xgcd(0, 0)");
    XgcdResult res;
    if (d_is_zero(b)) {
        res.g = canonical_associate(a);
        res.u = div_exact(res.g, a);
        res.v = d_zero(a.kind);
    } else if (d_is_zero(a)) {
        res.g = canonical_associate(b);
        res.u = d_zero(a.kind);
        res.v = div_exact(res.g, b);
    } else if (a.kind == RingKind::Kjo) {
        res = xgcd_kjo(a, b);
    } else {
        res = xgcd_qx(a, b);
    }
    DomainElement comb = d_add(d_mul(res.u, a), d_mul(res.v, b));
    if (!d_eq(comb, res.g))
        throw IdentityViolation("xgcd combination check failed for " + d_to_string(a) +
                                ", " + d_to_string(b));
    return res;
}

TuganbaevTriple tuganbaev(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    TuganbaevTriple t;
    if (d_eq(a, b)) {
        t = {d_one(a.kind), d_one(a.kind), d_zero(a.kind)};
    } else if (d_is_zero(a)) {
        t = {d_one(a.kind), d_zero(a.kind), d_zero(a.kind)};
    } else if (d_is_zero(b)) {
        t = {d_zero(a.kind), d_zero(a.kind), d_zero(a.kind)};
    } else {
        XgcdResult x = xgcd(a, b);
        DomainElement ap = div_exact(a, x.g);
        DomainElement bp = div_exact(b, x.g);
        t.alpha = d_mul(x.v, bp);
        t.r = d_mul(x.v, ap);
        t.s = d_neg(d_mul(x.u, bp));
    }
    if (!d_eq(d_mul(a, t.alpha), d_mul(b, t.r)) ||
        !d_eq(d_mul(b, d_sub(t.alpha, d_one(a.kind))), d_mul(a, t.s)))
        throw IdentityViolation("witness identities failed for " + d_to_string(a) + ", " +
                                d_to_string(b));
    return t;
}

DomainElement gamma(const DomainElement& a, const DomainElement& b) {
    require_same(a, b);
    if (d_is_zero(b)) return d_one(a.kind);
    if (d_is_zero(a)) return d_zero(a.kind);
    return div_exact(a, gcd_canon(a, b));
}

bool rad_member(const DomainRing& ring, const DomainElement& a, const DomainElement& b) {
    require_kind(a, ring.kind, "rad_member");
    require_same(a, b);
    if (d_is_zero(b)) return d_is_zero(a);
    if (d_is_zero(a)) return true;
    if (ring.kind == RingKind::Kjo) {
        SupportSet sb = g_support(content_fraction(b.frac()));
        SupportSet sa = g_support(content_fraction(a.frac()));
        return support_subset(sb, sa);
    }
    // squarefree part of b: b / gcd(b, b')
    Polynomial bp = poly_derivative(b.poly());
    Polynomial g = poly_gcd(b.poly(), bp);
    Polynomial sf = poly_divmod(b.poly(), g).first;
    return divides(qx_elem(sf), a);
}

bool rad_member_scaling(const DomainRing& ring, const DomainElement& a, const DomainElement& b) {
    if (ring.kind != RingKind::Kjo)
        throw InstanceMismatch("scaling check is only defined on the sequence-ring instance");
    require_kind(a, ring.kind, "rad_member_scaling");
    require_same(a, b);
    if (d_is_zero(b)) return d_is_zero(a);
    if (d_is_zero(a)) return true;
    GroupElement A = content_fraction(a.frac());
    GroupElement B = content_fraction(b.frac());
    Integer hi = g_max_entry(B);
    if (hi < 1) hi = 1;
    for (Integer n = 1; n <= hi; ++n)
        if (g_leq(B, g_scale(n, A))) return true;
    return false;
}

bool rad_member_primes(const DomainRing& ring, const DomainElement& a, const DomainElement& b) {
    require_kind(a, ring.kind, "rad_member_primes");
    require_same(a, b);
    if (d_is_zero(b)) return d_is_zero(a);
    if (d_is_zero(a)) return true;
    for (const PrimeDescriptor& p : relevant_primes(ring, {a, b})) {
        if (p.is_zero_ideal()) continue;
        if (prime_contains(p, b) && !prime_contains(p, a)) return false;
    }
    return true;
}

std::string prime_to_string(const PrimeDescriptor& p) {
    switch (p.kind) {
        case PrimeDescriptor::Kind::Zero: return "Zero";
        case PrimeDescriptor::Kind::Coord: return "Coord(" + std::to_string(p.index) + ")";
        case PrimeDescriptor::Kind::Tail: return "Tail";
        case PrimeDescriptor::Kind::Irreducible: return "Irr(" + poly_to_string(p.p) + ")";
    }
    return "?";
}

bool prime_contains(const PrimeDescriptor& p, const DomainElement& a) {
    if (p.kind == PrimeDescriptor::Kind::Zero) return d_is_zero(a);
    if (d_is_zero(a)) return true;
    switch (p.kind) {
        case PrimeDescriptor::Kind::Coord:
            require_kind(a, RingKind::Kjo, "coordinate prime");
            return content_fraction(a.frac()).at(p.index) > 0;
        case PrimeDescriptor::Kind::Tail:
            require_kind(a, RingKind::Kjo, "tail prime");
            return content_fraction(a.frac()).tail > 0;
        case PrimeDescriptor::Kind::Irreducible:
            require_kind(a, RingKind::RationalPoly, "irreducible prime");
            return poly_divmod(a.poly(), p.p).second.is_zero();
        default: return false;
    }
}

std::vector<PrimeDescriptor> relevant_primes(const DomainRing& ring,
                                             const std::vector<DomainElement>& elems) {
    std::vector<PrimeDescriptor> out;
    if (ring.kind == RingKind::Kjo) {
        size_t max_window = 0;
        bool any_tail = false;
        std::vector<GroupElement> contents;
        for (const DomainElement& e : elems) {
            require_kind(e, ring.kind, "relevant_primes");
            if (d_is_zero(e)) continue;
            GroupElement c = content_fraction(e.frac());
            max_window = std::max(max_window, c.window());
            if (c.tail > 0) any_tail = true;
            contents.push_back(std::move(c));
        }
        for (size_t i = 0; i < max_window; ++i) {
            bool hit = false;
            for (const GroupElement& c : contents)
                if (c.at(i) > 0) { hit = true; break; }
            if (hit) out.push_back(PrimeDescriptor::coord(i));
        }
        if (any_tail) out.push_back(PrimeDescriptor::tail());
    } else {
        std::vector<bool> used(ring.pool.size(), false);
        for (const DomainElement& e : elems) {
            require_kind(e, ring.kind, "relevant_primes");
            if (d_is_zero(e)) continue;
            Polynomial r = poly_monic(e.poly());
            for (size_t i = 0; i < ring.pool.size(); ++i) {
                while (true) {
                    auto [q, rem] = poly_divmod(r, ring.pool[i]);
                    if (!rem.is_zero()) break;
                    used[i] = true;
                    r = std::move(q);
                }
            }
            if (r.degree() > 0)
                throw UnknownFactorization("element does not factor over the declared "
                                           "irreducibles: " + poly_to_string(e.poly()));
        }
        for (size_t i = 0; i < ring.pool.size(); ++i)
            if (used[i]) out.push_back(PrimeDescriptor::irreducible(ring.pool[i]));
    }
    out.push_back(PrimeDescriptor::zero());
    return out;
}

std::string d_to_string(const DomainElement& a) {
    if (a.kind == RingKind::Kjo) return fr_to_string(a.frac());
    return poly_to_string(a.poly());
}

} // namespace modec
