#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "modec/group_ring.hpp"

namespace modec {

/// Dense polynomial over the rationals; no trailing zero coefficients.
struct Polynomial {
    std::vector<Rational> c; // c[i] is the coefficient of x^i

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    const Rational& lead() const { return c.back(); }

    bool operator==(const Polynomial& o) const { return c == o.c; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

Polynomial poly_make(std::vector<Rational> coeffs); // strips trailing zeros
Polynomial poly_zero();
Polynomial poly_one();
Polynomial poly_x();
Polynomial poly_const(const Rational& q);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Euclidean division; returns {quotient, remainder} with deg r < deg b.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

Polynomial poly_monic(const Polynomial& a); // zero stays zero
Polynomial poly_derivative(const Polynomial& a);
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b); // monic, gcd(0,0)=0

std::string poly_to_string(const Polynomial& a);

enum class RingKind { Kjo, RationalPoly };

/**
 * Descriptor of one of the two supported ring instances, with the metadata
 * the decision procedures rely on. RationalPoly carries a declared pool of
 * monic irreducibles; prime enumeration only sees elements that factor over it.
 */
struct DomainRing {
    RingKind kind;
    bool infinite_residue_fields = true;
    bool krull_dim_one = true;
    std::vector<Polynomial> pool; // RationalPoly only

    static DomainRing kjo();
    static DomainRing rational_poly();

    std::string name() const { return kind == RingKind::Kjo ? "kjo" : "qx"; }
};

/// An element of one of the two rings; the payload matches the kind.
struct DomainElement {
    RingKind kind;
    std::variant<FractionElement, Polynomial> value;

    const FractionElement& frac() const { return std::get<FractionElement>(value); }
    const Polynomial& poly() const { return std::get<Polynomial>(value); }
};

/// Wraps a fraction as a ring element; throws NegativeElement unless it is
/// zero or has nonnegative content.
DomainElement kjo_elem(FractionElement f);
DomainElement kjo_monomial(const Rational& q, const GroupElement& g);
DomainElement qx_elem(Polynomial p);

DomainElement d_zero(RingKind k);
DomainElement d_one(RingKind k);
DomainElement d_const(RingKind k, const Rational& q);

bool d_is_zero(const DomainElement& a);
bool d_eq(const DomainElement& a, const DomainElement& b);
bool is_unit(const DomainElement& a);

DomainElement d_add(const DomainElement& a, const DomainElement& b);
DomainElement d_neg(const DomainElement& a);
DomainElement d_sub(const DomainElement& a, const DomainElement& b);
DomainElement d_mul(const DomainElement& a, const DomainElement& b);
DomainElement d_pow(const DomainElement& a, unsigned long n);

/// Content of a nonzero Kjo element; InstanceMismatch on RationalPoly.
GroupElement d_content(const DomainElement& a);

/// Whether a divides b. divides(a, 0) holds for all a; divides(0, b) iff b = 0.
bool divides(const DomainElement& a, const DomainElement& b);

/// b / a, requiring divides(a, b); throws NotDivisible otherwise.
DomainElement div_exact(const DomainElement& b, const DomainElement& a);

/// The canonical associate: the content monomial (Kjo) or the monic scaling
/// (RationalPoly); zero maps to zero.
DomainElement canonical_associate(const DomainElement& a);

DomainElement gcd_canon(const DomainElement& a, const DomainElement& b);
DomainElement lcm_canon(const DomainElement& a, const DomainElement& b);

struct XgcdResult {
    DomainElement g, u, v; // u*a + v*b = g, g the canonical gcd
};

/// Extended gcd; throws BothZero on (0, 0). The returned identity is verified.
XgcdResult xgcd(const DomainElement& a, const DomainElement& b);

/**
 * Witnesses alpha, r, s with a*alpha = b*r and b*(alpha - 1) = a*s.
 * Both identities are re-checked exactly; IdentityViolation on failure.
 */
struct TuganbaevTriple {
    DomainElement alpha, r, s;
};

TuganbaevTriple tuganbaev(const DomainElement& a, const DomainElement& b);

/// a / gcd(a,b) with the conventions gamma(a,0) = 1, gamma(0,b) = 0 for b != 0.
DomainElement gamma(const DomainElement& a, const DomainElement& b);

/// Membership of a in the radical of the principal ideal generated by b.
bool rad_member(const DomainRing& ring, const DomainElement& a, const DomainElement& b);

/// Independent check via bounded scaling of contents; Kjo only.
bool rad_member_scaling(const DomainRing& ring, const DomainElement& a, const DomainElement& b);

/// Independent check via enumeration of the primes relevant to {a, b}.
bool rad_member_primes(const DomainRing& ring, const DomainElement& a, const DomainElement& b);

/**
 * A prime of the instance: the zero ideal, a coordinate prime or the tail
 * prime (Kjo), or the ideal of a monic irreducible (RationalPoly).
 */
struct PrimeDescriptor {
    enum class Kind { Zero, Coord, Tail, Irreducible } kind;
    std::size_t index = 0; // Coord only
    Polynomial p;          // Irreducible only

    static PrimeDescriptor zero() { return {Kind::Zero, 0, {}}; }
    static PrimeDescriptor coord(std::size_t i) { return {Kind::Coord, i, {}}; }
    static PrimeDescriptor tail() { return {Kind::Tail, 0, {}}; }
    static PrimeDescriptor irreducible(Polynomial q) { return {Kind::Irreducible, 0, std::move(q)}; }

    bool is_zero_ideal() const { return kind == Kind::Zero; }
    bool operator==(const PrimeDescriptor& o) const {
        return kind == o.kind && index == o.index && p == o.p;
    }
};

std::string prime_to_string(const PrimeDescriptor& p);

/// Whether the element lies in the prime. Zero lies in every prime.
bool prime_contains(const PrimeDescriptor& p, const DomainElement& a);

/**
 * Deterministically ordered descriptors of every prime that can distinguish
 * the listed elements: all nonzero primes containing one of them (coordinate
 * primes up to the largest window, the tail prime, pool irreducibles), with
 * the zero ideal appended last.
 */
std::vector<PrimeDescriptor> relevant_primes(const DomainRing& ring,
                                             const std::vector<DomainElement>& elems);

std::string d_to_string(const DomainElement& a);

} // namespace modec
