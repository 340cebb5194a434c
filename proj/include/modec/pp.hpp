#pragma once

#include <array>
#include <string>
#include <vector>

#include "modec/condition.hpp"

namespace modec {

/**
 * Atom of the positive-primitive fragment the tool accepts:
 *   Div(a)        "a | x"
 *   Ann(b)        "x·b = 0"
 *   DualPair(a,b) "exists y (x = y·a and y·b = 0)"
 *   DivMul(c,d)   "c | x·d"
 * "x = x" is Div of a unit, "x = 0" is Div of zero.
 */
struct PPAtom {
    enum class Kind { Div, Ann, DualPair, DivMul } kind;
    DomainElement a; // Div / Ann payload; first slot of the binary atoms
    DomainElement b; // second slot of DualPair / DivMul

    bool operator==(const PPAtom& o) const;
};

PPAtom atom_div(DomainElement a);
PPAtom atom_ann(DomainElement b);
PPAtom atom_dual(DomainElement a, DomainElement b);
PPAtom atom_divmul(DomainElement c, DomainElement d);
PPAtom atom_top(RingKind k);  // x = x
PPAtom atom_zero(RingKind k); // x = 0

bool atom_is_top(const PPAtom& at);  // after simplification: Div(unit)
bool atom_is_zero(const PPAtom& at); // after simplification: Div(0)

/// Canonicalizes the trivial cases: Div(unit) and Ann(0) become "x = x"
/// (stored as Div(1)); Div(0) and Ann(unit) become "x = 0" (stored as Div(0)).
PPAtom simplify_atom(const PPAtom& at);

/// Conjunction of atoms (a formula in the numerator slot).
struct Conjunction {
    std::vector<PPAtom> atoms; // nonempty
};

/// Sum of atoms (a formula in the denominator slot).
struct Sum {
    std::vector<PPAtom> atoms; // nonempty
};

/// One summand over one conjunct: the shape the rewriting toolkit consumes.
struct SimplePair {
    Conjunction phi;
    Sum psi;
};

/// Basic open set (phi / psi): phi a sum of conjunctions, psi a conjunction
/// of sums.
struct OpenPair {
    std::vector<Conjunction> phi; // nonempty
    std::vector<Sum> psi;         // nonempty
};

/// Drops "x = x" atoms, collapses on "x = 0"; empty result becomes the
/// single atom "x = x".
Conjunction simplify_conjunction(Conjunction c);
/// Drops "x = 0" atoms, collapses on "x = x"; empty result becomes "x = 0".
Sum simplify_sum(Sum s);

/**
 * Splits (sum of phis / conjunction of psis) into the cross pairs
 * (phi_i / psi_j); the union of the outputs is the input, and the output
 * order is lexicographic in the input positions.
 */
std::vector<SimplePair> dagger_decompose(const OpenPair& p);

/// Splits (Div a ∧ Ann b / Div c + Ann d) into its four atomic factors
/// [(a|x / c|x), (a|x / xd=0), (xb=0 / c|x), (xb=0 / xd=0)], whose
/// intersection is the input.
std::array<SimplePair, 4> cor42_split(const DomainElement& a, const DomainElement& b,
                                      const DomainElement& c, const DomainElement& d);

/**
 * Interval-style open set W(lambda, h, g) = (x·lambda·h = 0 / g|x + x·lambda = 0).
 * lambda = 0 denotes the empty set; lambda = 1 with h = g = 0 the whole
 * nonzero part of the spectrum.
 */
struct WSet {
    DomainElement lambda, h, g;
};

WSet wset_prefix(RingKind k, DomainElement h, DomainElement g); // W(1, h, g)
WSet wset_suffix(DomainElement lambda);                         // W(lambda, 0, 0)
WSet wset_whole(RingKind k);                                    // W(1, 0, 0)

bool wset_is_prefix(const WSet& w); // lambda = 1
bool wset_is_suffix(const WSet& w); // h = g = 0

/// Reads the W-set back as the pair of its definition (before simplification
/// of trivial atoms).
SimplePair wset_unfold(const WSet& w);

/// A W-set together with a prime-pair condition gating where it applies.
struct WProblemTerm {
    WSet main;
    Cond constraint;
};

/// Rewrite of (a|x / c|x): a witness triple with a·alpha = c·r and
/// c·(alpha − 1) = a·s turns the pair into the suffix set W(a,0,0) gated by
/// membership of s and alpha in the second prime.
struct DivDivRewrite {
    DomainElement alpha, s;
    Cond mem_s, mem_alpha; // MemQ(s), MemQ(alpha)
    WSet main;             // W(a, 0, 0)
};
DivDivRewrite rw_div_div(const DomainElement& a, const DomainElement& c);

/// Rewrite of (xb=0 / xd=0): a witness triple with d·alpha = b·r and
/// b·(1 − alpha) = d·s turns the pair into W(d,0,0) gated by membership of
/// s and alpha in the first prime.
struct AnnAnnRewrite {
    DomainElement alpha, s;
    Cond mem_s, mem_alpha; // MemP(s), MemP(alpha)
    WSet main;             // W(d, 0, 0)
};
AnnAnnRewrite rw_ann_ann(const DomainElement& b, const DomainElement& d);

/// Rewrite of (a|x / xd=0) into the suffix set W(a·d, 0, 0).
WSet rw_div_ann(const DomainElement& a, const DomainElement& d);

/**
 * Eliminates every DualPair atom of the numerator and every DivMul atom of
 * the denominator of a simple pair, collecting one disjunctive
 * non-invertibility constraint per eliminated atom.
 */
struct DualRewrite {
    SimplePair pair;
    std::vector<Cond> constraints;
};
DualRewrite rw_dual_pair(const SimplePair& p);

/**
 * Maps an atomic pair (one numerator atom over one denominator atom, both
 * already simplified) to a W-set term:
 *   (x=x / xd=0)  -> W(d,0,0)
 *   (xb=0 / c|x)  -> W(1,b,c)
 *   (xa=0 / x=0)  -> whole set gated by MemP(a)
 *   (x=x / c|x)   -> whole set gated by MemQ(c)
 *   (x=x / x=0)   -> whole set
 * Everything else throws UnsupportedShape.
 */
WProblemTerm to_wset(const PPAtom& phi, const PPAtom& psi);

/**
 * Emptiness of (a|x ∧ xb=0 / c|x + xd=0) given the normalization c = g·a,
 * b = d·h (PreconditionViolation if a∤c or d∤b): empty exactly when a = 0,
 * d = 0, or gcd(g, h) is a unit.
 */
bool pair_empty_criterion(const DomainElement& a, const DomainElement& b,
                          const DomainElement& c, const DomainElement& d);

std::string atom_to_string(const PPAtom& at);
std::string conjunction_to_string(const Conjunction& c);
std::string sum_to_string(const Sum& s);
std::string simple_pair_to_string(const SimplePair& p);
std::string open_pair_to_string(const OpenPair& p);
std::string wset_to_string(const WSet& w);

} // namespace modec
