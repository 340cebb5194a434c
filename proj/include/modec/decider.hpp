#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modec/pp.hpp"
#include "modec/prime_logic.hpp"

namespace modec {

/**
 * One union member on the right-hand side of a W-inclusion problem: an
 * intersection of interval sets of a single type (all W(1,h,g) or all
 * W(mu,0,0)) gated by a prime-pair condition. Mixed-type intersections are
 * middle intervals and are rejected during normalization.
 */
struct RhsTerm {
    std::vector<WSet> prefixes; // each W(1, h_k, g_k)
    std::vector<WSet> suffixes; // each W(mu_k, 0, 0)
    Cond constraint;
};

/// Decision unit: lhsMain ∩ lhsConstraint ⊆ union of the terms.
struct WProblem {
    WSet lhs_main;
    Cond lhs_constraint;
    std::vector<RhsTerm> rhs_terms;
};

/// One replayable reduction step: a rule name, printed inputs, printed outputs.
struct TraceStep {
    std::string rule;
    std::vector<std::string> in;
    std::vector<std::string> out;
};

struct Verdict {
    bool included = false;
    std::vector<TraceStep> trace;
};

/// Outcome of mapping one atomic pair (phi-atom over psi-atom) to a set form.
struct AtomicShape {
    enum class Kind { Empty, Whole, ConstraintOnly, Prefix, Suffix } kind;
    WSet w;     // Prefix / Suffix payload
    Cond extra; // membership conditions collected by the rewrites
};

/// Classifies an atomic pair, applying the divisibility/annihilator rewrites
/// as needed. Throws UnsupportedShape for atoms outside the accepted
/// numerator/denominator normal forms.
AtomicShape classify_atomic(const PPAtom& phi, const PPAtom& psi,
                            std::vector<TraceStep>* trace = nullptr);

/// Interval form of an atomic pair used on the left-hand side; nullopt when
/// the pair is empty (inclusion trivially holds for it).
std::optional<std::pair<WSet, Cond>> lhs_form(const SimplePair& atomic,
                                              std::vector<TraceStep>* trace = nullptr);

/// Collapses a right-hand simple pair into one union term; nullopt when the
/// pair is provably empty. Throws UnsupportedShape on middle intervals.
std::optional<RhsTerm> rhs_term_of(const SimplePair& sp,
                                   std::vector<TraceStep>* trace = nullptr);

/// One left-hand branch of the conjunction/sum splitting: an atomic pair
/// plus the correction pairs that join the right-hand side on this branch.
struct LhsSplit {
    SimplePair lhs; // one numerator atom over one denominator atom
    std::vector<SimplePair> extras;
};

/// Splits a (conjunction / sum) pair into its atomic branches with
/// per-branch correction pairs; the inclusion holds iff it holds on every
/// branch with the corrections added to the union.
std::vector<LhsSplit> split_lhs(const SimplePair& p);

/**
 * Full normalization of "lhs ⊆ union(rhs)" into W-problems: cross-splits
 * both sides, eliminates DualPair/DivMul atoms, splits the left conjunction
 * and sum with correction terms, and classifies everything into interval
 * sets and conditions. The inclusion holds iff every returned problem does.
 */
std::vector<WProblem> normalize_problem(const OpenPair& lhs,
                                        const std::vector<OpenPair>& rhs,
                                        std::vector<TraceStep>* trace = nullptr);

/**
 * The covering condition of one W-problem as a prime-pair condition: the
 * problem's inclusion holds iff the condition holds at every compatible
 * pair. Requires lhs_main.lambda != 0.
 */
Cond build_condition(const WProblem& p);

/// Decides one W-problem (lambda = 0 is trivially included).
bool decide_w(const DomainRing& ring, const WProblem& p,
              std::vector<TraceStep>* trace = nullptr);

/// Top-level decision of "lhs ⊆ union(rhs)" with a replayable trace.
Verdict decide_inclusion(const DomainRing& ring, const OpenPair& lhs,
                         const std::vector<OpenPair>& rhs);

/// Decides (xb=0 / d|x) ⊆ (xa=0 / x=0) ∪ (x=x / c|x) through the full
/// pipeline; equivalent to the double-radical relation on (a, b, c, d).
bool check_prop64(const DomainRing& ring, const DomainElement& a, const DomainElement& b,
                  const DomainElement& c, const DomainElement& d);
Verdict check_prop64_verdict(const DomainRing& ring, const DomainElement& a,
                             const DomainElement& b, const DomainElement& c,
                             const DomainElement& d);

/// Decides (⋀ xb_i=0 / x=0) ⊆ (xa=0 / x=0); equivalent to membership of a
/// in the radical of the ideal generated by the b_i.
bool check_lemma73(const DomainRing& ring, const DomainElement& a,
                   const std::vector<DomainElement>& bs);
Verdict check_lemma73_verdict(const DomainRing& ring, const DomainElement& a,
                              const std::vector<DomainElement>& bs);

/// Whether the basic open set is nonempty (not included in the empty union).
bool nonempty(const DomainRing& ring, const OpenPair& p);

std::string rhs_term_to_string(const RhsTerm& t);
std::string wproblem_to_string(const WProblem& p);
std::string lhs_split_to_string(const LhsSplit& s);

} // namespace modec
