#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modec/domain.hpp"

namespace modec {

struct PrimePairCondition;

/// Immutable, shared condition node. Conditions are evaluated at an ordered
/// pair of primes (p, q) of one ring instance.
using Cond = std::shared_ptr<const PrimePairCondition>;

/**
 * Boolean formula over the two atomic assertions "the element lies in p"
 * (MemP) and "the element lies in q" (MemQ).
 */
struct PrimePairCondition {
    enum class Tag { True, False, MemP, MemQ, And, Or, Not };

    Tag tag;
    DomainElement elem;     // MemP / MemQ payload
    std::vector<Cond> kids; // And / Or children, Not child
};

Cond c_true();
Cond c_false();

/// Atom constructors fold the two prime-independent cases: a zero element
/// lies in every prime (True) and a unit lies in none (False).
Cond c_memp(DomainElement e);
Cond c_memq(DomainElement e);

/// n-ary conjunction; flattens, drops True, returns False on any False child.
Cond c_and(std::vector<Cond> kids);
/// n-ary disjunction; flattens, drops False, returns True on any True child.
Cond c_or(std::vector<Cond> kids);
/// Negation; folds constants and double negation.
Cond c_not(Cond k);

Cond c_and2(Cond a, Cond b);
Cond c_or2(Cond a, Cond b);

bool cond_is_true(const Cond& c);
bool cond_is_false(const Cond& c);

/// Truth value at the prime pair (p, q).
bool cond_eval(const Cond& c, const PrimeDescriptor& p, const PrimeDescriptor& q);

/// Negation normal form: negations pushed onto atoms.
Cond cond_nnf(const Cond& c);

/**
 * One disjunctive clause of a conjunctive normal form: positive and negated
 * membership atoms for each of the two prime slots.
 */
struct CnfClause {
    std::vector<DomainElement> p_pos, p_neg, q_pos, q_neg;
};

/// Conjunctive normal form by distribution. An empty list means True; a
/// clause with no literals is unsatisfiable.
std::vector<CnfClause> cond_cnf(const Cond& c);

/// Every element mentioned by a membership atom, in traversal order.
std::vector<DomainElement> cond_elements(const Cond& c);

std::string cond_to_string(const Cond& c);

} // namespace modec
