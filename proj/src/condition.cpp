#include "modec/condition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "modec/errors.hpp"

namespace modec {

using Tag = PrimePairCondition::Tag;

static Cond make(Tag t, DomainElement e, std::vector<Cond> kids) {
    auto n = std::make_shared<PrimePairCondition>();
    n->tag = t;
    n->elem = std::move(e);
    n->kids = std::move(kids);
    return n;
}

Cond c_true() {
    static const Cond t = make(Tag::True, {}, {});
    return t;
}

Cond c_false() {
    static const Cond f = make(Tag::False, {}, {});
    return f;
}

bool cond_is_true(const Cond& c) { return c->tag == Tag::True; }
bool cond_is_false(const Cond& c) { return c->tag == Tag::False; }

static Cond mem(Tag t, DomainElement e) {
    if (d_is_zero(e)) return c_true();
    if (is_unit(e)) return c_false();
    return make(t, std::move(e), {});
}

Cond c_memp(DomainElement e) { return mem(Tag::MemP, std::move(e)); }
Cond c_memq(DomainElement e) { return mem(Tag::MemQ, std::move(e)); }

static Cond nary(Tag t, std::vector<Cond> kids) {
    const bool conj = (t == Tag::And);
    std::vector<Cond> flat;
    for (Cond& k : kids) {
        if (k->tag == t) {
            flat.insert(flat.end(), k->kids.begin(), k->kids.end());
        } else if (conj ? cond_is_false(k) : cond_is_true(k)) {
            return conj ? c_false() : c_true();
        } else if (conj ? cond_is_true(k) : cond_is_false(k)) {
            continue;
        } else {
            flat.push_back(std::move(k));
        }
    }
    if (flat.empty()) return conj ? c_true() : c_false();
    if (flat.size() == 1) return flat[0];
    return make(t, {}, std::move(flat));
}

Cond c_and(std::vector<Cond> kids) { return nary(Tag::And, std::move(kids)); }
Cond c_or(std::vector<Cond> kids) { return nary(Tag::Or, std::move(kids)); }

Cond c_not(Cond k) {
    if (cond_is_true(k)) return c_false();
    if (cond_is_false(k)) return c_true();
    if (k->tag == Tag::Not) return k->kids[0];
    return make(Tag::Not, {}, {std::move(k)});
}

Cond c_and2(Cond a, Cond b) { return c_and({std::move(a), std::move(b)}); }
Cond c_or2(Cond a, Cond b) { return c_or({std::move(a), std::move(b)}); }

bool cond_eval(const Cond& c, const PrimeDescriptor& p, const PrimeDescriptor& q) {
    switch (c->tag) {
        case Tag::True: return true;
        case Tag::False: return false;
        case Tag::MemP: return prime_contains(p, c->elem);
        case Tag::MemQ: return prime_contains(q, c->elem);
        case Tag::Not: return !cond_eval(c->kids[0], p, q);
        case Tag::And:
            for (const Cond& k : c->kids)
                if (!cond_eval(k, p, q)) return false;
            return true;
        case Tag::Or:
            for (const Cond& k : c->kids)
                if (cond_eval(k, p, q)) return true;
            return false;
    }
    return false;
}

static Cond nnf_rec(const Cond& c, bool neg) {
    switch (c->tag) {
        case Tag::True: return neg ? c_false() : c_true();
        case Tag::False: return neg ? c_true() : c_false();
        case Tag::MemP:
        case Tag::MemQ: return neg ? c_not(c) : c;
        case Tag::Not: return nnf_rec(c->kids[0], !neg);
        case Tag::And:
        case Tag::Or: {
            std::vector<Cond> kids;
            kids.reserve(c->kids.size());
            for (const Cond& k : c->kids) kids.push_back(nnf_rec(k, neg));
            bool becomes_and = (c->tag == Tag::And) != neg;
            return becomes_and ? c_and(std::move(kids)) : c_or(std::move(kids));
        }
    }
    return c;
}

Cond cond_nnf(const Cond& c) { return nnf_rec(c, false); }

static void merge_clause(CnfClause& into, const CnfClause& from) {
    auto app = [](std::vector<DomainElement>& dst, const std::vector<DomainElement>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
    };
    app(into.p_pos, from.p_pos);
    app(into.p_neg, from.p_neg);
    app(into.q_pos, from.q_pos);
    app(into.q_neg, from.q_neg);
}

/// Sorts one literal slot by printed form and drops syntactic duplicates.
static void canon_slot(std::vector<DomainElement>& v) {
    if (v.size() < 2) return;
    std::vector<std::pair<std::string, DomainElement>> keyed;
    keyed.reserve(v.size());
    for (DomainElement& e : v) keyed.emplace_back(d_to_string(e), std::move(e));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    v.clear();
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) v.push_back(std::move(keyed[i].second));
    }
}

static bool slots_meet(const std::vector<DomainElement>& pos,
                       const std::vector<DomainElement>& neg) {
    for (const DomainElement& a : pos)
        for (const DomainElement& b : neg)
            if (d_eq(a, b)) return true;
    return false;
}

/// Canonicalizes a clause in place; returns false when the clause is a
/// tautology (the same element occurs positively and negatively on one side)
/// and should be dropped.
static bool canon_clause(CnfClause& c) {
    canon_slot(c.p_pos);
    canon_slot(c.p_neg);
    canon_slot(c.q_pos);
    canon_slot(c.q_neg);
    return !slots_meet(c.p_pos, c.p_neg) && !slots_meet(c.q_pos, c.q_neg);
}

static std::string clause_key(const CnfClause& c) {
    std::string k;
    auto add = [&k](const std::vector<DomainElement>& v) {
        for (const DomainElement& e : v) {
            k += d_to_string(e);
            k += ',';
        }
        k += '|';
    };
    add(c.p_pos);
    add(c.p_neg);
    add(c.q_pos);
    add(c.q_neg);
    return k;
}

/// Drops duplicate clauses, keeping first occurrences in order.
static void dedupe_clauses(std::vector<CnfClause>& cs) {
    std::set<std::string> seen;
    std::vector<CnfClause> out;
    out.reserve(cs.size());
    for (CnfClause& c : cs) {
        if (seen.insert(clause_key(c)).second) out.push_back(std::move(c));
    }
    cs = std::move(out);
}

static std::vector<CnfClause> cnf_rec(const Cond& c,
                                      std::map<const PrimePairCondition*,
                                               std::vector<CnfClause>>& memo);

static std::vector<CnfClause> cnf_node(const Cond& c,
                                       std::map<const PrimePairCondition*,
                                                std::vector<CnfClause>>& memo) {
    auto it = memo.find(c.get());
    if (it != memo.end()) return it->second;
    auto out = cnf_rec(c, memo);
    memo.emplace(c.get(), out);
    return out;
}

static std::vector<CnfClause> cnf_rec(const Cond& c,
                                      std::map<const PrimePairCondition*,
                                               std::vector<CnfClause>>& memo) {
    switch (c->tag) {
        case Tag::True: return {};
        case Tag::False: return {CnfClause{}};
        case Tag::MemP: return {CnfClause{{c->elem}, {}, {}, {}}};
        case Tag::MemQ: return {CnfClause{{}, {}, {c->elem}, {}}};
        case Tag::Not: {
            const Cond& k = c->kids[0];
            if (k->tag == Tag::MemP) return {CnfClause{{}, {k->elem}, {}, {}}};
            if (k->tag == Tag::MemQ) return {CnfClause{{}, {}, {}, {k->elem}}};
            throw PreconditionViolation("normal form conversion expects literals");
        }
        case Tag::And: {
            std::vector<CnfClause> out;
            for (const Cond& k : c->kids) {
                auto part = cnf_node(k, memo);
                for (CnfClause& cl : part) {
                    if (canon_clause(cl)) out.push_back(std::move(cl));
                }
            }
            dedupe_clauses(out);
            return out;
        }
        case Tag::Or: {
            std::vector<CnfClause> acc = {CnfClause{}};
            for (const Cond& k : c->kids) {
                auto part = cnf_node(k, memo);
                std::vector<CnfClause> next;
                next.reserve(acc.size() * part.size());
                for (const CnfClause& a : acc)
                    for (const CnfClause& b : part) {
                        CnfClause m = a;
                        merge_clause(m, b);
                        // A clause holding some literal both positively and
                        // negatively is always true; grafting more literals on
                        // later keeps it true, so it can be dropped now.
                        if (canon_clause(m)) next.push_back(std::move(m));
                    }
                dedupe_clauses(next);
                acc = std::move(next);
            }
            return acc;
        }
    }
    return {};
}

std::vector<CnfClause> cond_cnf(const Cond& c) {
    std::map<const PrimePairCondition*, std::vector<CnfClause>> memo;
    return cnf_node(cond_nnf(c), memo);
}

static void collect(const Cond& c, std::vector<DomainElement>& out) {
    switch (c->tag) {
        case Tag::MemP:
        case Tag::MemQ: out.push_back(c->elem); break;
        default:
            for (const Cond& k : c->kids) collect(k, out);
    }
}

std::vector<DomainElement> cond_elements(const Cond& c) {
    std::vector<DomainElement> out;
    collect(c, out);
    return out;
}

std::string cond_to_string(const Cond& c) {
    switch (c->tag) {
        case Tag::True: return "True";
        case Tag::False: return "False";
        case Tag::MemP: return "MemP(" + d_to_string(c->elem) + ")";
        case Tag::MemQ: return "MemQ(" + d_to_string(c->elem) + ")";
        case Tag::Not: return "!" + cond_to_string(c->kids[0]);
        case Tag::And:
        case Tag::Or: {
            std::ostringstream os;
            os << (c->tag == Tag::And ? "And(" : "Or(");
            for (size_t i = 0; i < c->kids.size(); ++i) {
                if (i) os << ", ";
                os << cond_to_string(c->kids[i]);
            }
            os << ")";
            return os.str();
        }
    }
    return "?";
}

} // namespace modec
