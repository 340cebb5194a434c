#include "modec/decider.hpp"

#include <map>
#include <utility>

#include "modec/errors.hpp"

namespace modec {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

void emit(std::vector<TraceStep>* trace, std::string rule, std::vector<std::string> in,
          std::vector<std::string> out) {
    if (trace != nullptr) {
        trace->push_back(TraceStep{std::move(rule), std::move(in), std::move(out)});
    }
}

SimplePair atomic_pair(const PPAtom& phi, const PPAtom& psi) {
    return SimplePair{Conjunction{{phi}}, Sum{{psi}}};
}

/// True when the pair carries an atom the two-sided elimination rewrites.
bool has_rewritable_atoms(const SimplePair& p) {
    for (const PPAtom& at : p.phi.atoms) {
        if (at.kind == PPAtom::Kind::DualPair) {
            return true;
        }
    }
    for (const PPAtom& at : p.psi.atoms) {
        if (at.kind == PPAtom::Kind::DivMul) {
            return true;
        }
    }
    return false;
}

/// Replaces every one-sided membership by the corresponding two-sided one,
/// specializing a condition to pairs that share a common prime.
Cond cond_double(const Cond& c) {
    using Tag = PrimePairCondition::Tag;
    switch (c->tag) {
    case Tag::True:
    case Tag::False:
        return c;
    case Tag::MemP:
    case Tag::MemQ:
        return c_and2(c_memp(c->elem), c_memq(c->elem));
    case Tag::Not:
        return c_not(cond_double(c->kids[0]));
    case Tag::And: {
        std::vector<Cond> kids;
        kids.reserve(c->kids.size());
        for (const Cond& k : c->kids) {
            kids.push_back(cond_double(k));
        }
        return c_and(std::move(kids));
    }
    case Tag::Or: {
        std::vector<Cond> kids;
        kids.reserve(c->kids.size());
        for (const Cond& k : c->kids) {
            kids.push_back(cond_double(k));
        }
        return c_or(std::move(kids));
    }
    }
    throw PreconditionViolation("unreachable condition tag");
}

} // namespace

AtomicShape classify_atomic(const PPAtom& phi_raw, const PPAtom& psi_raw,
                            std::vector<TraceStep>* trace) {
    PPAtom phi = simplify_atom(phi_raw);
    PPAtom psi = simplify_atom(psi_raw);
    if (phi.kind == PPAtom::Kind::DualPair || phi.kind == PPAtom::Kind::DivMul ||
        psi.kind == PPAtom::Kind::DualPair || psi.kind == PPAtom::Kind::DivMul) {
        throw UnsupportedShape("pair (" + atom_to_string(phi_raw) + " / " +
                               atom_to_string(psi_raw) +
                               ") is not in divisibility/annihilator normal form");
    }
    RingKind kind = phi.a.kind;
    // The empty set: a "x = 0" numerator or "x = x" denominator.
    if (atom_is_zero(phi) || atom_is_top(psi)) {
        return AtomicShape{AtomicShape::Kind::Empty, wset_whole(kind), c_true()};
    }

    if (atom_is_top(phi)) {
        if (atom_is_zero(psi)) {
            return AtomicShape{AtomicShape::Kind::Whole, wset_whole(kind), c_true()};
        }
        if (psi.kind == PPAtom::Kind::Div) {
            // (x = x / c|x): nonempty exactly where c lies in the second prime.
            return AtomicShape{AtomicShape::Kind::ConstraintOnly, wset_whole(kind),
                               c_memq(psi.a)};
        }
        // (x = x / xd=0) is the tail interval starting at d.
        return AtomicShape{AtomicShape::Kind::Suffix, wset_suffix(psi.a), c_true()};
    }

    if (phi.kind == PPAtom::Kind::Ann) {
        if (atom_is_zero(psi)) {
            // (xb=0 / x=0): nonempty exactly where b lies in the first prime.
            return AtomicShape{AtomicShape::Kind::ConstraintOnly, wset_whole(kind),
                               c_memp(phi.a)};
        }
        if (psi.kind == PPAtom::Kind::Div) {
            return AtomicShape{AtomicShape::Kind::Prefix, wset_prefix(kind, phi.a, psi.a),
                               c_true()};
        }
        AnnAnnRewrite rr = rw_ann_ann(phi.a, psi.a);
        Cond extra = c_and2(rr.mem_s, rr.mem_alpha);
        emit(trace, "ann-ann", {d_to_string(phi.a), d_to_string(psi.a)},
             {d_to_string(rr.alpha), d_to_string(rr.s), wset_to_string(rr.main),
              cond_to_string(extra)});
        return AtomicShape{AtomicShape::Kind::Suffix, rr.main, extra};
    }

    // phi is a nontrivial divisibility atom.
    if (atom_is_zero(psi)) {
        WSet w = rw_div_ann(phi.a, d_one(kind));
        emit(trace, "div-ann", {d_to_string(phi.a), d_to_string(d_one(kind))},
             {wset_to_string(w)});
        return AtomicShape{AtomicShape::Kind::Suffix, w, c_true()};
    }
    if (psi.kind == PPAtom::Kind::Div) {
        DivDivRewrite rr = rw_div_div(phi.a, psi.a);
        Cond extra = c_and2(rr.mem_s, rr.mem_alpha);
        emit(trace, "div-div", {d_to_string(phi.a), d_to_string(psi.a)},
             {d_to_string(rr.alpha), d_to_string(rr.s), wset_to_string(rr.main),
              cond_to_string(extra)});
        return AtomicShape{AtomicShape::Kind::Suffix, rr.main, extra};
    }
    WSet w = rw_div_ann(phi.a, psi.a);
    emit(trace, "div-ann", {d_to_string(phi.a), d_to_string(psi.a)}, {wset_to_string(w)});
    return AtomicShape{AtomicShape::Kind::Suffix, w, c_true()};
}

std::optional<std::pair<WSet, Cond>> lhs_form(const SimplePair& atomic,
                                              std::vector<TraceStep>* trace) {
    Conjunction conj = simplify_conjunction(atomic.phi);
    Sum sum = simplify_sum(atomic.psi);
    if (conj.atoms.size() != 1 || sum.atoms.size() != 1) {
        throw PreconditionViolation("interval form expects one atom on each side");
    }
    AtomicShape sh = classify_atomic(conj.atoms[0], sum.atoms[0], trace);
    std::optional<std::pair<WSet, Cond>> res;
    switch (sh.kind) {
    case AtomicShape::Kind::Empty:
        res = std::nullopt;
        break;
    case AtomicShape::Kind::Whole:
        res = std::make_pair(wset_whole(conj.atoms[0].a.kind), c_true());
        break;
    case AtomicShape::Kind::ConstraintOnly:
        res = std::make_pair(wset_whole(conj.atoms[0].a.kind), sh.extra);
        break;
    case AtomicShape::Kind::Prefix:
    case AtomicShape::Kind::Suffix:
        res = std::make_pair(sh.w, sh.extra);
        break;
    }
    if (res) {
        emit(trace, "lhs-form", {simple_pair_to_string(atomic)},
             {wset_to_string(res->first), cond_to_string(res->second)});
    } else {
        emit(trace, "lhs-form", {simple_pair_to_string(atomic)}, {"empty"});
    }
    return res;
}

std::optional<RhsTerm> rhs_term_of(const SimplePair& sp, std::vector<TraceStep>* trace) {
    DualRewrite dr = rw_dual_pair(sp);
    if (has_rewritable_atoms(sp)) {
        std::vector<std::string> out{simple_pair_to_string(dr.pair)};
        for (const Cond& c : dr.constraints) {
            out.push_back(cond_to_string(c));
        }
        emit(trace, "dual-elim", {simple_pair_to_string(sp)}, std::move(out));
    }
    Conjunction conj = simplify_conjunction(dr.pair.phi);
    Sum sum = simplify_sum(dr.pair.psi);

    RhsTerm t;
    std::vector<Cond> parts = dr.constraints;
    bool empty = false;
    for (const PPAtom& A : conj.atoms) {
        for (const PPAtom& B : sum.atoms) {
            AtomicShape sh = classify_atomic(A, B, trace);
            switch (sh.kind) {
            case AtomicShape::Kind::Empty:
                empty = true;
                break;
            case AtomicShape::Kind::Whole:
                break;
            case AtomicShape::Kind::ConstraintOnly:
                parts.push_back(sh.extra);
                break;
            case AtomicShape::Kind::Prefix:
                t.prefixes.push_back(sh.w);
                parts.push_back(sh.extra);
                break;
            case AtomicShape::Kind::Suffix:
                t.suffixes.push_back(sh.w);
                parts.push_back(sh.extra);
                break;
            }
            if (empty) {
                break;
            }
        }
        if (empty) {
            break;
        }
    }
    if (empty) {
        emit(trace, "term-form", {simple_pair_to_string(sp)}, {"empty"});
        return std::nullopt;
    }
    if (!t.prefixes.empty() && !t.suffixes.empty()) {
        throw UnsupportedShape("term (" + simple_pair_to_string(sp) +
                               ") combines a bounded-start and a bounded-end interval; such "
                               "middle intervals have no supported set form");
    }
    t.constraint = c_and(std::move(parts));
    emit(trace, "term-form", {simple_pair_to_string(sp)}, {rhs_term_to_string(t)});
    return t;
}

std::vector<LhsSplit> split_lhs(const SimplePair& p) {
    Conjunction conj = simplify_conjunction(p.phi);
    Sum sum = simplify_sum(p.psi);
    std::vector<LhsSplit> out;
    for (std::size_t i = 0; i < conj.atoms.size(); ++i) {
        for (std::size_t j = 0; j < sum.atoms.size(); ++j) {
            LhsSplit s;
            s.lhs = atomic_pair(conj.atoms[i], sum.atoms[j]);
            for (std::size_t k = 0; k < conj.atoms.size(); ++k) {
                if (k != i) {
                    s.extras.push_back(atomic_pair(conj.atoms[i], conj.atoms[k]));
                }
            }
            for (std::size_t k = 0; k < sum.atoms.size(); ++k) {
                if (k != j) {
                    s.extras.push_back(atomic_pair(sum.atoms[k], sum.atoms[j]));
                }
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<WProblem> normalize_problem(const OpenPair& lhs, const std::vector<OpenPair>& rhs,
                                        std::vector<TraceStep>* trace) {
    std::vector<SimplePair> lhs_simple = dagger_decompose(lhs);
    {
        std::vector<std::string> out;
        out.reserve(lhs_simple.size());
        for (const SimplePair& sp : lhs_simple) {
            out.push_back(simple_pair_to_string(sp));
        }
        emit(trace, "cross-split", {open_pair_to_string(lhs)}, std::move(out));
    }

    std::vector<RhsTerm> base;
    for (const OpenPair& r : rhs) {
        std::vector<SimplePair> parts = dagger_decompose(r);
        std::vector<std::string> out;
        out.reserve(parts.size());
        for (const SimplePair& sp : parts) {
            out.push_back(simple_pair_to_string(sp));
        }
        emit(trace, "cross-split", {open_pair_to_string(r)}, std::move(out));
        for (const SimplePair& sp : parts) {
            if (std::optional<RhsTerm> t = rhs_term_of(sp, trace)) {
                base.push_back(std::move(*t));
            }
        }
    }

    std::vector<WProblem> problems;
    for (const SimplePair& L : lhs_simple) {
        DualRewrite dr = rw_dual_pair(L);
        if (has_rewritable_atoms(L)) {
            std::vector<std::string> out{simple_pair_to_string(dr.pair)};
            for (const Cond& c : dr.constraints) {
                out.push_back(cond_to_string(c));
            }
            emit(trace, "dual-elim", {simple_pair_to_string(L)}, std::move(out));
        }
        Cond base_cond = c_and(dr.constraints);
        SimplePair flat{simplify_conjunction(dr.pair.phi), simplify_sum(dr.pair.psi)};
        std::vector<LhsSplit> splits = split_lhs(flat);
        {
            std::vector<std::string> out;
            out.reserve(splits.size());
            for (const LhsSplit& s : splits) {
                out.push_back(lhs_split_to_string(s));
            }
            emit(trace, "lhs-split", {simple_pair_to_string(flat)}, std::move(out));
        }
        for (const LhsSplit& s : splits) {
            std::optional<std::pair<WSet, Cond>> lf = lhs_form(s.lhs, trace);
            if (!lf) {
                continue; // empty branch: trivially included
            }
            WProblem p;
            p.lhs_main = lf->first;
            p.lhs_constraint = c_and2(base_cond, lf->second);
            p.rhs_terms = base;
            for (const SimplePair& e : s.extras) {
                if (std::optional<RhsTerm> t = rhs_term_of(e, trace)) {
                    p.rhs_terms.push_back(std::move(*t));
                }
            }
            problems.push_back(std::move(p));
        }
    }
    return problems;
}

Cond build_condition(const WProblem& p) {
    if (d_is_zero(p.lhs_main.lambda)) {
        throw PreconditionViolation("covering condition requires a nonzero interval start");
    }
    struct PrefTerm {
        std::vector<std::pair<DomainElement, DomainElement>> hg;
        Cond c;
    };
    struct SuffTerm {
        std::vector<DomainElement> mus;
        Cond c;
    };
    std::vector<PrefTerm> prefs;
    std::vector<SuffTerm> suffs;
    for (const RhsTerm& t : p.rhs_terms) {
        if (!t.prefixes.empty() && !t.suffixes.empty()) {
            throw PreconditionViolation("mixed-interval union term");
        }
        bool empty_term = false;
        for (const WSet& w : t.suffixes) {
            if (!wset_is_suffix(w)) {
                throw PreconditionViolation("suffix slot holds a non-suffix set");
            }
            if (d_is_zero(w.lambda)) {
                empty_term = true; // W(0,0,0) is empty, and so is the whole term
            }
        }
        if (empty_term) {
            continue;
        }
        if (!t.suffixes.empty()) {
            SuffTerm s{{}, t.constraint};
            for (const WSet& w : t.suffixes) {
                s.mus.push_back(w.lambda);
            }
            suffs.push_back(std::move(s));
        } else {
            for (const WSet& w : t.prefixes) {
                if (!wset_is_prefix(w)) {
                    throw PreconditionViolation("prefix slot holds a non-prefix set");
                }
            }
            PrefTerm q{{}, t.constraint};
            for (const WSet& w : t.prefixes) {
                q.hg.emplace_back(w.h, w.g);
            }
            prefs.push_back(std::move(q));
        }
    }

    const WSet& L = p.lhs_main;
    DomainElement top = d_mul(L.lambda, d_mul(L.g, L.h));

    auto formula = [&](bool strict) -> Cond {
        Cond hyp = c_and({p.lhs_constraint, c_memp(L.h), c_memq(L.g)});
        std::vector<Cond> cover;
        // A tail term swallows the interval iff its start divides ours.
        for (const SuffTerm& s : suffs) {
            std::vector<Cond> parts{s.c};
            for (const DomainElement& mu : s.mus) {
                parts.push_back(leq_pq_condition(mu, L.lambda));
            }
            cover.push_back(c_and(std::move(parts)));
        }
        // A head term swallows the interval iff it is live and its end bounds ours.
        for (const PrefTerm& q : prefs) {
            std::vector<Cond> parts{q.c};
            for (const auto& [h, g] : q.hg) {
                parts.push_back(c_memp(h));
                parts.push_back(c_memq(g));
                parts.push_back(leq_pq_condition(top, d_mul(g, h)));
            }
            cover.push_back(c_and(std::move(parts)));
        }
        // A live head term and a tail term cover everything iff they meet.
        for (const PrefTerm& q : prefs) {
            for (const SuffTerm& s : suffs) {
                std::vector<Cond> parts{q.c, s.c};
                for (const auto& [h, g] : q.hg) {
                    parts.push_back(c_memp(h));
                    parts.push_back(c_memq(g));
                }
                for (const auto& [h, g] : q.hg) {
                    for (const DomainElement& mu : s.mus) {
                        parts.push_back(strict ? lt_pq_condition(mu, d_mul(g, h))
                                               : leq_pq_condition(mu, d_mul(g, h)));
                    }
                }
                cover.push_back(c_and(std::move(parts)));
            }
        }
        return c_or2(c_not(hyp), c_or(std::move(cover)));
    };

    return c_and2(formula(false), cond_double(formula(true)));
}

bool decide_w(const DomainRing& ring, const WProblem& p, std::vector<TraceStep>* trace) {
    if (d_is_zero(p.lhs_main.lambda)) {
        emit(trace, "empty-lhs", {d_to_string(p.lhs_main.lambda)}, {"true"});
        return true;
    }
    Cond delta = build_condition(p);
    bool all = true;
    std::vector<std::string> clause_results;
    std::map<std::string, bool> dpr_cache;
    for (const CnfClause& cl : cond_cnf(delta)) {
        DPRTuple t = clause_to_dpr(ring.kind, cl);
        std::string key = d_to_string(t.a) + "|" + d_to_string(t.b) + "|" +
                          d_to_string(t.c) + "|" + d_to_string(t.d);
        auto it = dpr_cache.find(key);
        bool r = (it != dpr_cache.end()) ? it->second : dpr(ring, t);
        if (it == dpr_cache.end()) dpr_cache.emplace(std::move(key), r);
        emit(trace, "clause-dpr",
             {d_to_string(t.a), d_to_string(t.b), d_to_string(t.c), d_to_string(t.d)},
             {bool_str(r)});
        clause_results.push_back(bool_str(r));
        all = all && r;
    }
    emit(trace, "decide-w", std::move(clause_results), {bool_str(all)});
    return all;
}

Verdict decide_inclusion(const DomainRing& ring, const OpenPair& lhs,
                         const std::vector<OpenPair>& rhs) {
    Verdict v;
    std::vector<WProblem> problems = normalize_problem(lhs, rhs, &v.trace);
    std::vector<std::string> sub;
    sub.reserve(problems.size());
    bool all = true;
    for (const WProblem& p : problems) {
        bool r = decide_w(ring, p, &v.trace);
        sub.push_back(bool_str(r));
        all = all && r;
    }
    v.trace.push_back(TraceStep{"verdict", std::move(sub), {bool_str(all)}});
    v.included = all;
    return v;
}

Verdict check_prop64_verdict(const DomainRing& ring, const DomainElement& a,
                             const DomainElement& b, const DomainElement& c,
                             const DomainElement& d) {
    RingKind k = ring.kind;
    OpenPair lhs{{Conjunction{{atom_ann(b)}}}, {Sum{{atom_div(d)}}}};
    OpenPair r1{{Conjunction{{atom_ann(a)}}}, {Sum{{atom_zero(k)}}}};
    OpenPair r2{{Conjunction{{atom_top(k)}}}, {Sum{{atom_div(c)}}}};
    return decide_inclusion(ring, lhs, {r1, r2});
}

bool check_prop64(const DomainRing& ring, const DomainElement& a, const DomainElement& b,
                  const DomainElement& c, const DomainElement& d) {
    return check_prop64_verdict(ring, a, b, c, d).included;
}

Verdict check_lemma73_verdict(const DomainRing& ring, const DomainElement& a,
                              const std::vector<DomainElement>& bs) {
    if (bs.empty()) {
        throw PreconditionViolation("annihilator list must be nonempty");
    }
    Conjunction conj;
    conj.atoms.reserve(bs.size());
    for (const DomainElement& b : bs) {
        conj.atoms.push_back(atom_ann(b));
    }
    OpenPair lhs{{std::move(conj)}, {Sum{{atom_zero(ring.kind)}}}};
    OpenPair r{{Conjunction{{atom_ann(a)}}}, {Sum{{atom_zero(ring.kind)}}}};
    return decide_inclusion(ring, lhs, {r});
}

bool check_lemma73(const DomainRing& ring, const DomainElement& a,
                   const std::vector<DomainElement>& bs) {
    return check_lemma73_verdict(ring, a, bs).included;
}

bool nonempty(const DomainRing& ring, const OpenPair& p) {
    return !decide_inclusion(ring, p, {}).included;
}

std::string rhs_term_to_string(const RhsTerm& t) {
    std::string out = "term{";
    bool first = true;
    for (const WSet& w : t.prefixes) {
        if (!first) {
            out += " & ";
        }
        out += wset_to_string(w);
        first = false;
    }
    for (const WSet& w : t.suffixes) {
        if (!first) {
            out += " & ";
        }
        out += wset_to_string(w);
        first = false;
    }
    if (first) {
        out += "whole";
    }
    if (!cond_is_true(t.constraint)) {
        out += " if " + cond_to_string(t.constraint);
    }
    out += "}";
    return out;
}

std::string wproblem_to_string(const WProblem& p) {
    std::string out = "problem{" + wset_to_string(p.lhs_main);
    if (!cond_is_true(p.lhs_constraint)) {
        out += " where " + cond_to_string(p.lhs_constraint);
    }
    out += " <= ";
    if (p.rhs_terms.empty()) {
        out += "empty";
    } else {
        bool first = true;
        for (const RhsTerm& t : p.rhs_terms) {
            if (!first) {
                out += ", ";
            }
            out += rhs_term_to_string(t);
            first = false;
        }
    }
    out += "}";
    return out;
}

std::string lhs_split_to_string(const LhsSplit& s) {
    std::string out = "branch{" + simple_pair_to_string(s.lhs);
    if (!s.extras.empty()) {
        out += "; extras=[";
        bool first = true;
        for (const SimplePair& e : s.extras) {
            if (!first) {
                out += ", ";
            }
            out += simple_pair_to_string(e);
            first = false;
        }
        out += "]";
    }
    out += "}";
    return out;
}

} // namespace modec
