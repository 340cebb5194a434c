// Acceptance harness: one criterion per invocation, one [PASS]/[FAIL] line.
//
//   acceptance <criterion 1..10> [<path to modec binary> <path to script dir>]
//
// The last two arguments are only needed by criterion 10, which re-runs the
// command-line tool on the fixed scripts and replays the recorded traces.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modec/condition.hpp"
#include "modec/decider.hpp"
#include "modec/domain.hpp"
#include "modec/errors.hpp"
#include "modec/group.hpp"
#include "modec/group_ring.hpp"
#include "modec/interp.hpp"
#include "modec/pp.hpp"
#include "modec/prime_logic.hpp"
#include "testutil.hpp"

using namespace modec;
using testutil::Rng;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& what) {
    if (o.ok) {
        o.ok = false;
        o.detail = what;
    }
}

GroupElement ge(std::vector<long> pre, long tail) {
    std::vector<Integer> p(pre.begin(), pre.end());
    return g_canon(std::move(p), Integer(tail));
}

DomainElement kmono(std::vector<long> pre, long tail) {
    return kjo_monomial(rat_of(1), ge(std::move(pre), tail));
}

DomainRing pooled_qx() {
    DomainRing q = DomainRing::rational_poly();
    Polynomial x = poly_x();
    q.pool = {x, poly_add(x, poly_const(rat_of(1))), poly_sub(x, poly_const(rat_of(1)))};
    return q;
}

OpenPair simple(PPAtom phi, PPAtom psi) {
    return OpenPair{{Conjunction{{std::move(phi)}}}, {Sum{{std::move(psi)}}}};
}

OpenPair pair_of(const SimplePair& sp) { return OpenPair{{sp.phi}, {sp.psi}}; }

/// Random basic pair whose right-hand normalization stays in interval form.
OpenPair supported_pair(Rng& rng, const DomainRing& ring) {
    auto elem = [&] { return rng.element(ring, true); };
    switch (rng.pick(0, 4)) {
    case 0: { // one atom over one atom, any kinds
        PPAtom phi = rng.chance(0.5) ? atom_div(elem()) : atom_ann(elem());
        PPAtom psi;
        switch (rng.pick(0, 2)) {
        case 0: psi = atom_div(elem()); break;
        case 1: psi = atom_ann(elem()); break;
        default: psi = atom_zero(ring.kind); break;
        }
        if (rng.chance(0.15)) phi = atom_top(ring.kind);
        return simple(std::move(phi), std::move(psi));
    }
    case 1: { // two annihilators over a divisibility: two head intervals
        OpenPair p;
        p.phi = {Conjunction{{atom_ann(elem()), atom_ann(elem())}}};
        p.psi = {Sum{{atom_div(elem())}}};
        return p;
    }
    case 2: { // one divisibility over a two-atom sum: two tail intervals
        OpenPair p;
        p.phi = {Conjunction{{atom_div(elem())}}};
        p.psi = {Sum{{atom_div(elem()), atom_ann(elem())}}};
        return p;
    }
    case 3: { // existential numerator over an annihilator or zero
        PPAtom psi = rng.chance(0.5) ? atom_ann(elem()) : atom_zero(ring.kind);
        return simple(atom_dual(elem(), elem()), std::move(psi));
    }
    default: // divisibility over a twisted-divisibility denominator
        return simple(atom_div(elem()), atom_divmul(elem(), elem()));
    }
}

// 1. Content is additive across products of random group-ring elements.
Outcome crit_content(Outcome o = {}) {
    Rng rng(40101);
    auto poly = [&] {
        GroupRingElement r;
        int t = static_cast<int>(rng.pick(1, 4));
        for (int k = 0; k < t; ++k) {
            GroupElement g = rng.nonneg_group(4, 3);
            if (r.terms.count(g)) continue;
            long num = 0;
            while (num == 0) num = rng.pick(-10, 10);
            r.terms[g] = make_rational(Integer(num), Integer(rng.pick(1, 10)));
        }
        return r;
    };
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        GroupRingElement x = poly(), e = poly();
        GroupElement lhs = content_poly(rr_mul(x, e));
        GroupElement rhs = g_add(content_poly(x), content_poly(e));
        if (!(lhs == rhs)) {
            fail(o, "content not additive at " + rr_to_string(x) + " * " + rr_to_string(e));
            return o;
        }
    }
    o.detail = "content additive on " + std::to_string(n) + " random products";
    return o;
}

// 2. Extended gcd and division-witness triples satisfy their identities exactly.
Outcome crit_identities(Outcome o = {}) {
    Rng rng(40202);
    DomainRing K = DomainRing::kjo();
    DomainRing Q = pooled_qx();
    const int per = 1000;
    for (const DomainRing* R : {&K, &Q}) {
        DomainElement one = d_one(R->kind);
        for (int i = 0; i < per; ++i) {
            DomainElement a = rng.element(*R), b = rng.element(*R);
            if (d_is_zero(a) && d_is_zero(b)) b = one;
            XgcdResult x = xgcd(a, b);
            if (!d_eq(d_add(d_mul(x.u, a), d_mul(x.v, b)), x.g)) {
                fail(o, "gcd identity failed at a=" + d_to_string(a) + " b=" + d_to_string(b));
                return o;
            }
            TuganbaevTriple t = tuganbaev(a, b);
            bool first = d_eq(d_mul(a, t.alpha), d_mul(b, t.r));
            bool second = d_eq(d_mul(b, d_sub(t.alpha, one)), d_mul(a, t.s));
            if (!(first && second)) {
                fail(o, "witness identities failed at a=" + d_to_string(a) + " b=" + d_to_string(b));
                return o;
            }
        }
    }
    o.detail = "gcd and witness identities exact on " + std::to_string(per) + " pairs per instance";
    return o;
}

// 3. The three radical-membership routes agree: scaling, support inclusion,
//    and prime enumeration on the sequence ring; squarefree test versus
//    factor-pool enumeration on polynomials.
Outcome crit_radical(Outcome o = {}) {
    DomainRing K = DomainRing::kjo();
    std::vector<GroupElement> contents;
    for (long t = 0; t <= 3; ++t) contents.push_back(ge({}, t));
    for (long a0 = 0; a0 <= 3; ++a0)
        for (long t = 0; t <= 3; ++t) contents.push_back(ge({a0}, t));
    for (long a0 = 0; a0 <= 3; ++a0)
        for (long a1 = 0; a1 <= 3; ++a1)
            for (long t = 0; t <= 3; ++t) contents.push_back(ge({a0, a1}, t));
    for (long a0 = 0; a0 <= 3; ++a0)
        for (long a1 = 0; a1 <= 3; ++a1)
            for (long a2 = 0; a2 <= 3; ++a2)
                for (long t = 0; t <= 3; ++t) contents.push_back(ge({a0, a1, a2}, t));

    long sweep = 0;
    for (const GroupElement& ga : contents) {
        DomainElement a = kjo_monomial(rat_of(1), ga);
        for (const GroupElement& gb : contents) {
            DomainElement b = kjo_monomial(rat_of(1), gb);
            bool r1 = rad_member(K, a, b);
            bool r2 = rad_member_scaling(K, a, b);
            bool r3 = rad_member_primes(K, a, b);
            if (r1 != r2 || r1 != r3) {
                fail(o, "radical routes disagree at a=" + d_to_string(a) + " b=" + d_to_string(b));
                return o;
            }
            ++sweep;
        }
    }

    Rng rng(40303);
    DomainRing Q = pooled_qx();
    const int per = 1000;
    for (int i = 0; i < per; ++i) {
        DomainElement a = rng.qx(Q), b = rng.qx(Q);
        if (rad_member(Q, a, b) != rad_member_primes(Q, a, b)) {
            fail(o, "polynomial radical routes disagree at a=" + d_to_string(a) +
                        " b=" + d_to_string(b));
            return o;
        }
    }
    o.detail = "radical routes agree on " + std::to_string(sweep) + " sweep pairs and " +
               std::to_string(per) + " pool-built pairs";
    return o;
}

// 4. The four routes to the double prime radical relation agree.
Outcome crit_dpr(Outcome o = {}) {
    DomainRing K = DomainRing::kjo();
    DomainRing Q = pooled_qx();
    auto agree = [&](const DomainRing& R, const DPRTuple& t) {
        bool r = dpr(R, t);
        if (dpr_oracle_enum(R, t) != r) return false;
        if (dpr_oracle_localization(R, t) != r) return false;
        if (R.kind == RingKind::Kjo && kjo_quotient_proper(R, t) == r) return false;
        return true;
    };

    std::vector<DomainElement> small = {d_zero(RingKind::Kjo), d_one(RingKind::Kjo),
                                        kmono({1}, 0), kmono({0, 1}, 0), kmono({}, 1)};
    long exhaustive = 0;
    for (const DomainElement& a : small)
        for (const DomainElement& b : small)
            for (const DomainElement& c : small)
                for (const DomainElement& d : small) {
                    DPRTuple t{a, b, c, d};
                    if (!agree(K, t)) {
                        fail(o, "double-radical routes disagree at (" + d_to_string(a) + ", " +
                                    d_to_string(b) + ", " + d_to_string(c) + ", " +
                                    d_to_string(d) + ")");
                        return o;
                    }
                    ++exhaustive;
                }

    Rng rng(40404);
    const int per = 2000;
    for (const DomainRing* R : {&K, &Q}) {
        for (int i = 0; i < per; ++i) {
            DPRTuple t{rng.element(*R), rng.element(*R), rng.element(*R), rng.element(*R)};
            if (!agree(*R, t)) {
                fail(o, "double-radical routes disagree at (" + d_to_string(t.a) + ", " +
                            d_to_string(t.b) + ", " + d_to_string(t.c) + ", " + d_to_string(t.d) +
                            ")");
                return o;
            }
        }
    }
    o.detail = "double-radical routes agree on " + std::to_string(exhaustive) +
               " exhaustive and " + std::to_string(per) + " random tuples per instance";
    return o;
}

// 5. The full inclusion pipeline agrees with the closed-form quadruple relation.
Outcome crit_pipeline(Outcome o = {}) {
    DomainRing K = DomainRing::kjo();
    DomainRing Q = pooled_qx();

    std::vector<DomainElement> small_k = {d_zero(RingKind::Kjo), d_one(RingKind::Kjo),
                                          kmono({1}, 0), kmono({0, 1}, 0)};
    std::vector<DomainElement> small_q = {d_zero(RingKind::RationalPoly),
                                          d_one(RingKind::RationalPoly), qx_elem(poly_x()),
                                          qx_elem(poly_add(poly_x(), poly_const(rat_of(1))))};
    long exhaustive = 0;
    for (const DomainRing* R : {&K, &Q}) {
        const auto& small = (R->kind == RingKind::Kjo) ? small_k : small_q;
        for (const DomainElement& a : small)
            for (const DomainElement& b : small)
                for (const DomainElement& c : small)
                    for (const DomainElement& d : small) {
                        if (check_prop64(*R, a, b, c, d) != dpr(*R, DPRTuple{a, b, c, d})) {
                            fail(o, "pipeline disagrees with the quadruple relation at (" +
                                        d_to_string(a) + ", " + d_to_string(b) + ", " +
                                        d_to_string(c) + ", " + d_to_string(d) + ")");
                            return o;
                        }
                        ++exhaustive;
                    }
    }

    Rng rng(40505);
    const int per = 500;
    for (const DomainRing* R : {&K, &Q}) {
        for (int i = 0; i < per; ++i) {
            DomainElement a = rng.element(*R), b = rng.element(*R);
            DomainElement c = rng.element(*R), d = rng.element(*R);
            if (check_prop64(*R, a, b, c, d) != dpr(*R, DPRTuple{a, b, c, d})) {
                fail(o, "pipeline disagrees with the quadruple relation at (" + d_to_string(a) +
                            ", " + d_to_string(b) + ", " + d_to_string(c) + ", " +
                            d_to_string(d) + ")");
                return o;
            }
        }
    }
    o.detail = "inclusion pipeline matches the quadruple relation on " +
               std::to_string(exhaustive) + " exhaustive and " + std::to_string(per) +
               " random quadruples per instance";
    return o;
}

// 6. The annihilator-list query agrees with radical membership of the gcd.
Outcome crit_annihilator_lists(Outcome o = {}) {
    Rng rng(40606);
    DomainRing K = DomainRing::kjo();
    DomainRing Q = pooled_qx();
    const int per = 500;
    for (const DomainRing* R : {&K, &Q}) {
        for (int i = 0; i < per; ++i) {
            DomainElement a = rng.element(*R);
            int len = static_cast<int>(rng.pick(1, 3));
            std::vector<DomainElement> bs;
            for (int j = 0; j < len; ++j) bs.push_back(rng.element(*R));
            DomainElement g = bs[0];
            for (int j = 1; j < len; ++j) g = gcd_canon(g, bs[j]);
            if (check_lemma73(*R, a, bs) != rad_member(*R, a, g)) {
                fail(o, "annihilator-list query disagrees at a=" + d_to_string(a) +
                            " gcd=" + d_to_string(g));
                return o;
            }
        }
    }
    o.detail = "annihilator-list queries match radical membership on " + std::to_string(per) +
               " cases per instance, list lengths 1..3";
    return o;
}

// 7. The covering condition holds for all pairs exactly when direct
//    enumeration over the compatible pairs says so.
Outcome crit_condition(Outcome o = {}) {
    Rng rng(40707);
    DomainRing K = DomainRing::kjo();
    DomainRing Q = pooled_qx();

    auto random_term = [&](const DomainRing& ring) {
        RhsTerm t;
        t.constraint = c_true();
        if (rng.chance(0.4)) {
            t.constraint = rng.chance(0.5) ? c_memp(rng.element(ring, true))
                                           : c_memq(rng.element(ring, true));
        }
        int kind = static_cast<int>(rng.pick(0, 2));
        if (kind == 0) {
            int n = static_cast<int>(rng.pick(1, 2));
            for (int j = 0; j < n; ++j)
                t.prefixes.push_back(
                    wset_prefix(ring.kind, rng.element(ring, true), rng.element(ring, true)));
        } else if (kind == 1) {
            int n = static_cast<int>(rng.pick(1, 2));
            for (int j = 0; j < n; ++j) t.suffixes.push_back(wset_suffix(rng.element(ring, true)));
        }
        return t;
    };

    const int n = 600;
    for (int i = 0; i < n; ++i) {
        const DomainRing& ring = (i % 2 == 0) ? K : Q;
        WProblem p;
        switch (rng.pick(0, 2)) {
        case 0: p.lhs_main = wset_whole(ring.kind); break;
        case 1:
            p.lhs_main = wset_prefix(ring.kind, rng.element(ring, true), rng.element(ring, true));
            break;
        default: p.lhs_main = wset_suffix(rng.element(ring, false)); break;
        }
        p.lhs_constraint = c_true();
        if (rng.chance(0.4)) {
            p.lhs_constraint = rng.chance(0.5) ? c_memp(rng.element(ring, true))
                                               : c_memq(rng.element(ring, true));
        }
        int terms = static_cast<int>(rng.pick(0, 2));
        for (int j = 0; j < terms; ++j) p.rhs_terms.push_back(random_term(ring));

        Cond delta = build_condition(p);
        if (holds_for_all_pairs(ring, delta) != holds_oracle_enum(ring, delta)) {
            fail(o, "universal check disagrees with enumeration on " + cond_to_string(delta));
            return o;
        }
    }
    o.detail = "universal condition evaluation matches enumeration on " + std::to_string(n) +
               " generated problems";
    return o;
}

// 8. Both routes to the localization order agree; the order is total at every
//    prime, and products stay pairwise comparable at compatible pairs.
Outcome crit_order(Outcome o = {}) {
    Rng rng(40808);
    DomainRing K = DomainRing::kjo();
    DomainRing Q = pooled_qx();
    long triples = 0;
    for (const DomainRing* R : {&K, &Q}) {
        long count = 0;
        while (count < 1000) {
            DomainElement a = rng.element(*R), b = rng.element(*R);
            for (const PrimeDescriptor& p : relevant_primes(*R, {a, b})) {
                bool le = leq_p(a, b, p);
                if (le != leq_p_tuganbaev(a, b, p)) {
                    fail(o, "order routes disagree at a=" + d_to_string(a) +
                                " b=" + d_to_string(b) + " prime=" + prime_to_string(p));
                    return o;
                }
                if (!le && !leq_p(b, a, p)) {
                    fail(o, "order not total at a=" + d_to_string(a) + " b=" + d_to_string(b) +
                                " prime=" + prime_to_string(p));
                    return o;
                }
                ++count;
            }
        }
        triples += count;

        for (int i = 0; i < 40; ++i) {
            std::vector<DomainElement> prods;
            for (int j = 0; j < 3; ++j)
                prods.push_back(d_mul(rng.element(*R), rng.element(*R)));
            for (const auto& [p, q] : compatible_pairs(*R, prods))
                for (std::size_t s = 0; s < prods.size(); ++s)
                    for (std::size_t u = 0; u < prods.size(); ++u) {
                        bool comp = cond_eval(leq_pq_condition(prods[s], prods[u]), p, q) ||
                                    cond_eval(leq_pq_condition(prods[u], prods[s]), p, q);
                        if (!comp) {
                            fail(o, "products incomparable at " + d_to_string(prods[s]) + ", " +
                                        d_to_string(prods[u]));
                            return o;
                        }
                    }
        }
    }
    o.detail = "order routes agree on " + std::to_string(triples) +
               " triples; totality and product comparability hold";
    return o;
}

// 9. Decider sanity: reflexivity, union monotonicity, agreement with the
//    coprimality emptiness criterion, and the coprime-interval example.
Outcome crit_decider(Outcome o = {}) {
    Rng rng(40909);
    DomainRing K = DomainRing::kjo();
    DomainRing Q = DomainRing::rational_poly();

    for (int i = 0; i < 30; ++i) {
        const DomainRing& ring = (i % 2 == 0) ? K : Q;
        OpenPair p = supported_pair(rng, ring);
        OpenPair q = supported_pair(rng, ring);
        if (!decide_inclusion(ring, p, {p}).included) {
            fail(o, "reflexivity failed on " + open_pair_to_string(p));
            return o;
        }
        if (!decide_inclusion(ring, p, {q, p}).included) {
            fail(o, "union monotonicity failed on " + open_pair_to_string(p));
            return o;
        }
        if (decide_inclusion(ring, p, {q}).included) {
            OpenPair r = supported_pair(rng, ring);
            if (!decide_inclusion(ring, p, {q, r}).included) {
                fail(o, "union monotonicity failed on " + open_pair_to_string(p));
                return o;
            }
        }
    }

    for (int i = 0; i < 60; ++i) {
        const DomainRing& ring = (i % 2 == 0) ? K : Q;
        DomainElement a = rng.element(ring, true);
        DomainElement d = rng.element(ring, true);
        DomainElement c = d_mul(rng.element(ring, true), a);
        DomainElement b = d_mul(rng.element(ring, true), d);
        OpenPair p;
        p.phi = {Conjunction{{atom_div(a), atom_ann(b)}}};
        p.psi = {Sum{{atom_div(c), atom_ann(d)}}};
        if (nonempty(ring, p) != !pair_empty_criterion(a, b, c, d)) {
            fail(o, "emptiness disagrees with the coprimality criterion on " +
                        open_pair_to_string(p));
            return o;
        }
    }

    // Interval with coprime head and cofinal bounds: no compatible pair
    // admits it, so it is included in the empty union.
    WSet w = wset_prefix(RingKind::Kjo, kmono({1}, 0), kmono({0, 1}, 0));
    if (!decide_inclusion(K, pair_of(wset_unfold(w)), {}).included) {
        fail(o, "coprime-interval example was not recognized as empty");
        return o;
    }

    o.detail = "reflexivity, monotonicity, emptiness agreement, and the coprime-interval "
               "example hold";
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 10. Two runs of the command-line tool on the fixed scripts are
//     byte-identical in both formats, and every recorded trace step replays.
Outcome crit_cli(const std::string& modec, const std::string& data_dir, Outcome o = {}) {
    if (modec.empty() || data_dir.empty()) {
        fail(o, "usage: acceptance 10 <modec binary> <script directory>");
        return o;
    }
    long replayed = 0;
    for (const std::string domain : {"kjo", "qx"}) {
        std::string script = data_dir + "/" + domain + "_script.txt";
        auto run = [&](const std::string& extra, const std::string& out_file) {
            std::string cmd = "'" + modec + "' --domain " + domain + " " + extra + " '" + script +
                              "' > '" + out_file + "' 2> '" + out_file + ".err'";
            return std::system(cmd.c_str());
        };

        std::string t1 = "acceptance_" + domain + "_text_1.out";
        std::string t2 = "acceptance_" + domain + "_text_2.out";
        if (run("--format text", t1) != 0 || run("--format text", t2) != 0) {
            fail(o, domain + " text run exited nonzero");
            return o;
        }
        if (read_file(t1) != read_file(t2) || read_file(t1).empty()) {
            fail(o, domain + " text runs differ");
            return o;
        }

        std::string j1 = "acceptance_" + domain + "_json_1.out";
        std::string j2 = "acceptance_" + domain + "_json_2.out";
        if (run("--format json --trace", j1) != 0 || run("--format json --trace", j2) != 0) {
            fail(o, domain + " json run exited nonzero");
            return o;
        }
        std::string json_text = read_file(j1);
        if (json_text != read_file(j2) || json_text.empty()) {
            fail(o, domain + " json runs differ");
            return o;
        }

        DomainRing ring =
            (domain == std::string("kjo")) ? DomainRing::kjo() : DomainRing::rational_poly();
        std::istringstream lines(json_text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            nlohmann::json rec = nlohmann::json::parse(line);
            if (!rec.contains("trace")) continue;
            for (const auto& step : rec["trace"]) {
                TraceStep st;
                st.rule = step["lemma"].get<std::string>();
                for (const auto& s : step["in"]) st.in.push_back(s.get<std::string>());
                for (const auto& s : step["out"]) st.out.push_back(s.get<std::string>());
                if (!replay_step(ring, st)) {
                    fail(o, domain + " trace step failed to replay: " + st.rule);
                    return o;
                }
                ++replayed;
            }
        }
    }
    if (replayed == 0) {
        fail(o, "no trace steps were recorded");
        return o;
    }
    o.detail = "both domains render byte-identical text and json output; " +
               std::to_string(replayed) + " trace steps replay";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <criterion 1..10> [<modec binary> <script directory>]\n";
        return 1;
    }
    int n = std::atoi(argv[1]);
    std::string modec = argc > 2 ? argv[2] : "";
    std::string data_dir = argc > 3 ? argv[3] : "";

    const double limits[11] = {0, 5, 10, 30, 60, 120, 60, 60, 30, 10, 10};
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        switch (n) {
        case 1: o = crit_content(); break;
        case 2: o = crit_identities(); break;
        case 3: o = crit_radical(); break;
        case 4: o = crit_dpr(); break;
        case 5: o = crit_pipeline(); break;
        case 6: o = crit_annihilator_lists(); break;
        case 7: o = crit_condition(); break;
        case 8: o = crit_order(); break;
        case 9: o = crit_decider(); break;
        case 10: o = crit_cli(modec, data_dir); break;
        default:
            std::cerr << "unknown criterion " << argv[1] << "\n";
            return 1;
        }
    } catch (const std::exception& e) {
        fail(o, std::string("unexpected error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > limits[n]) {
        fail(o, "runtime limit exceeded: " + std::to_string(secs) + "s > " +
                    std::to_string(limits[n]) + "s");
    }

    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2f", secs);
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << o.detail << " ("
              << elapsed << "s)\n";
    return o.ok ? 0 : 1;
}
