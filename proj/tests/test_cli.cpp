#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "modec/errors.hpp"
#include "modec/interp.hpp"
#include "modec/parser.hpp"
#include "testutil.hpp"

using namespace modec;
using testutil::Rng;

namespace {

DomainRing kjo_ring() { return DomainRing::kjo(); }

DomainRing qx_ring() {
    DomainRing r = DomainRing::rational_poly();
    r.pool = {poly_x(), poly_add(poly_x(), poly_one()),
              poly_sub(poly_x(), poly_one())};
    return r;
}

// Printing canonicalizes trivial atoms to T / Z, so compare up to that.
bool atoms_equal(const PPAtom& a, const PPAtom& b) {
    return simplify_atom(a) == simplify_atom(b);
}

bool pairs_equal(const OpenPair& a, const OpenPair& b) {
    if (a.phi.size() != b.phi.size() || a.psi.size() != b.psi.size()) return false;
    for (std::size_t i = 0; i < a.phi.size(); ++i) {
        if (a.phi[i].atoms.size() != b.phi[i].atoms.size()) return false;
        for (std::size_t j = 0; j < a.phi[i].atoms.size(); ++j) {
            if (!atoms_equal(a.phi[i].atoms[j], b.phi[i].atoms[j])) return false;
        }
    }
    for (std::size_t i = 0; i < a.psi.size(); ++i) {
        if (a.psi[i].atoms.size() != b.psi[i].atoms.size()) return false;
        for (std::size_t j = 0; j < a.psi[i].atoms.size(); ++j) {
            if (!atoms_equal(a.psi[i].atoms[j], b.psi[i].atoms[j])) return false;
        }
    }
    return true;
}

std::string run_all(Session& s, const std::vector<std::string>& lines) {
    std::string out;
    int n = 0;
    for (const std::string& line : lines) {
        std::string r = s.run_line(line, ++n);
        if (!r.empty()) {
            out += r;
            out += '\n';
        }
    }
    return out;
}

} // namespace

TEST_CASE("element strings round-trip through the parser") {
    DomainRing kj = kjo_ring();
    DomainRing qx = qx_ring();
    Rng rng(2026);
    for (int i = 0; i < 300; ++i) {
        DomainElement a = rng.kjo(true);
        DomainElement back = parse_element(kj, d_to_string(a));
        CAPTURE(d_to_string(a));
        REQUIRE(d_eq(a, back));
    }
    for (int i = 0; i < 300; ++i) {
        DomainElement a = rng.qx(qx, true);
        DomainElement back = parse_element(qx, d_to_string(a));
        CAPTURE(d_to_string(a));
        REQUIRE(d_eq(a, back));
    }
    // Printing the re-parsed element is stable from the first reprint on.
    for (int i = 0; i < 100; ++i) {
        DomainElement a = rng.kjo(true);
        std::string s1 = d_to_string(parse_element(kj, d_to_string(a)));
        std::string s2 = d_to_string(parse_element(kj, s1));
        REQUIRE(s1 == s2);
    }
}

TEST_CASE("expression grammar covers literals, names, and operators") {
    DomainRing kj = kjo_ring();
    DomainRing qx = qx_ring();
    Bindings env;
    env["a"] = parse_element(kj, "X^[1;0]");

    CHECK(d_eq(parse_element(kj, "2*X^[1;0] + 3", env),
               d_add(d_mul(d_const(RingKind::Kjo, rat_of(2)), env["a"]),
                     d_const(RingKind::Kjo, rat_of(3)))));
    CHECK(d_eq(parse_element(kj, "a*a", env), d_mul(env["a"], env["a"])));
    CHECK(d_eq(parse_element(kj, "-a + a", env), d_zero(RingKind::Kjo)));
    CHECK(is_unit(parse_element(kj, "(X^[1;0] + X^[0,1;0])/(X^[0,1;0] + X^[1;0])")));
    CHECK(d_eq(parse_element(kj, "X^[;1]"), kjo_monomial(rat_of(1), g_canon({}, 1))));
    // Monomials with negative exponents are not ring elements.
    CHECK_THROWS_AS(parse_element(kj, "X^[-1;0]"), NegativeElement);

    Bindings envq;
    envq["p"] = parse_element(qx, "x+1");
    CHECK(d_eq(parse_element(qx, "x^2 - 1", envq),
               d_mul(envq["p"], parse_element(qx, "x - 1"))));
    CHECK(d_eq(parse_element(qx, "1/2*x"), qx_elem(poly_make({rat_of(0), make_rational(1, 2)}))));
    CHECK(d_eq(parse_element(qx, "(x+1)^2", envq), d_mul(envq["p"], envq["p"])));
    CHECK(d_eq(parse_element(qx, "p^3", envq), d_pow(envq["p"], 3)));
}

TEST_CASE("pair strings round-trip through the parser") {
    DomainRing kj = kjo_ring();
    DomainRing qx = qx_ring();
    Rng rng(517);
    auto elem = [&](const DomainRing& r) {
        return r.kind == RingKind::Kjo ? rng.kjo(true) : rng.qx(r, true);
    };
    auto atom = [&](const DomainRing& r) {
        switch (rng.pick(0, 5)) {
            case 0: return atom_top(r.kind);
            case 1: return atom_zero(r.kind);
            case 2: return atom_div(elem(r));
            case 3: return atom_ann(elem(r));
            case 4: return atom_dual(elem(r), elem(r));
            default: return atom_divmul(elem(r), elem(r));
        }
    };
    for (const DomainRing& r : {kj, qx}) {
        for (int i = 0; i < 150; ++i) {
            OpenPair p;
            int ns = static_cast<int>(rng.pick(1, 2));
            int nc = static_cast<int>(rng.pick(1, 2));
            for (int s = 0; s < ns; ++s) {
                Conjunction c;
                int na = static_cast<int>(rng.pick(1, 2));
                for (int k = 0; k < na; ++k) c.atoms.push_back(atom(r));
                p.phi.push_back(std::move(c));
            }
            for (int s = 0; s < nc; ++s) {
                Sum sm;
                int na = static_cast<int>(rng.pick(1, 2));
                for (int k = 0; k < na; ++k) sm.atoms.push_back(atom(r));
                p.psi.push_back(std::move(sm));
            }
            std::string text = open_pair_to_string(p);
            CAPTURE(text);
            OpenPair back = parse_pair(r, text);
            REQUIRE(pairs_equal(p, back));
        }
    }
}

TEST_CASE("statement parsing resolves names and checks shapes") {
    DomainRing kj = kjo_ring();
    Bindings env;

    ParsedStatement let = parse_statement(kj, "let a = X^[1;0]", env);
    REQUIRE(let.kind == ParsedStatement::Kind::Let);
    CHECK(let.name == "a");
    env["a"] = let.elems[0];

    ParsedStatement q = parse_statement(kj, "dpr a a a a", env);
    REQUIRE(q.kind == ParsedStatement::Kind::Dpr);
    REQUIRE(q.elems.size() == 4);
    CHECK(d_eq(q.elems[2], env["a"]));

    ParsedStatement dn = parse_statement(kj, "dprn (a; 1) [a, a*a] [1]", env);
    REQUIRE(dn.kind == ParsedStatement::Kind::DprN);
    REQUIRE(dn.elems.size() == 2);
    REQUIRE(dn.list1.size() == 2);
    REQUIRE(dn.list2.size() == 1);
    CHECK(d_eq(dn.list1[1], d_mul(env["a"], env["a"])));

    ParsedStatement lm = parse_statement(kj, "lemma73 a [a, 0]", env);
    REQUIRE(lm.kind == ParsedStatement::Kind::Lemma73);
    REQUIRE(lm.list1.size() == 2);
    CHECK(d_is_zero(lm.list1[1]));

    ParsedStatement inc = parse_statement(
        kj, "include pair( x.(a)=0 / (a)|x ) <= pair( x.(a)=0 / Z ) pair( T / (a)|x )", env);
    REQUIRE(inc.kind == ParsedStatement::Kind::Include);
    REQUIRE(inc.pairs.size() == 3);

    ParsedStatement blank = parse_statement(kj, "   # only a comment", env);
    CHECK(blank.kind == ParsedStatement::Kind::Blank);
}

TEST_CASE("syntax errors carry line and column positions") {
    DomainRing kj = kjo_ring();
    DomainRing qx = qx_ring();
    Bindings env;

    auto col_of = [](auto fn) {
        try {
            fn();
        } catch (const SyntaxError& e) {
            return e.col;
        }
        return -1;
    };

    CHECK(col_of([&] { parse_statement(kj, "frobnicate a", env, 1); }) == 1);
    CHECK(col_of([&] { parse_statement(kj, "eq X^[1;0", env, 1); }) == 10);
    CHECK(col_of([&] { parse_statement(kj, "eq a a", env, 1); }) == 4);   // unbound name
    CHECK(col_of([&] { parse_statement(kj, "let pair = 1", env, 1); }) == 5);
    CHECK(col_of([&] { parse_statement(qx, "eq x ?", env, 1); }) == 6);
    try {
        parse_statement(kj, "eq 1 )", env, 7);
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.line == 7);
    }
    // Trailing input after a complete statement is rejected.
    CHECK(col_of([&] { parse_statement(kj, "eq 1 1 1", env, 1); }) == 8);
}

TEST_CASE("sessions render results and scripts abort on errors") {
    SessionOptions text_opts;
    Session s(kjo_ring(), text_opts);
    std::vector<std::string> lines = {
        "let a = X^[1;0]",
        "let b = X^[0,1;0]",
        "eq a b",
        "gcd a*b b*b",
        "xgcd a b",
        "content a*a*b",
        "radmem a a*a",
        "empty pair( (a)|x & x.(b)=0 / (a*b)|x )",
    };
    std::string out = run_all(s, lines);
    CHECK(out ==
          "false\n"
          "X^[0,1;0]\n"
          "[1, (X^[1;0])/(X^[1,1;0] + X^[2;0]), (X^[0,1;0])/(X^[0,2;0] + X^[1,1;0])]\n"
          "[2,1;0]\n"
          "true\n"
          "false\n");

    // Batch mode: syntax errors exit 2, evaluation errors exit 1.
    {
        std::istringstream in("eq 1 1\noops\n");
        std::ostringstream o, e;
        Session s2(kjo_ring(), text_opts);
        CHECK(run_script(s2, in, o, e) == 2);
        CHECK(o.str() == "true\n");
        CHECK(e.str().find("unknown statement") != std::string::npos);
    }
    {
        std::istringstream in("lemma73 1 []\n");
        std::ostringstream o, e;
        Session s2(kjo_ring(), text_opts);
        CHECK(run_script(s2, in, o, e) == 1);
    }
    {
        std::istringstream in("eq 1 1\n");
        std::ostringstream o, e;
        Session s2(kjo_ring(), text_opts);
        CHECK(run_script(s2, in, o, e) == 0);
    }
    // The interactive loop keeps going after errors.
    {
        std::istringstream in("oops\neq 1 1\n");
        std::ostringstream o, e;
        Session s2(kjo_ring(), text_opts);
        CHECK(run_repl(s2, in, o, e) == 0);
        CHECK(o.str() == "true\n");
        CHECK(!e.str().empty());
    }
}

TEST_CASE("json output is deterministic and traces replay") {
    SessionOptions opts;
    opts.json = true;
    opts.trace = true;
    std::vector<std::string> lines = {
        "let a = x",
        "let b = x+1",
        "let c = x-1",
        "include pair( (a)|x & x.(b)=0 / (a*b)|x ) <= pair( T / (a)|x ) pair( x.(b)=0 / Z )",
        "prop64 a b c a*b",
        "lemma73 a*b [a, b*c]",
        "nonempty pair( dual(a, b) / divmul(b, c) )",
        "empty pair( x.(b)=0 / (b)|x + x.(0)=0 )",
        "dpr a b c a",
    };
    DomainRing qx = qx_ring();
    Session s1(qx, opts);
    Session s2(qx, opts);
    std::string o1 = run_all(s1, lines);
    std::string o2 = run_all(s2, lines);
    REQUIRE(o1 == o2);

    int replayed = 0;
    std::istringstream in(o1);
    std::string line;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        REQUIRE(j.contains("query"));
        REQUIRE(j.contains("result"));
        if (!j.contains("trace")) continue;
        for (const auto& rec : j["trace"]) {
            TraceStep step;
            step.rule = rec["lemma"].get<std::string>();
            step.in = rec["in"].get<std::vector<std::string>>();
            step.out = rec["out"].get<std::vector<std::string>>();
            CAPTURE(step.rule);
            CAPTURE(line.substr(0, 80));
            REQUIRE(replay_step(qx, step));
            ++replayed;
        }
    }
    CHECK(replayed > 20);

    // Same exercise over the sequence domain.
    std::vector<std::string> klines = {
        "let a = X^[1;0]",
        "let b = X^[0,1;0]",
        "include pair( x.(b)=0 / (a)|x ) <= pair( x.(a*b)=0 / Z ) pair( T / (a)|x )",
        "lemma73 a [a*a, a*b]",
        "nonempty pair( dual(a, b) / (a)|x )",
    };
    DomainRing kj = kjo_ring();
    Session k1(kj, opts);
    Session k2(kj, opts);
    std::string ko1 = run_all(k1, klines);
    REQUIRE(ko1 == run_all(k2, klines));
    std::istringstream kin(ko1);
    int kreplayed = 0;
    while (std::getline(kin, line)) {
        auto j = nlohmann::json::parse(line);
        if (!j.contains("trace")) continue;
        for (const auto& rec : j["trace"]) {
            TraceStep step;
            step.rule = rec["lemma"].get<std::string>();
            step.in = rec["in"].get<std::vector<std::string>>();
            step.out = rec["out"].get<std::vector<std::string>>();
            CAPTURE(step.rule);
            REQUIRE(replay_step(kj, step));
            ++kreplayed;
        }
    }
    CHECK(kreplayed > 10);
}

TEST_CASE("trace replay rejects tampered steps") {
    DomainRing qx = qx_ring();
    Verdict v = check_prop64_verdict(qx, parse_element(qx, "x"), parse_element(qx, "x+1"),
                                     parse_element(qx, "x-1"), parse_element(qx, "x"));
    REQUIRE(!v.trace.empty());
    for (const TraceStep& good : v.trace) {
        REQUIRE(replay_step(qx, good));
    }
    TraceStep bad = v.trace.back(); // verdict fold
    REQUIRE(bad.rule == "verdict");
    bad.out = {bad.out[0] == "true" ? "false" : "true"};
    CHECK(!replay_step(qx, bad));
    TraceStep garbled = v.trace.front();
    garbled.in = {"pair( nonsense )"};
    CHECK(!replay_step(qx, garbled));
}
