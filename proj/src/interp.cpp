#include "modec/interp.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <utility>

#include "modec/errors.hpp"
#include "modec/prime_logic.hpp"

namespace modec {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

SimplePair as_simple(const OpenPair& p) {
    if (p.phi.size() != 1 || p.psi.size() != 1) {
        throw PreconditionViolation("expected a single summand over a single conjunct");
    }
    return SimplePair{p.phi[0], p.psi[0]};
}

bool fold_and(const std::vector<std::string>& bools, const std::vector<std::string>& out) {
    bool all = true;
    for (const std::string& s : bools) {
        if (s != "true" && s != "false") return false;
        all = all && (s == "true");
    }
    return out.size() == 1 && out[0] == bool_str(all);
}

} // namespace

StatementResult eval_statement(const DomainRing& ring, const ParsedStatement& st,
                               Bindings& env, bool want_trace) {
    using K = ParsedStatement::Kind;
    StatementResult r;
    auto verdict_result = [&](Verdict v, bool value) {
        r.kind = StatementResult::Kind::Bool;
        r.b = value;
        if (want_trace) {
            r.trace = std::move(v.trace);
            r.has_trace = true;
        }
    };
    switch (st.kind) {
        case K::Blank:
            break;
        case K::Let:
            env[st.name] = st.elems[0];
            r.let_echo = d_to_string(st.elems[0]);
            break;
        case K::Eq:
            r.kind = StatementResult::Kind::Bool;
            r.b = d_eq(st.elems[0], st.elems[1]);
            break;
        case K::Divides:
            r.kind = StatementResult::Kind::Bool;
            r.b = divides(st.elems[0], st.elems[1]);
            break;
        case K::Gcd:
            r.kind = StatementResult::Kind::Text;
            r.text = d_to_string(gcd_canon(st.elems[0], st.elems[1]));
            break;
        case K::Xgcd: {
            XgcdResult x = xgcd(st.elems[0], st.elems[1]);
            r.kind = StatementResult::Kind::TextList;
            r.list = {d_to_string(x.g), d_to_string(x.u), d_to_string(x.v)};
            break;
        }
        case K::Content:
            r.kind = StatementResult::Kind::Text;
            r.text = g_to_string(d_content(st.elems[0]));
            break;
        case K::RadMem:
            r.kind = StatementResult::Kind::Bool;
            r.b = rad_member(ring, st.elems[0], st.elems[1]);
            break;
        case K::Dpr:
            r.kind = StatementResult::Kind::Bool;
            r.b = dpr(ring, DPRTuple{st.elems[0], st.elems[1], st.elems[2], st.elems[3]});
            break;
        case K::DprN:
            r.kind = StatementResult::Kind::Bool;
            r.b = dpr_n(ring, DPRnQuery{st.elems[0], st.elems[1], st.list1, st.list2});
            break;
        case K::Empty: {
            Verdict v = decide_inclusion(ring, st.pairs[0], {});
            bool val = v.included;
            verdict_result(std::move(v), val);
            break;
        }
        case K::Nonempty: {
            Verdict v = decide_inclusion(ring, st.pairs[0], {});
            bool val = !v.included;
            verdict_result(std::move(v), val);
            break;
        }
        case K::Include: {
            std::vector<OpenPair> rhs(st.pairs.begin() + 1, st.pairs.end());
            Verdict v = decide_inclusion(ring, st.pairs[0], rhs);
            bool val = v.included;
            verdict_result(std::move(v), val);
            break;
        }
        case K::Prop64: {
            Verdict v = check_prop64_verdict(ring, st.elems[0], st.elems[1], st.elems[2],
                                             st.elems[3]);
            bool val = v.included;
            verdict_result(std::move(v), val);
            break;
        }
        case K::Lemma73: {
            Verdict v = check_lemma73_verdict(ring, st.elems[0], st.list1);
            bool val = v.included;
            verdict_result(std::move(v), val);
            break;
        }
    }
    return r;
}

std::string format_output(const std::string& query, const StatementResult& r,
                          const SessionOptions& opts) {
    if (opts.json) {
        nlohmann::ordered_json j;
        j["query"] = query;
        switch (r.kind) {
            case StatementResult::Kind::None: j["result"] = r.let_echo; break;
            case StatementResult::Kind::Bool: j["result"] = r.b; break;
            case StatementResult::Kind::Text: j["result"] = r.text; break;
            case StatementResult::Kind::TextList: j["result"] = r.list; break;
        }
        if (r.has_trace) {
            nlohmann::ordered_json steps = nlohmann::ordered_json::array();
            for (const TraceStep& s : r.trace) {
                nlohmann::ordered_json rec;
                rec["lemma"] = s.rule;
                rec["in"] = s.in;
                rec["out"] = s.out;
                steps.push_back(std::move(rec));
            }
            j["trace"] = std::move(steps);
        }
        return j.dump();
    }
    std::string out;
    switch (r.kind) {
        case StatementResult::Kind::None: return "";
        case StatementResult::Kind::Bool: out = bool_str(r.b); break;
        case StatementResult::Kind::Text: out = r.text; break;
        case StatementResult::Kind::TextList: {
            out = "[";
            for (std::size_t i = 0; i < r.list.size(); ++i) {
                if (i) out += ", ";
                out += r.list[i];
            }
            out += "]";
            break;
        }
    }
    if (r.has_trace) {
        for (const TraceStep& s : r.trace) {
            out += "\n-- " + s.rule;
            for (const std::string& x : s.in) out += "\n   in : " + x;
            for (const std::string& x : s.out) out += "\n   out: " + x;
        }
    }
    return out;
}

bool replay_step(const DomainRing& ring, const TraceStep& step) {
    try {
        const std::string& rule = step.rule;
        if (rule == "cross-split") {
            if (step.in.size() != 1) return false;
            OpenPair p = parse_pair(ring, step.in[0]);
            std::vector<SimplePair> parts = dagger_decompose(p);
            if (parts.size() != step.out.size()) return false;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (simple_pair_to_string(parts[i]) != step.out[i]) return false;
            }
            return true;
        }
        if (rule == "dual-elim") {
            if (step.in.size() != 1) return false;
            SimplePair sp = as_simple(parse_pair(ring, step.in[0]));
            DualRewrite dr = rw_dual_pair(sp);
            if (step.out.size() != 1 + dr.constraints.size()) return false;
            if (simple_pair_to_string(dr.pair) != step.out[0]) return false;
            for (std::size_t i = 0; i < dr.constraints.size(); ++i) {
                if (cond_to_string(dr.constraints[i]) != step.out[i + 1]) return false;
            }
            return true;
        }
        if (rule == "lhs-split") {
            if (step.in.size() != 1) return false;
            SimplePair sp = as_simple(parse_pair(ring, step.in[0]));
            std::vector<LhsSplit> splits = split_lhs(sp);
            if (splits.size() != step.out.size()) return false;
            for (std::size_t i = 0; i < splits.size(); ++i) {
                if (lhs_split_to_string(splits[i]) != step.out[i]) return false;
            }
            return true;
        }
        if (rule == "lhs-form") {
            if (step.in.size() != 1) return false;
            SimplePair sp = as_simple(parse_pair(ring, step.in[0]));
            auto res = lhs_form(sp, nullptr);
            if (!res) return step.out == std::vector<std::string>{"empty"};
            return step.out.size() == 2 && step.out[0] == wset_to_string(res->first) &&
                   step.out[1] == cond_to_string(res->second);
        }
        if (rule == "term-form") {
            if (step.in.size() != 1) return false;
            SimplePair sp = as_simple(parse_pair(ring, step.in[0]));
            auto t = rhs_term_of(sp, nullptr);
            if (!t) return step.out == std::vector<std::string>{"empty"};
            return step.out.size() == 1 && step.out[0] == rhs_term_to_string(*t);
        }
        if (rule == "div-div" || rule == "ann-ann") {
            if (step.in.size() != 2 || step.out.size() != 4) return false;
            DomainElement x = parse_element(ring, step.in[0]);
            DomainElement y = parse_element(ring, step.in[1]);
            DomainElement alpha, s;
            WSet main;
            Cond extra;
            if (rule == "div-div") {
                DivDivRewrite rr = rw_div_div(x, y);
                alpha = rr.alpha;
                s = rr.s;
                main = rr.main;
                extra = c_and2(rr.mem_s, rr.mem_alpha);
            } else {
                AnnAnnRewrite rr = rw_ann_ann(x, y);
                alpha = rr.alpha;
                s = rr.s;
                main = rr.main;
                extra = c_and2(rr.mem_s, rr.mem_alpha);
            }
            return d_to_string(alpha) == step.out[0] && d_to_string(s) == step.out[1] &&
                   wset_to_string(main) == step.out[2] && cond_to_string(extra) == step.out[3];
        }
        if (rule == "div-ann") {
            if (step.in.size() != 2 || step.out.size() != 1) return false;
            WSet w = rw_div_ann(parse_element(ring, step.in[0]),
                                parse_element(ring, step.in[1]));
            return wset_to_string(w) == step.out[0];
        }
        if (rule == "clause-dpr") {
            if (step.in.size() != 4 || step.out.size() != 1) return false;
            DPRTuple t{parse_element(ring, step.in[0]), parse_element(ring, step.in[1]),
                       parse_element(ring, step.in[2]), parse_element(ring, step.in[3])};
            return step.out[0] == bool_str(dpr(ring, t));
        }
        if (rule == "empty-lhs") {
            if (step.in.size() != 1) return false;
            return d_is_zero(parse_element(ring, step.in[0])) &&
                   step.out == std::vector<std::string>{"true"};
        }
        if (rule == "decide-w" || rule == "verdict") {
            return fold_and(step.in, step.out);
        }
        return false;
    } catch (const Error&) {
        return false;
    }
}

Session::Session(DomainRing ring, SessionOptions opts)
    : ring_(std::move(ring)), opts_(opts) {}

std::string Session::run_line(const std::string& line, int line_no) {
    ParsedStatement st = parse_statement(ring_, line, env_, line_no);
    if (st.kind == ParsedStatement::Kind::Blank) return "";
    StatementResult r = eval_statement(ring_, st, env_, opts_.trace);
    return format_output(line, r, opts_);
}

int run_script(Session& session, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        try {
            std::string rendered = session.run_line(line, line_no);
            if (!rendered.empty()) out << rendered << '\n';
        } catch (const SyntaxError& e) {
            err << "error: " << e.what() << '\n';
            return 2;
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
    }
    return 0;
}

int run_repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        try {
            std::string rendered = session.run_line(line, line_no);
            if (!rendered.empty()) out << rendered << '\n';
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
        }
    }
    return 0;
}

} // namespace modec
