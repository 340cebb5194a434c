#include "modec/parser.hpp"

#include <cctype>
#include <utility>

#include "modec/errors.hpp"

namespace modec {

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& input, int line_no) {
    std::vector<Token> out;
    int line = line_no;
    int col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(c);
            ++i;
            continue;
        }
        if (c == '#') { // comment to end of line
            while (i < input.size() && input[i] != '\n') {
                ++i;
                ++col;
            }
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_')) {
                t.text += input[i];
                ++i;
                ++col;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Int;
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) {
                t.text += input[i];
                ++i;
                ++col;
            }
        } else if (c == '<') {
            if (i + 1 >= input.size() || input[i + 1] != '=') {
                throw SyntaxError("expected '=' after '<'", line, col);
            }
            t.kind = Token::Kind::Punct;
            t.text = "<=";
            i += 2;
            col += 2;
        } else if (std::string("()[]{},;+-*/^|.=&").find(c) != std::string::npos) {
            t.kind = Token::Kind::Punct;
            t.text = std::string(1, c);
            ++i;
            ++col;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.text = "<end>";
    end.line = line;
    end.col = col;
    out.push_back(std::move(end));
    return out;
}

bool is_reserved(const std::string& s) {
    static const char* words[] = {
        "let",   "eq",   "divides", "gcd",    "xgcd",     "content", "radmem",
        "dpr",   "dprn", "empty",   "nonempty", "include", "prop64",  "lemma73",
        "pair",  "dual", "divmul",  "T",      "Z",        "x",       "X",
        "true",  "false",
    };
    for (const char* w : words) {
        if (s == w) return true;
    }
    return false;
}

class Parser {
  public:
    Parser(const DomainRing& ring, std::vector<Token> tokens, const Bindings& env)
        : ring_(ring), toks_(std::move(tokens)), env_(env) {}

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        if (i >= toks_.size()) i = toks_.size() - 1;
        return toks_[i];
    }

    Token get() {
        Token t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw SyntaxError(msg + ", got '" + t.text + "'", t.line, t.col);
    }

    bool at_punct(const std::string& p, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::Kind::Punct && t.text == p;
    }

    bool at_ident(const std::string& s, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::Kind::Ident && t.text == s;
    }

    void expect_punct(const std::string& p) {
        if (!at_punct(p)) fail("expected '" + p + "'");
        get();
    }

    void expect_end() {
        if (peek().kind != Token::Kind::End) fail("expected end of statement");
    }

    Integer expect_int() {
        bool neg = false;
        if (at_punct("-")) {
            get();
            neg = true;
        }
        if (peek().kind != Token::Kind::Int) fail("expected an integer");
        Integer v(get().text);
        return neg ? Integer(-v) : v;
    }

    // --- element expressions -------------------------------------------

    DomainElement parse_expr() {
        DomainElement a = parse_term();
        while (at_punct("+") || at_punct("-")) {
            bool plus = get().text == "+";
            DomainElement b = parse_term();
            a = plus ? d_add(a, b) : d_sub(a, b);
        }
        return a;
    }

    DomainElement parse_term() {
        DomainElement a = parse_unary();
        while (at_punct("*") || (ring_.kind == RingKind::Kjo && at_punct("/"))) {
            bool times = get().text == "*";
            DomainElement b = parse_unary();
            if (times) {
                a = d_mul(a, b);
            } else {
                a = kjo_elem(fr_div(a.frac(), b.frac()));
            }
        }
        return a;
    }

    DomainElement parse_unary() {
        if (at_punct("-")) {
            get();
            return d_neg(parse_unary());
        }
        if (at_punct("+")) {
            get();
            return parse_unary();
        }
        return parse_power();
    }

    DomainElement parse_power() {
        DomainElement a = parse_primary();
        while (ring_.kind == RingKind::RationalPoly && at_punct("^")) {
            get();
            Integer n = expect_int();
            if (n < 0) fail("expected a nonnegative exponent");
            a = d_pow(a, n.get_ui());
        }
        return a;
    }

    DomainElement parse_primary() {
        const Token& t = peek();
        if (at_punct("(")) {
            get();
            DomainElement a = parse_expr();
            expect_punct(")");
            return a;
        }
        if (t.kind == Token::Kind::Int) {
            Integer num(get().text);
            // In qx a '/' continues the rational literal; kjo reads '/' as
            // field division at term level, which computes the same value.
            if (ring_.kind == RingKind::RationalPoly && at_punct("/") &&
                peek(1).kind == Token::Kind::Int) {
                get();
                Integer den(get().text);
                return d_const(ring_.kind, make_rational(num, den));
            }
            return d_const(ring_.kind, make_rational(num, 1));
        }
        if (ring_.kind == RingKind::Kjo && at_ident("X")) {
            get();
            return parse_monomial_tail();
        }
        if (ring_.kind == RingKind::RationalPoly && at_ident("x")) {
            get();
            return qx_elem(poly_x());
        }
        if (t.kind == Token::Kind::Ident && !is_reserved(t.text)) {
            auto it = env_.find(t.text);
            if (it == env_.end()) {
                throw SyntaxError("unbound name '" + t.text + "'", t.line, t.col);
            }
            get();
            return it->second;
        }
        fail("expected an element expression");
    }

    /// After the leading X: ^[i1,...,ik;j].
    DomainElement parse_monomial_tail() {
        expect_punct("^");
        expect_punct("[");
        std::vector<Integer> prefix;
        if (!at_punct(";")) {
            prefix.push_back(expect_int());
            while (at_punct(",")) {
                get();
                prefix.push_back(expect_int());
            }
        }
        expect_punct(";");
        Integer tail = expect_int();
        expect_punct("]");
        return kjo_monomial(rat_of(1), g_canon(std::move(prefix), tail));
    }

    // --- pp pairs ---------------------------------------------------------

    /// Atom elements parse at product level so the sum separator '+' of the
    /// denominator side stays unambiguous.
    DomainElement parse_atom_elem() {
        if (at_punct("-")) {
            get();
            return d_neg(parse_atom_elem());
        }
        DomainElement a = parse_power();
        while (at_punct("*") || (ring_.kind == RingKind::Kjo && at_punct("/"))) {
            bool times = get().text == "*";
            DomainElement b = parse_unary();
            if (times) {
                a = d_mul(a, b);
            } else {
                a = kjo_elem(fr_div(a.frac(), b.frac()));
            }
        }
        return a;
    }

    PPAtom parse_atom() {
        if (at_ident("T")) {
            get();
            return atom_top(ring_.kind);
        }
        if (at_ident("Z")) {
            get();
            return atom_zero(ring_.kind);
        }
        if (at_ident("dual") || at_ident("divmul")) {
            bool dual = get().text == "dual";
            expect_punct("(");
            DomainElement a = parse_expr();
            expect_punct(",");
            DomainElement b = parse_expr();
            expect_punct(")");
            return dual ? atom_dual(std::move(a), std::move(b))
                        : atom_divmul(std::move(a), std::move(b));
        }
        if (at_ident("x") && at_punct(".", 1)) {
            get();
            get();
            DomainElement b = parse_atom_elem();
            expect_punct("=");
            const Token& z = peek();
            if (z.kind != Token::Kind::Int || z.text != "0") fail("expected '0'");
            get();
            return atom_ann(std::move(b));
        }
        DomainElement a = parse_atom_elem();
        expect_punct("|");
        if (!at_ident("x")) fail("expected 'x'");
        get();
        return atom_div(std::move(a));
    }

    Conjunction parse_conjunction() {
        Conjunction c;
        c.atoms.push_back(parse_atom());
        while (at_punct("&")) {
            get();
            c.atoms.push_back(parse_atom());
        }
        return c;
    }

    Sum parse_sum() {
        Sum s;
        s.atoms.push_back(parse_atom());
        while (at_punct("+")) {
            get();
            s.atoms.push_back(parse_atom());
        }
        return s;
    }

    OpenPair parse_pair_expr() {
        if (!at_ident("pair")) fail("expected 'pair'");
        get();
        expect_punct("(");
        OpenPair p;
        p.phi.push_back(parse_conjunction());
        while (at_punct(",")) {
            get();
            p.phi.push_back(parse_conjunction());
        }
        expect_punct("/");
        p.psi.push_back(parse_sum());
        while (at_punct(",")) {
            get();
            p.psi.push_back(parse_sum());
        }
        expect_punct(")");
        return p;
    }

    // --- statements ---------------------------------------------------------

    std::vector<DomainElement> parse_bracket_list() {
        expect_punct("[");
        std::vector<DomainElement> out;
        if (!at_punct("]")) {
            out.push_back(parse_expr());
            while (at_punct(",")) {
                get();
                out.push_back(parse_expr());
            }
        }
        expect_punct("]");
        return out;
    }

    ParsedStatement parse_statement_body() {
        ParsedStatement st;
        if (peek().kind == Token::Kind::End) {
            st.kind = ParsedStatement::Kind::Blank;
            return st;
        }
        const Token& head = peek();
        if (head.kind != Token::Kind::Ident) fail("expected a statement keyword");
        const std::string kw = get().text;
        using K = ParsedStatement::Kind;
        if (kw == "let") {
            st.kind = K::Let;
            const Token& nm = peek();
            if (nm.kind != Token::Kind::Ident) fail("expected a name");
            if (is_reserved(nm.text)) {
                throw SyntaxError("name '" + nm.text + "' is reserved", nm.line, nm.col);
            }
            st.name = get().text;
            expect_punct("=");
            st.elems.push_back(parse_expr());
        } else if (kw == "eq" || kw == "divides" || kw == "gcd" || kw == "xgcd" ||
                   kw == "radmem") {
            st.kind = kw == "eq"        ? K::Eq
                      : kw == "divides" ? K::Divides
                      : kw == "gcd"     ? K::Gcd
                      : kw == "xgcd"    ? K::Xgcd
                                        : K::RadMem;
            st.elems.push_back(parse_expr());
            st.elems.push_back(parse_expr());
        } else if (kw == "content") {
            st.kind = K::Content;
            st.elems.push_back(parse_expr());
        } else if (kw == "dpr" || kw == "prop64") {
            st.kind = kw == "dpr" ? K::Dpr : K::Prop64;
            for (int i = 0; i < 4; ++i) st.elems.push_back(parse_expr());
        } else if (kw == "dprn") {
            st.kind = K::DprN;
            expect_punct("(");
            st.elems.push_back(parse_expr());
            expect_punct(";");
            st.elems.push_back(parse_expr());
            expect_punct(")");
            st.list1 = parse_bracket_list();
            st.list2 = parse_bracket_list();
        } else if (kw == "lemma73") {
            st.kind = K::Lemma73;
            st.elems.push_back(parse_expr());
            st.list1 = parse_bracket_list();
        } else if (kw == "empty" || kw == "nonempty") {
            st.kind = kw == "empty" ? K::Empty : K::Nonempty;
            st.pairs.push_back(parse_pair_expr());
        } else if (kw == "include") {
            st.kind = K::Include;
            st.pairs.push_back(parse_pair_expr());
            expect_punct("<=");
            while (at_ident("pair")) {
                st.pairs.push_back(parse_pair_expr());
            }
        } else {
            throw SyntaxError("unknown statement '" + kw + "'", head.line, head.col);
        }
        expect_end();
        return st;
    }

  private:
    const DomainRing& ring_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Bindings& env_;
};

} // namespace

DomainElement parse_element(const DomainRing& ring, const std::string& text,
                            const Bindings& env) {
    Parser p(ring, lex(text, 1), env);
    DomainElement e = p.parse_expr();
    p.expect_end();
    return e;
}

OpenPair parse_pair(const DomainRing& ring, const std::string& text, const Bindings& env) {
    Parser p(ring, lex(text, 1), env);
    OpenPair pr = p.parse_pair_expr();
    p.expect_end();
    return pr;
}

ParsedStatement parse_statement(const DomainRing& ring, const std::string& line,
                                const Bindings& env, int line_no) {
    Parser p(ring, lex(line, line_no), env);
    return p.parse_statement_body();
}

} // namespace modec
