#include "modec/pp.hpp"

#include <sstream>

#include "modec/errors.hpp"

namespace modec {

using Kind = PPAtom::Kind;

bool PPAtom::operator==(const PPAtom& o) const {
    if (kind != o.kind) return false;
    if (!d_eq(a, o.a)) return false;
    if (kind == Kind::DualPair || kind == Kind::DivMul) return d_eq(b, o.b);
    return true;
}

PPAtom atom_div(DomainElement a) {
    RingKind k = a.kind;
    return PPAtom{Kind::Div, std::move(a), d_zero(k)};
}

PPAtom atom_ann(DomainElement b) {
    RingKind k = b.kind;
    return PPAtom{Kind::Ann, std::move(b), d_zero(k)};
}

PPAtom atom_dual(DomainElement a, DomainElement b) {
    return PPAtom{Kind::DualPair, std::move(a), std::move(b)};
}

PPAtom atom_divmul(DomainElement c, DomainElement d) {
    return PPAtom{Kind::DivMul, std::move(c), std::move(d)};
}

PPAtom atom_top(RingKind k) { return atom_div(d_one(k)); }
PPAtom atom_zero(RingKind k) { return atom_div(d_zero(k)); }

bool atom_is_top(const PPAtom& at) {
    if (at.kind == Kind::Div) return is_unit(at.a);
    if (at.kind == Kind::Ann) return d_is_zero(at.a);
    return false;
}

bool atom_is_zero(const PPAtom& at) {
    if (at.kind == Kind::Div) return d_is_zero(at.a);
    if (at.kind == Kind::Ann) return is_unit(at.a);
    return false;
}

PPAtom simplify_atom(const PPAtom& at) {
    if (atom_is_top(at)) return atom_top(at.a.kind);
    if (atom_is_zero(at)) return atom_zero(at.a.kind);
    return at;
}

Conjunction simplify_conjunction(Conjunction c) {
    RingKind k = c.atoms.front().a.kind;
    std::vector<PPAtom> out;
    for (PPAtom& at : c.atoms) {
        PPAtom s = simplify_atom(at);
        if (atom_is_zero(s)) return Conjunction{{atom_zero(k)}};
        if (!atom_is_top(s)) out.push_back(std::move(s));
    }
    if (out.empty()) out.push_back(atom_top(k));
    return Conjunction{std::move(out)};
}

Sum simplify_sum(Sum s) {
    RingKind k = s.atoms.front().a.kind;
    std::vector<PPAtom> out;
    for (PPAtom& at : s.atoms) {
        PPAtom t = simplify_atom(at);
        if (atom_is_top(t)) return Sum{{atom_top(k)}};
        if (!atom_is_zero(t)) out.push_back(std::move(t));
    }
    if (out.empty()) out.push_back(atom_zero(k));
    return Sum{std::move(out)};
}

std::vector<SimplePair> dagger_decompose(const OpenPair& p) {
    std::vector<SimplePair> out;
    out.reserve(p.phi.size() * p.psi.size());
    for (const Conjunction& c : p.phi)
        for (const Sum& s : p.psi) out.push_back(SimplePair{c, s});
    return out;
}

std::array<SimplePair, 4> cor42_split(const DomainElement& a, const DomainElement& b,
                                      const DomainElement& c, const DomainElement& d) {
    auto mk = [](PPAtom phi, PPAtom psi) {
        return SimplePair{Conjunction{{std::move(phi)}}, Sum{{std::move(psi)}}};
    };
    return {mk(atom_div(a), atom_div(c)), mk(atom_div(a), atom_ann(d)),
            mk(atom_ann(b), atom_div(c)), mk(atom_ann(b), atom_ann(d))};
}

WSet wset_prefix(RingKind k, DomainElement h, DomainElement g) {
    return WSet{d_one(k), std::move(h), std::move(g)};
}

WSet wset_suffix(DomainElement lambda) {
    RingKind k = lambda.kind;
    return WSet{std::move(lambda), d_zero(k), d_zero(k)};
}

WSet wset_whole(RingKind k) { return WSet{d_one(k), d_zero(k), d_zero(k)}; }

bool wset_is_prefix(const WSet& w) { return is_unit(w.lambda); }

bool wset_is_suffix(const WSet& w) { return d_is_zero(w.h) && d_is_zero(w.g); }

SimplePair wset_unfold(const WSet& w) {
    return SimplePair{Conjunction{{atom_ann(d_mul(w.lambda, w.h))}},
                      Sum{{atom_div(w.g), atom_ann(w.lambda)}}};
}

DivDivRewrite rw_div_div(const DomainElement& a, const DomainElement& c) {
    TuganbaevTriple t = tuganbaev(a, c); // a·alpha = c·r, c·(alpha − 1) = a·s
    DivDivRewrite out;
    out.alpha = t.alpha;
    out.s = t.s;
    out.mem_s = c_memq(t.s);
    out.mem_alpha = c_memq(t.alpha);
    out.main = wset_suffix(a);
    return out;
}

AnnAnnRewrite rw_ann_ann(const DomainElement& b, const DomainElement& d) {
    TuganbaevTriple t = tuganbaev(d, b); // d·alpha = b·r, b·(alpha − 1) = d·t.s
    DomainElement s = d_neg(t.s);        // so that b·(1 − alpha) = d·s
    if (!d_eq(d_mul(b, d_sub(d_one(b.kind), t.alpha)), d_mul(d, s)))
        throw IdentityViolation("annihilator rewrite witness failed for " + d_to_string(b) +
                                ", " + d_to_string(d));
    AnnAnnRewrite out;
    out.alpha = t.alpha;
    out.s = s;
    out.mem_s = c_memp(s);
    out.mem_alpha = c_memp(t.alpha);
    out.main = wset_suffix(d);
    return out;
}

WSet rw_div_ann(const DomainElement& a, const DomainElement& d) {
    return wset_suffix(d_mul(a, d));
}

DualRewrite rw_dual_pair(const SimplePair& p) {
    DualRewrite out;
    for (const PPAtom& at : p.phi.atoms) {
        if (at.kind == Kind::DualPair) {
            TuganbaevTriple t = tuganbaev(at.a, at.b); // a·alpha = b·r, b·(alpha−1) = a·s
            out.pair.phi.atoms.push_back(atom_div(at.a));
            out.pair.phi.atoms.push_back(atom_ann(t.s));
            out.constraints.push_back(c_or2(c_memp(t.alpha), c_memq(t.alpha)));
        } else {
            out.pair.phi.atoms.push_back(at);
        }
    }
    for (const PPAtom& at : p.psi.atoms) {
        if (at.kind == Kind::DivMul) {
            // c = at.a, d = at.b; witness d·delta = c·t.r and c·(delta−1) = d·u
            TuganbaevTriple t = tuganbaev(at.b, at.a);
            out.pair.psi.atoms.push_back(atom_div(t.s));
            out.pair.psi.atoms.push_back(atom_ann(at.b));
            out.constraints.push_back(c_or2(c_memp(t.alpha), c_memq(t.alpha)));
        } else {
            out.pair.psi.atoms.push_back(at);
        }
    }
    return out;
}

WProblemTerm to_wset(const PPAtom& phi_raw, const PPAtom& psi_raw) {
    PPAtom phi = simplify_atom(phi_raw);
    PPAtom psi = simplify_atom(psi_raw);
    RingKind k = phi.a.kind;
    if (atom_is_top(phi)) {
        if (atom_is_zero(psi)) return {wset_whole(k), c_true()};
        if (psi.kind == Kind::Ann) return {wset_suffix(psi.a), c_true()};
        if (psi.kind == Kind::Div) return {wset_whole(k), c_memq(psi.a)};
    } else if (phi.kind == Kind::Ann) {
        if (atom_is_zero(psi)) return {wset_whole(k), c_memp(phi.a)};
        if (psi.kind == Kind::Div) return {wset_prefix(k, phi.a, psi.a), c_true()};
    }
    throw UnsupportedShape("no interval form for (" + atom_to_string(phi_raw) + " / " +
                           atom_to_string(psi_raw) + ")");
}

bool pair_empty_criterion(const DomainElement& a, const DomainElement& b,
                          const DomainElement& c, const DomainElement& d) {
    if (!divides(a, c) || !divides(d, b))
        throw PreconditionViolation("emptiness criterion needs a|c and d|b");
    if (d_is_zero(a) || d_is_zero(d)) return true;
    DomainElement g = div_exact(c, a);
    DomainElement h = div_exact(b, d);
    return is_unit(gcd_canon(g, h));
}

std::string atom_to_string(const PPAtom& at) {
    if (atom_is_top(at)) return "T";
    if (atom_is_zero(at)) return "Z";
    switch (at.kind) {
        case Kind::Div: return "(" + d_to_string(at.a) + ")|x";
        case Kind::Ann: return "x.(" + d_to_string(at.a) + ")=0";
        case Kind::DualPair:
            return "dual(" + d_to_string(at.a) + ", " + d_to_string(at.b) + ")";
        case Kind::DivMul:
            return "divmul(" + d_to_string(at.a) + ", " + d_to_string(at.b) + ")";
    }
    return "?";
}

template <typename Parts>
static std::string join_atoms(const Parts& atoms, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) os << sep;
        os << atom_to_string(atoms[i]);
    }
    return os.str();
}

std::string conjunction_to_string(const Conjunction& c) { return join_atoms(c.atoms, " & "); }

std::string sum_to_string(const Sum& s) { return join_atoms(s.atoms, " + "); }

std::string simple_pair_to_string(const SimplePair& p) {
    return "pair( " + conjunction_to_string(p.phi) + " / " + sum_to_string(p.psi) + " )";
}

std::string open_pair_to_string(const OpenPair& p) {
    std::ostringstream os;
    os << "pair( ";
    for (std::size_t i = 0; i < p.phi.size(); ++i) {
        if (i) os << " , ";
        os << conjunction_to_string(p.phi[i]);
    }
    os << " / ";
    for (std::size_t i = 0; i < p.psi.size(); ++i) {
        if (i) os << " , ";
        os << sum_to_string(p.psi[i]);
    }
    os << " )";
    return os.str();
}

std::string wset_to_string(const WSet& w) {
    return "W(" + d_to_string(w.lambda) + ", " + d_to_string(w.h) + ", " +
           d_to_string(w.g) + ")";
}

} // namespace modec
