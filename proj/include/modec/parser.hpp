#pragma once

#include <map>
#include <string>
#include <vector>

#include "modec/domain.hpp"
#include "modec/pp.hpp"

namespace modec {

/**
 * Text front end for the driver language: element expressions over either
 * coefficient ring, pp-pair syntax, and one-line statements.
 *
 * Element grammar (kjo): INT, X^[i1,...,ik;j], names, + - * / and parens;
 * '/' is exact division in the fraction field and must land back in the ring.
 * Element grammar (qx): INT and INT/INT rational literals, x, names,
 * + - * ^ and parens.
 *
 * Pair grammar: pair( conj , ... / sum , ... ) with conj = atom & ... and
 * sum = atom + ... . Atoms: T, Z, elem|x, x.elem=0, dual(e1,e2),
 * divmul(e1,e2). Inside |x and x.=0 atoms the element is parsed at product
 * level; parenthesize sums.
 */
struct ParsedStatement {
    enum class Kind {
        Blank,
        Let,
        Eq,
        Divides,
        Gcd,
        Xgcd,
        Content,
        RadMem,
        Dpr,
        DprN,
        Empty,
        Nonempty,
        Include,
        Prop64,
        Lemma73,
    };
    Kind kind = Kind::Blank;
    std::string name;                 // Let target
    std::vector<DomainElement> elems; // positional element arguments
    std::vector<DomainElement> list1; // first bracketed list (dprn, lemma73)
    std::vector<DomainElement> list2; // second bracketed list (dprn)
    std::vector<OpenPair> pairs;      // pair arguments; [0] is the left side
};

using Bindings = std::map<std::string, DomainElement>;

/// Parses a complete element expression; trailing input is an error.
DomainElement parse_element(const DomainRing& ring, const std::string& text,
                            const Bindings& env = {});

/// Parses a complete pair(...) expression; trailing input is an error.
OpenPair parse_pair(const DomainRing& ring, const std::string& text,
                    const Bindings& env = {});

/// Parses one statement line; names resolve against env during parsing, so
/// the result is fully evaluated. line_no seeds reported error positions.
ParsedStatement parse_statement(const DomainRing& ring, const std::string& line,
                                const Bindings& env, int line_no = 1);

} // namespace modec
