#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "modec/rational.hpp"

namespace modec {

/**
 * An eventually constant sequence of integers under pointwise addition and
 * pointwise order. Stored as an explicit prefix plus the constant tail value;
 * the canonical form has no trailing prefix entry equal to the tail.
 */
struct GroupElement {
    std::vector<Integer> prefix;
    Integer tail = 0;

    /// Value at coordinate i (the tail for coordinates beyond the prefix).
    const Integer& at(std::size_t i) const {
        return i < prefix.size() ? prefix[i] : tail;
    }

    std::size_t window() const { return prefix.size(); }

    bool operator==(const GroupElement& o) const {
        return tail == o.tail && prefix == o.prefix;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    /// Deterministic total order on canonical forms; used for map keys and printing.
    bool operator<(const GroupElement& o) const {
        if (prefix != o.prefix) return prefix < o.prefix;
        return tail < o.tail;
    }
};

/// Strips trailing prefix entries equal to the tail.
GroupElement g_canon(std::vector<Integer> prefix, Integer tail);

GroupElement g_zero();
GroupElement g_add(const GroupElement& a, const GroupElement& b);
GroupElement g_neg(const GroupElement& a);
GroupElement g_sub(const GroupElement& a, const GroupElement& b);
GroupElement g_meet(const GroupElement& a, const GroupElement& b);
GroupElement g_join(const GroupElement& a, const GroupElement& b);

/// Pointwise order: every coordinate of a is <= the matching coordinate of b.
bool g_leq(const GroupElement& a, const GroupElement& b);

/// n-fold sum of a with itself; requires n >= 1.
GroupElement g_scale(const Integer& n, const GroupElement& a);

bool g_is_zero(const GroupElement& a);

/// Largest coordinate value (max over prefix entries and tail).
Integer g_max_entry(const GroupElement& a);

/// Prints "[a0,...,ak;t]"; the zero element prints as "[;0]".
std::string g_to_string(const GroupElement& a);

/**
 * The set of coordinates at which a nonnegative group element is positive:
 * finitely many explicit indices plus, when the tail is positive, the whole
 * ray of coordinates from `window` on.
 */
struct SupportSet {
    std::set<std::size_t> indices; // positive positions below `window`
    bool tail = false;             // whole ray [window, infinity) included
    std::size_t window = 0;

    bool empty() const { return indices.empty() && !tail; }
    bool contains(std::size_t i) const {
        if (tail && i >= window) return true;
        return indices.count(i) > 0;
    }
    bool operator==(const SupportSet& o) const {
        return indices == o.indices && tail == o.tail && window == o.window;
    }
};

/// Support of a canonically nonnegative element; throws NegativeElement otherwise.
SupportSet g_support(const GroupElement& a);

bool support_subset(const SupportSet& a, const SupportSet& b);
bool support_intersects(const SupportSet& a, const SupportSet& b);

/// Set difference a \ b (a ray minus a finite set stays a ray with holes).
SupportSet support_difference(const SupportSet& a, const SupportSet& b);

} // namespace modec
