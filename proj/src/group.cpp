#include "modec/group.hpp"

#include <algorithm>
#include <sstream>

namespace modec {

GroupElement g_canon(std::vector<Integer> prefix, Integer tail) {
    while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
    return GroupElement{std::move(prefix), std::move(tail)};
}

GroupElement g_zero() { return GroupElement{}; }

namespace {

template <typename F>
GroupElement pointwise(const GroupElement& a, const GroupElement& b, F f) {
    std::size_t w = std::max(a.window(), b.window());
    std::vector<Integer> prefix;
    prefix.reserve(w);
    for (std::size_t i = 0; i < w; ++i) prefix.push_back(f(a.at(i), b.at(i)));
    return g_canon(std::move(prefix), f(a.tail, b.tail));
}

} // namespace

GroupElement g_add(const GroupElement& a, const GroupElement& b) {
    return pointwise(a, b, [](const Integer& x, const Integer& y) { return Integer(x + y); });
}

GroupElement g_neg(const GroupElement& a) {
    std::vector<Integer> prefix;
    prefix.reserve(a.window());
    for (const auto& x : a.prefix) prefix.push_back(-x);
    return GroupElement{std::move(prefix), -a.tail};
}

GroupElement g_sub(const GroupElement& a, const GroupElement& b) {
    return g_add(a, g_neg(b));
}

GroupElement g_meet(const GroupElement& a, const GroupElement& b) {
    return pointwise(a, b, [](const Integer& x, const Integer& y) { return std::min(x, y); });
}

GroupElement g_join(const GroupElement& a, const GroupElement& b) {
    return pointwise(a, b, [](const Integer& x, const Integer& y) { return std::max(x, y); });
}

bool g_leq(const GroupElement& a, const GroupElement& b) {
    std::size_t w = std::max(a.window(), b.window());
    for (std::size_t i = 0; i < w; ++i)
        if (a.at(i) > b.at(i)) return false;
    return a.tail <= b.tail;
}

GroupElement g_scale(const Integer& n, const GroupElement& a) {
    if (n < 1) throw PreconditionViolation("g_scale requires n >= 1");
    std::vector<Integer> prefix;
    prefix.reserve(a.window());
    for (const auto& x : a.prefix) prefix.push_back(n * x);
    return GroupElement{std::move(prefix), n * a.tail};
}

bool g_is_zero(const GroupElement& a) { return a.prefix.empty() && a.tail == 0; }

Integer g_max_entry(const GroupElement& a) {
    Integer m = a.tail;
    for (const auto& x : a.prefix) m = std::max(m, x);
    return m;
}

std::string g_to_string(const GroupElement& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.prefix.size(); ++i) {
        if (i) os << ',';
        os << a.prefix[i].get_str();
    }
    os << ';' << a.tail.get_str() << ']';
    return os.str();
}

namespace {

// Normal form: a ray absorbs indices touching it from below, and without a
// ray the window shrinks to just past the largest index. Equal sets then
// compare equal field-by-field.
void support_canon(SupportSet& s) {
    if (s.tail) {
        while (s.window > 0 && s.indices.count(s.window - 1)) {
            s.indices.erase(s.window - 1);
            --s.window;
        }
    } else {
        s.window = s.indices.empty() ? 0 : *s.indices.rbegin() + 1;
    }
}

} // namespace

SupportSet g_support(const GroupElement& a) {
    SupportSet s;
    s.window = a.window();
    for (std::size_t i = 0; i < a.prefix.size(); ++i) {
        if (a.prefix[i] < 0) throw NegativeElement("support of an element with a negative coordinate");
        if (a.prefix[i] > 0) s.indices.insert(i);
    }
    if (a.tail < 0) throw NegativeElement("support of an element with a negative tail");
    s.tail = a.tail > 0;
    support_canon(s);
    return s;
}

bool support_subset(const SupportSet& a, const SupportSet& b) {
    if (a.tail && !b.tail) return false;
    std::size_t w = std::max(a.window, b.window);
    for (std::size_t i = 0; i < w; ++i)
        if (a.contains(i) && !b.contains(i)) return false;
    return true;
}

bool support_intersects(const SupportSet& a, const SupportSet& b) {
    if (a.tail && b.tail) return true;
    std::size_t w = std::max(a.window, b.window);
    for (std::size_t i = 0; i < w; ++i)
        if (a.contains(i) && b.contains(i)) return true;
    return false;
}

SupportSet support_difference(const SupportSet& a, const SupportSet& b) {
    SupportSet r;
    r.window = std::max(a.window, b.window);
    r.tail = a.tail && !b.tail;
    for (std::size_t i = 0; i < r.window; ++i)
        if (a.contains(i) && !b.contains(i)) r.indices.insert(i);
    support_canon(r);
    return r;
}

} // namespace modec
