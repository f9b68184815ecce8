#pragma once

/// \file cyc_ring.hpp
/// \brief Symmetric subsets of Z_{2k+1} and the set algebra used by forced sets.
///
/// A set is stored as one bit per residue. Every constructor checks closure
/// under negation, so an asymmetric intermediate is reported instead of being
/// silently folded onto its orbits.

#include "error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spcrit {

/// The target cycle C_n with n = 2k+1.
class CycleOrder {
public:
    static constexpr int max_k = 30;

    explicit CycleOrder(int k) : k_(k)
    {
        if (k < 1 || k > max_k)
            throw InvalidArgument("cycle order k must lie in 1.." + std::to_string(max_k) + ", got " +
                                  std::to_string(k));
    }

    int k() const noexcept { return k_; }
    int n() const noexcept { return 2 * k_ + 1; }

    /// Bit mask with one bit per residue 0..n-1.
    std::uint64_t mask() const noexcept { return (std::uint64_t{1} << n()) - 1; }

    int neg(int x) const noexcept { return x == 0 ? 0 : n() - x; }
    int add(int x, int y) const noexcept { return (x + y) % n(); }

    friend bool operator==(CycleOrder, CycleOrder) = default;
    friend auto operator<=>(CycleOrder, CycleOrder) = default;

private:
    int k_;
};

namespace detail {

inline std::uint64_t rotate_left(std::uint64_t bits, int by, CycleOrder order) noexcept
{
    const int n = order.n();
    by %= n;
    if (by == 0)
        return bits;
    return ((bits << by) | (bits >> (n - by))) & order.mask();
}

inline std::uint64_t negate_bits(std::uint64_t bits, CycleOrder order) noexcept
{
    std::uint64_t out = bits & 1u;
    for (int x = 1; x < order.n(); ++x)
        if (bits >> x & 1u)
            out |= std::uint64_t{1} << (order.n() - x);
    return out;
}

} // namespace detail

/// A subset of Z_n closed under x -> -x.
class SymSet {
public:
    explicit SymSet(CycleOrder order) : order_(order), bits_(0) {}

    /// Throws InvariantViolation if \p bits is not closed under negation.
    static SymSet from_bits(CycleOrder order, std::uint64_t bits)
    {
        if (bits & ~order.mask())
            throw InvalidArgument("residue bit beyond modulus " + std::to_string(order.n()));
        if (detail::negate_bits(bits, order) != bits)
            throw InvariantViolation("set is not closed under negation");
        SymSet s(order);
        s.bits_ = bits;
        return s;
    }

    /// Symmetric closure of \p elems; every element must lie in 0..n-1.
    static SymSet closure(CycleOrder order, std::span<const int> elems)
    {
        std::uint64_t bits = 0;
        for (int x : elems) {
            if (x < 0 || x >= order.n())
                throw InvalidArgument("residue " + std::to_string(x) + " out of range 0.." +
                                      std::to_string(order.n() - 1));
            bits |= std::uint64_t{1} << x;
            bits |= std::uint64_t{1} << order.neg(x);
        }
        return from_bits(order, bits);
    }

    static SymSet closure(CycleOrder order, std::initializer_list<int> elems)
    {
        return closure(order, std::span<const int>(elems.begin(), elems.size()));
    }

    static SymSet empty(CycleOrder order) { return SymSet(order); }
    static SymSet full(CycleOrder order) { return from_bits(order, order.mask()); }

    /// s(i) = {i, -i}
    static SymSet orbit(CycleOrder order, int i)
    {
        const int r = ((i % order.n()) + order.n()) % order.n();
        return closure(order, {r});
    }

    /// sb(i) = Z_n \ {i, -i}
    static SymSet orbit_complement(CycleOrder order, int i)
    {
        return from_bits(order, order.mask() & ~orbit(order, i).bits());
    }

    CycleOrder order() const noexcept { return order_; }
    std::uint64_t bits() const noexcept { return bits_; }

    bool contains(int x) const noexcept { return x >= 0 && x < order_.n() && (bits_ >> x & 1u); }
    int size() const noexcept { return std::popcount(bits_); }
    bool is_empty() const noexcept { return bits_ == 0; }
    bool is_full() const noexcept { return bits_ == order_.mask(); }

    bool subset_of(const SymSet& other) const
    {
        check_same(other);
        return (bits_ & ~other.bits_) == 0;
    }

    bool intersects(const SymSet& other) const
    {
        check_same(other);
        return (bits_ & other.bits_) != 0;
    }

    std::vector<int> elements() const
    {
        std::vector<int> out;
        for (int x = 0; x < order_.n(); ++x)
            if (contains(x))
                out.push_back(x);
        return out;
    }

    void check_same(const SymSet& other) const
    {
        if (order_ != other.order_)
            throw OrderMismatch();
    }

    friend bool operator==(const SymSet&, const SymSet&) = default;
    friend auto operator<=>(const SymSet&, const SymSet&) = default;

private:
    CycleOrder order_;
    std::uint64_t bits_;
};

inline SymSet make_sym_set(CycleOrder order, std::span<const int> elems) { return SymSet::closure(order, elems); }

/// Minkowski sum {x + y | x in a, y in b} mod n.
inline SymSet mink_sum(const SymSet& a, const SymSet& b)
{
    a.check_same(b);
    std::uint64_t out = 0;
    for (int x = 0; x < a.order().n(); ++x)
        if (a.contains(x))
            out |= detail::rotate_left(b.bits(), x, a.order());
    return SymSet::from_bits(a.order(), out);
}

inline SymSet intersect(const SymSet& a, const SymSet& b)
{
    a.check_same(b);
    return SymSet::from_bits(a.order(), a.bits() & b.bits());
}

inline SymSet unite(const SymSet& a, const SymSet& b)
{
    a.check_same(b);
    return SymSet::from_bits(a.order(), a.bits() | b.bits());
}

inline SymSet difference(const SymSet& a, const SymSet& b)
{
    a.check_same(b);
    return SymSet::from_bits(a.order(), a.bits() & ~b.bits());
}

inline SymSet complement(const SymSet& a)
{
    return SymSet::from_bits(a.order(), a.order().mask() & ~a.bits());
}

/// Q_S = { x | (x + S) meets Q }.
inline SymSet shift_hits(const SymSet& q, const SymSet& s)
{
    q.check_same(s);
    if (s.is_empty())
        throw InvalidArgument("shift set must be nonempty");
    const CycleOrder order = q.order();
    std::uint64_t out = 0;
    for (int x = 0; x < order.n(); ++x)
        if (detail::rotate_left(s.bits(), x, order) & q.bits())
            out |= std::uint64_t{1} << x;
    return SymSet::from_bits(order, out);
}

/// All symmetric subsets, in increasing bit order. With \p proper_nonempty
/// the empty set and Z_n are dropped.
inline std::vector<SymSet> enumerate_symmetric_subsets(CycleOrder order, bool proper_nonempty)
{
    // one free bit per negation orbit {0}, {±1}, ..., {±k}
    const int orbits = order.k() + 1;
    std::vector<SymSet> out;
    out.reserve(std::size_t{1} << orbits);
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << orbits); ++pick) {
        std::uint64_t bits = 0;
        for (int i = 0; i < orbits; ++i)
            if (pick >> i & 1u)
                bits |= SymSet::orbit(order, i).bits();
        SymSet s = SymSet::from_bits(order, bits);
        if (proper_nonempty && (s.is_empty() || s.is_full()))
            continue;
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Canonical text: ascending residues, e.g. "{0,2,3}".
inline std::string to_string(const SymSet& s)
{
    std::string out = "{";
    bool first = true;
    for (int x : s.elements()) {
        if (!first)
            out += ',';
        out += std::to_string(x);
        first = false;
    }
    out += '}';
    return out;
}

/// Short name: "s<i>", "sb<i>", "Z" for the full ring, else the canonical text.
inline std::string alias(const SymSet& s)
{
    if (s.is_full())
        return "Z";
    for (int i = 0; i <= s.order().k(); ++i) {
        if (s == SymSet::orbit(s.order(), i))
            return "s" + std::to_string(i);
        if (s == SymSet::orbit_complement(s.order(), i))
            return "sb" + std::to_string(i);
    }
    return to_string(s);
}

/// Accepts "{a,b,...}" (closure is NOT taken: the list must already be
/// symmetric), "s<i>", "sb<i>" and "Z".
inline SymSet parse_sym_set(CycleOrder order, std::string_view text)
{
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t'))
            v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t'))
            v.remove_suffix(1);
        return v;
    };
    auto parse_int = [&](std::string_view v, std::size_t col) {
        int value = 0;
        v = trim(v);
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
        if (ec != std::errc() || ptr != v.data() + v.size())
            throw ParseError("expected integer in set '" + std::string(text) + "'", 1, col);
        return value;
    };

    text = trim(text);
    if (text == "Z")
        return SymSet::full(order);
    auto residue = [&](int i) {
        if (i < 0 || i >= order.n())
            throw InvalidArgument("orbit index " + std::to_string(i) + " out of range 0.." +
                                  std::to_string(order.n() - 1));
        return i;
    };
    if (text.starts_with("sb"))
        return SymSet::orbit_complement(order, residue(parse_int(text.substr(2), 3)));
    if (text.starts_with("s"))
        return SymSet::orbit(order, residue(parse_int(text.substr(1), 2)));
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("expected '{...}', 's<i>', 'sb<i>' or 'Z', got '" + std::string(text) + "'", 1, 1);

    std::string_view body = trim(text.substr(1, text.size() - 2));
    std::uint64_t bits = 0;
    std::size_t col = 2;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const int x = parse_int(body.substr(0, comma), col);
        if (x < 0 || x >= order.n())
            throw InvalidArgument("residue " + std::to_string(x) + " out of range 0.." +
                                  std::to_string(order.n() - 1));
        bits |= std::uint64_t{1} << x;
        if (comma == std::string_view::npos)
            break;
        col += comma + 1;
        body.remove_prefix(comma + 1);
    }
    return SymSet::from_bits(order, bits);
}

} // namespace spcrit

template <>
struct std::hash<spcrit::SymSet> {
    std::size_t operator()(const spcrit::SymSet& s) const noexcept
    {
        return std::hash<std::uint64_t>{}(s.bits() * 64 + static_cast<std::uint64_t>(s.order().k()));
    }
};
