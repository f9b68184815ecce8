#include "spcrit/cyc_ring.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

using namespace spcrit;

namespace {

// plain std::set reference arithmetic
std::set<int> as_set(const SymSet& s)
{
    const auto e = s.elements();
    return {e.begin(), e.end()};
}

std::set<int> ref_sum(const std::set<int>& a, const std::set<int>& b, int n)
{
    std::set<int> out;
    for (int x : a)
        for (int y : b)
            out.insert((x + y) % n);
    return out;
}

std::set<int> ref_shift(const std::set<int>& q, const std::set<int>& s, int n)
{
    std::set<int> out;
    for (int x = 0; x < n; ++x)
        for (int y : s)
            if (q.count((x + y) % n))
                out.insert(x);
    return out;
}

SymSet S(CycleOrder o, const char* text) { return parse_sym_set(o, text); }

} // namespace

TEST(CycleOrder, RejectsOutOfRange)
{
    EXPECT_THROW(CycleOrder(0), InvalidArgument);
    EXPECT_THROW(CycleOrder(31), InvalidArgument);
    EXPECT_EQ(CycleOrder(2).n(), 5);
    EXPECT_EQ(CycleOrder(30).n(), 61);
}

TEST(SymSet, ClosureExamples)
{
    const CycleOrder k2(2), k3(3);
    EXPECT_EQ(as_set(make_sym_set(k2, std::vector<int>{1})), (std::set<int>{1, 4}));
    EXPECT_EQ(as_set(make_sym_set(k2, std::vector<int>{0})), (std::set<int>{0}));
    EXPECT_EQ(as_set(make_sym_set(k3, std::vector<int>{1, 3})), (std::set<int>{1, 3, 4, 6}));
    EXPECT_THROW(make_sym_set(k2, std::vector<int>{5}), InvalidArgument);
    EXPECT_THROW(SymSet::from_bits(k2, 0b00010), InvariantViolation);
}

TEST(SymSet, SumExamples)
{
    const CycleOrder k2(2);
    EXPECT_EQ(mink_sum(S(k2, "s1"), S(k2, "s1")), S(k2, "sb1"));
    EXPECT_EQ(to_string(S(k2, "sb1")), "{0,2,3}");
    EXPECT_EQ(mink_sum(S(k2, "s1"), S(k2, "s2")), S(k2, "sb0"));
    EXPECT_EQ(mink_sum(S(k2, "sb1"), S(k2, "sb2")), SymSet::full(k2));
    for (int k = 1; k <= 5; ++k) {
        const CycleOrder o(k);
        for (const auto& x : enumerate_symmetric_subsets(o, false))
            EXPECT_EQ(mink_sum(SymSet::orbit(o, 0), x), x);
    }
}

TEST(SymSet, IntersectExamples)
{
    const CycleOrder k2(2), k3(3);
    EXPECT_EQ(intersect(S(k2, "sb1"), S(k2, "sb2")), S(k2, "s0"));
    EXPECT_TRUE(intersect(S(k2, "s1"), S(k2, "sb1")).is_empty());
    EXPECT_EQ(as_set(intersect(S(k3, "sb0"), S(k3, "sb1"))), (std::set<int>{2, 3, 4, 5}));
}

TEST(SymSet, ShiftHitsExamples)
{
    const CycleOrder k3(3);
    const SymSet q = unite(S(k3, "s1"), S(k3, "s3"));
    EXPECT_EQ(shift_hits(q, S(k3, "s1")), S(k3, "sb1"));
    EXPECT_THROW(shift_hits(q, SymSet::empty(k3)), InvalidArgument);
}

TEST(SymSet, OrderMismatch)
{
    EXPECT_THROW(mink_sum(SymSet::full(CycleOrder(2)), SymSet::full(CycleOrder(3))), OrderMismatch);
    EXPECT_THROW(intersect(SymSet::full(CycleOrder(2)), SymSet::full(CycleOrder(3))), OrderMismatch);
}

TEST(SymSet, SubsetCounts)
{
    EXPECT_EQ(enumerate_symmetric_subsets(CycleOrder(2), true).size(), 6u);
    EXPECT_EQ(enumerate_symmetric_subsets(CycleOrder(3), false).size(), 16u);
}

TEST(SymSet, TextRoundTrip)
{
    for (int k = 1; k <= 4; ++k) {
        const CycleOrder o(k);
        for (const auto& x : enumerate_symmetric_subsets(o, false)) {
            EXPECT_EQ(parse_sym_set(o, to_string(x)), x);
            EXPECT_EQ(parse_sym_set(o, alias(x)), x);
        }
    }
    EXPECT_THROW(parse_sym_set(CycleOrder(2), "{1}"), InvariantViolation);
    EXPECT_THROW(parse_sym_set(CycleOrder(2), "s9"), InvalidArgument);
}

// Properties against the std::set reference, exhaustive for k <= 5.
TEST(SymSetProperty, ArithmeticMatchesReference)
{
    for (int k = 1; k <= 5; ++k) {
        const CycleOrder o(k);
        const auto all = enumerate_symmetric_subsets(o, false);
        for (const auto& a : all)
            for (const auto& b : all) {
                const SymSet sum = mink_sum(a, b);
                ASSERT_EQ(as_set(sum), ref_sum(as_set(a), as_set(b), o.n()));
                ASSERT_EQ(mink_sum(b, a), sum);
                if (!b.is_empty()) {
                    ASSERT_EQ(as_set(shift_hits(a, b)), ref_shift(as_set(a), as_set(b), o.n()));
                }
                ASSERT_EQ(intersect(a, b).bits(), a.bits() & b.bits());
            }
    }
}

TEST(SymSetProperty, SumIsMonotone)
{
    for (int k = 1; k <= 4; ++k) {
        const CycleOrder o(k);
        const auto all = enumerate_symmetric_subsets(o, false);
        for (const auto& a : all)
            for (const auto& a2 : all) {
                if (!a.subset_of(a2))
                    continue;
                for (const auto& b : all)
                    ASSERT_TRUE(mink_sum(a, b).subset_of(mink_sum(a2, b)));
            }
    }
}

TEST(SymSetProperty, ComplementOfShiftInsideShiftOfComplement)
{
    for (int k = 1; k <= 5; ++k) {
        const CycleOrder o(k);
        const auto all = enumerate_symmetric_subsets(o, false);
        for (const auto& q : all)
            for (const auto& s : all)
                if (!s.is_empty()) {
                    ASSERT_TRUE(complement(shift_hits(q, s)).subset_of(shift_hits(complement(q), s)))
                        << "k=" << k << " Q=" << to_string(q) << " S=" << to_string(s);
                }
    }
}

// Pinned independently of the library: sums of s(i) orbits in Z5 listed by hand.
TEST(SymSet, SumTableZ5)
{
    const CycleOrder o(2);
    const char* names[] = {"s0", "s1", "s2", "sb0", "sb1", "sb2"};
    const char* table[6][6] = {
        {"s0", "s1", "s2", "sb0", "sb1", "sb2"}, {"s1", "sb1", "sb0", "Z", "sb0", "Z"},
        {"s2", "sb0", "sb2", "Z", "Z", "sb0"},   {"sb0", "Z", "Z", "Z", "Z", "Z"},
        {"sb1", "sb0", "Z", "Z", "Z", "Z"},      {"sb2", "Z", "sb0", "Z", "Z", "Z"},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            EXPECT_EQ(alias(mink_sum(S(o, names[i]), S(o, names[j]))), table[i][j]) << names[i] << "+" << names[j];
}
