#include "spcrit/canon.hpp"
#include "spcrit/enumerate.hpp"
#include "spcrit/graph.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace spcrit;
using testsupport::brute_form;
using testsupport::degree_classes;

using Form = std::pair<std::vector<std::pair<int, int>>, std::uint64_t>;

// Enumeration emits one expression per canonical key, so the keys separate
// isomorphism classes iff no two emitted graphs are terminal-isomorphic.
TEST(CanonProperty, DirectedKeysSeparateClassesUpToNineVertices)
{
    std::map<Form, std::string> seen;
    std::set<CanonKey> keys;
    for (const auto& e : enumerate_expressions(SizeBound{9, 15})) {
        const TerminalGraph tg = realize(e);
        const Form f = brute_form(tg.graph, degree_classes(tg.graph, std::pair{tg.s, tg.t}));
        const auto [it, fresh] = seen.emplace(f, to_string(e));
        ASSERT_TRUE(fresh) << to_string(e) << " is isomorphic to " << it->second;
        ASSERT_TRUE(keys.insert(canonical_key(e)).second);
        ASSERT_EQ(canonical_key(reversed(e)), canonical_key(e));
    }
    EXPECT_EQ(seen.size(), 29403u);
}

TEST(CanonProperty, GraphKeyMatchesBruteForceUpToEightVertices)
{
    std::map<CanonKey, Form> by_key;
    std::map<Form, CanonKey> by_form;
    std::mt19937 rng(11);
    std::vector<int> perm;
    for (const auto& e : enumerate_expressions(SizeBound{8, 13})) {
        const Graph g = realize(e).graph;
        const CanonKey key = graph_key(g);
        const Form f = brute_form(g, degree_classes(g, std::nullopt));
        const auto [a, fa] = by_key.emplace(key, f);
        ASSERT_EQ(a->second, f) << to_string(e);
        const auto [b, fb] = by_form.emplace(f, key);
        ASSERT_EQ(b->second, key) << to_string(e);
        if (fa) {
            ASSERT_EQ(graph_key(testsupport::relabel(g, perm, rng)), key);
        }
    }
    EXPECT_EQ(by_key.size(), by_form.size());
}

TEST(Canon, FallbackForNonSeriesParallel)
{
    const Graph k4 = testsupport::complete(4);
    EXPECT_EQ(graph_key(k4).bytes.substr(0, 3), "cf:");
    // Petersen graph, two labellings
    const std::vector<Edge> outer{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                  {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
    const Graph petersen(10, outer);
    std::mt19937 rng(3);
    std::vector<int> perm;
    for (int i = 0; i < 5; ++i)
        EXPECT_EQ(graph_key(testsupport::relabel(petersen, perm, rng)), graph_key(petersen));
    EXPECT_NE(graph_key(petersen), graph_key(testsupport::cycle(10)));
}

TEST(Canon, SeriesParallelKeysArePrefixed)
{
    EXPECT_EQ(graph_key(testsupport::cycle(5)).bytes.substr(0, 3), "sp:");
    EXPECT_EQ(graph_key(testsupport::complete(3)), graph_key(realize(parallel_sum(SpExpr::leaf(), path_expr(2))).graph));
}

TEST(Canon, Guard)
{
    EXPECT_THROW(canonical_form(testsupport::cycle(31)), GuardRefusal);
}
