#include "spcrit/enumerate.hpp"
#include "spcrit/graph.hpp"
#include "spcrit/recognize.hpp"
#include "spcrit/sp_expr.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace spcrit;
using testsupport::brute_form;
using testsupport::complete;
using testsupport::cycle;
using testsupport::degree_classes;

namespace {
const SpExpr E = SpExpr::leaf();
const SpExpr H4 = parallel_sum(path_expr(2), path_expr(3)); // C5, terminals at distance 2
} // namespace

TEST(Graph, NormalisesAndRejects)
{
    const Graph g(3, {{2, 0}, {1, 0}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_EQ(g.degree(0), 2);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), MultiEdge);
    EXPECT_THROW(Graph(3, {{1, 1}}), InvalidArgument);
    EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
    EXPECT_THROW(TerminalGraph(g, 1, 1), InvalidArgument);
}

TEST(Graph, Girth)
{
    EXPECT_EQ(girth(complete(3)), 3);
    EXPECT_EQ(girth(cycle(7)), 7);
    EXPECT_FALSE(girth(realize(path_expr(4)).graph));
    EXPECT_EQ(odd_girth(cycle(8)), std::nullopt);
    EXPECT_EQ(odd_girth(cycle(9)), 9);
    // C4 with a pendant 5-cycle: even girth 4, odd girth 5
    EXPECT_EQ(odd_girth(realize(serial_sum(parallel_sum(path_expr(2), path_expr(2)), H4)).graph), 5);
}

TEST(Graph, Connectivity)
{
    EXPECT_TRUE(is_two_connected(cycle(5)));
    EXPECT_FALSE(is_two_connected(realize(serial_sum(H4, H4)).graph));
    EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
}

TEST(Graph, Cycles)
{
    EXPECT_TRUE(has_cycle_of_length(complete(4), 4));
    EXPECT_FALSE(has_cycle_of_length(cycle(5), 4));
    int count = 0;
    for_each_cycle(complete(4), 3, [&](std::span<const int>) { ++count; return false; });
    EXPECT_EQ(count, 4);
    count = 0;
    for_each_cycle(complete(5), 5, [&](std::span<const int>) { ++count; return false; });
    EXPECT_EQ(count, 12);
}

TEST(Graph, TwoFiveCyclesSharingVertex)
{
    EXPECT_FALSE(two_c5_sharing_vertex(cycle(5)));
    EXPECT_TRUE(two_c5_sharing_vertex(realize(serial_sum(H4, H4)).graph));
    EXPECT_FALSE(two_c5_sharing_vertex(complete(3)));
}

TEST(Graph, CycleGuard)
{
    EXPECT_THROW(has_cycle_of_length(cycle(31), 5), GuardRefusal);
}

TEST(Graph, TerminalSubgraph)
{
    const TerminalGraph host = realize(serial_sum(H4, E));
    EXPECT_TRUE(contains_terminal_subgraph(host, realize(path_expr(3))));
    EXPECT_FALSE(contains_terminal_subgraph(host, realize(path_expr(2))));
    EXPECT_TRUE(contains_terminal_subgraph(host, realize(path_expr(4))));
    EXPECT_FALSE(contains_terminal_subgraph(realize(path_expr(3)), realize(path_expr(4))));
}

TEST(Recognize, RejectsNonSeriesParallel)
{
    EXPECT_THROW(recognize_sp(TerminalGraph(complete(4), 0, 1)), NotSeriesParallel);
    EXPECT_FALSE(recognize_sp_any(complete(4)));
    EXPECT_THROW(recognize_sp(TerminalGraph(Graph(4, {{0, 1}, {2, 3}}), 0, 1)), NotSeriesParallel);
    // a pendant path hanging off a terminal is not 2-terminal SP
    EXPECT_THROW(recognize_sp(TerminalGraph(Graph(3, {{0, 1}, {1, 2}}), 0, 1)), NotSeriesParallel);
    EXPECT_TRUE(recognize_sp_any(Graph(3, {{0, 1}, {1, 2}})));
}

// recognize(realize(e)) realises to a terminal-isomorphic graph, also after
// relabelling, for every expression with at most 8 edges.
TEST(RecognizeProperty, RoundTripUpToEightEdges)
{
    std::mt19937 rng(7);
    std::vector<int> perm;
    for (const auto& e : enumerate_expressions(8)) {
        const TerminalGraph tg = realize(e);
        const Graph shuffled = testsupport::relabel(tg.graph, perm, rng);
        const TerminalGraph input(shuffled, perm[tg.s], perm[tg.t]);
        const SpExpr back = recognize_sp(input);
        ASSERT_EQ(canonical_key(back), canonical_key(e)) << to_string(e);
        const TerminalGraph again = realize(back);
        ASSERT_EQ(brute_form(again.graph, degree_classes(again.graph, std::pair{again.s, again.t})),
                  brute_form(tg.graph, degree_classes(tg.graph, std::pair{tg.s, tg.t})));
    }
}
