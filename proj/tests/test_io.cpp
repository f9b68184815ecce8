#include "spcrit/enumerate.hpp"
#include "spcrit/graph_io.hpp"
#include "spcrit/json_io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace spcrit;

namespace {

const SpExpr K3 = parallel_sum(SpExpr::leaf(), path_expr(2));

int error_line(std::string_view text)
{
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return static_cast<int>(e.line()) * 100 + static_cast<int>(e.column());
    }
    return -1;
}

} // namespace

TEST(EdgeList, EmitsSpecLayout)
{
    EXPECT_EQ(emit_edge_list(realize(K3)), "n=3 s=0 t=1\n0 1\n0 2\n1 2\n");
    EXPECT_EQ(emit_edge_list(testsupport::cycle(4), std::nullopt), "n=4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST(EdgeList, ParsesLooseForms)
{
    const auto a = parse_edge_list("3; 0 1; 1 2; 0 2; terminals 0 1");
    EXPECT_EQ(a.graph.edges(), realize(K3).graph.edges());
    EXPECT_EQ(a.terminals, (std::pair{0, 1}));
    const auto b = parse_edge_list("# a triangle\nn=3 s=2 t=0\n2 1   # reversed\n\n1 0\n0 2\n");
    EXPECT_EQ(b.graph.edges(), a.graph.edges());
    EXPECT_EQ(b.terminals, (std::pair{2, 0}));
    EXPECT_FALSE(parse_edge_list("n=2\n0 1\n").terminals);
}

TEST(EdgeList, ErrorsCarryPositions)
{
    EXPECT_EQ(error_line("n=3\n0 1\n0 x\n"), 303);
    EXPECT_EQ(error_line("n=3\n0 1\n0 5\n"), 301);
    EXPECT_EQ(error_line("n=3\n0 1 2\n"), 201);
    EXPECT_EQ(error_line("n=3 q=1\n"), 105);
    EXPECT_EQ(error_line("n=3\n1 1\n"), 201);
    EXPECT_EQ(error_line("n=3 s=0 t=0\n0 1\n"), 101);
    EXPECT_THROW(parse_edge_list("n=3\n0 1\n1 0\n"), ParseError);
    EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(Graph6, KnownEncodings)
{
    EXPECT_EQ(emit_graph6(testsupport::complete(3)), "Bw");
    EXPECT_EQ(emit_graph6(realize(K3)), "Bw\nt 0 1\n");
    const std::vector<Edge> pe{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
    const Graph petersen(10, pe);
    const Graph decoded = decode_graph6("IheA@GUAo");
    EXPECT_EQ(decoded.edge_count(), 15);
    for (int v = 0; v < 10; ++v)
        EXPECT_EQ(decoded.degree(v), 3);
    EXPECT_EQ(graph_key(decoded), graph_key(petersen));
    EXPECT_EQ(emit_graph6(decoded), "IheA@GUAo");
    EXPECT_EQ(emit_graph6(Graph(63, {})).substr(0, 4), "~??~");
    EXPECT_EQ(emit_graph6(Graph(1, {})), "@");
}

TEST(Graph6, RoundTrips)
{
    for (int n : {0, 1, 2, 62, 63, 64, 100}) {
        const Graph g = n >= 3 ? testsupport::cycle(n) : Graph(n, n == 2 ? std::vector<Edge>{{0, 1}} : std::vector<Edge>{});
        EXPECT_EQ(decode_graph6(emit_graph6(g)).edges(), g.edges()) << n;
    }
    for (const auto& e : enumerate_expressions(8)) {
        const TerminalGraph tg = realize(e);
        const auto back = parse_graph(emit_graph6(tg));
        ASSERT_EQ(back.graph.edges(), tg.graph.edges());
        ASSERT_EQ(back.terminals, (std::pair{tg.s, tg.t}));
    }
}

TEST(Graph6, Errors)
{
    EXPECT_THROW(parse_graph6("Bw\nt 0 0\n"), ParseError);
    EXPECT_THROW(parse_graph6("Bww\n"), ParseError);
    EXPECT_THROW(parse_graph6("Bw\nq 0 1\n"), ParseError);
    EXPECT_THROW(decode_graph6("~?"), ParseError);
}

TEST(Dot, RoundTripsWithTerminals)
{
    for (const auto& e : enumerate_expressions(7)) {
        const TerminalGraph tg = realize(reversed(e));
        const std::string text = emit_dot(tg);
        ASSERT_NE(text.find("doublecircle"), std::string::npos);
        const auto back = parse_graph(text);
        ASSERT_EQ(back.graph.edges(), tg.graph.edges());
        ASSERT_EQ(back.terminals, (std::pair{tg.s, tg.t}));
    }
    EXPECT_THROW(parse_dot("digraph { 0 -> 1 }"), ParseError);
    EXPECT_THROW(parse_dot("graph G { 0 -- }"), ParseError);
}

TEST(Json, GraphRoundTrip)
{
    const TerminalGraph tg = realize(serial_sum(K3, K3));
    const auto [g, terms] = graph_from_json(graph_to_json(tg));
    EXPECT_EQ(g.edges(), tg.graph.edges());
    EXPECT_EQ(terms, (std::pair{tg.s, tg.t}));
    EXPECT_THROW(graph_from_json(json{{"n", 2}}), InvalidArgument);
}

TEST(Detect, Formats)
{
    EXPECT_EQ(detect_format("Bw\nt 0 1\n"), GraphFormat::Graph6);
    EXPECT_EQ(detect_format("n=3\n0 1\n"), GraphFormat::EdgeList);
    EXPECT_EQ(detect_format("3; 0 1"), GraphFormat::EdgeList);
    EXPECT_EQ(detect_format("graph G {\n}\n"), GraphFormat::Dot);
}
