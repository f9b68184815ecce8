#include "spcrit/enumerate.hpp"
#include "spcrit/graph.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace spcrit;
using testsupport::brute_form;

namespace {

using Form = std::pair<std::vector<std::pair<int, int>>, std::uint64_t>;

struct Directed {
    Graph g;
    int s, t;
};

Form ordered_form(const Directed& d)
{
    std::vector<int> key(static_cast<std::size_t>(d.g.vertex_count()));
    for (int v = 0; v < d.g.vertex_count(); ++v)
        key[v] = 2 + d.g.degree(v);
    key[d.s] = 0;
    key[d.t] = 1;
    return brute_form(d.g, key);
}

Form unordered_form(const Directed& d)
{
    return brute_form(d.g, testsupport::degree_classes(d.g, std::pair{d.s, d.t}));
}

// Glue two directed graphs: serial identifies a.t with b.s, parallel
// identifies both terminal pairs. Returns nullopt on a multi-edge.
std::optional<Directed> glue(const Directed& a, const Directed& b, bool serial)
{
    const int n = a.g.vertex_count();
    std::vector<int> map_b(static_cast<std::size_t>(b.g.vertex_count()), -1);
    int next = n;
    map_b[b.s] = serial ? a.t : a.s;
    if (!serial)
        map_b[b.t] = a.t;
    for (int v = 0; v < b.g.vertex_count(); ++v)
        if (map_b[v] < 0)
            map_b[v] = next++;
    std::set<Edge> edges(a.g.edges().begin(), a.g.edges().end());
    for (const auto& [u, v] : b.g.edges()) {
        Edge e{std::min(map_b[u], map_b[v]), std::max(map_b[u], map_b[v])};
        if (!edges.insert(e).second)
            return std::nullopt;
    }
    return Directed{Graph(next, std::vector<Edge>(edges.begin(), edges.end())), a.s, serial ? map_b[b.t] : a.t};
}

// Unordered 2-terminal SP classes per edge count, closing {K2} under both
// sums with brute-force deduplication.
std::vector<std::size_t> reference_counts(int max_edges)
{
    std::vector<std::map<Form, Directed>> by_m(static_cast<std::size_t>(max_edges) + 1);
    by_m[1].emplace(ordered_form({Graph(2, {{0, 1}}), 0, 1}), Directed{Graph(2, {{0, 1}}), 0, 1});
    for (int m = 2; m <= max_edges; ++m)
        for (int m1 = 1; m1 < m; ++m1)
            for (const auto& [fa, a] : by_m[m1])
                for (const auto& [fb, b] : by_m[m - m1])
                    for (bool serial : {true, false})
                        if (auto d = glue(a, b, serial))
                            by_m[m].emplace(ordered_form(*d), *d);
    std::vector<std::size_t> out(static_cast<std::size_t>(max_edges) + 1, 0);
    for (int m = 1; m <= max_edges; ++m) {
        std::set<Form> unordered;
        for (const auto& [f, d] : by_m[m])
            unordered.insert(unordered_form(d));
        out[m] = unordered.size();
    }
    return out;
}

} // namespace

TEST(Enumerate, SmallCases)
{
    auto names = [](int m) {
        std::set<std::string> out;
        for (const auto& e : enumerate_expressions(m))
            out.insert(to_string(e));
        return out;
    };
    EXPECT_EQ(names(1), (std::set<std::string>{"E"}));
    EXPECT_EQ(names(2), (std::set<std::string>{"E", "S(E,E)"}));
    const auto three = names(3);
    EXPECT_EQ(three.size(), 4u);
    EXPECT_TRUE(three.count("S(E,E,E)"));
    EXPECT_TRUE(three.count("P(E,S(E,E))"));
}

TEST(Enumerate, CountsMatchBruteForceClosure)
{
    const int max_edges = 7;
    const auto ref = reference_counts(max_edges);
    std::vector<std::size_t> got(static_cast<std::size_t>(max_edges) + 1, 0);
    for (const auto& e : enumerate_expressions(max_edges))
        ++got[static_cast<std::size_t>(e.edge_count())];
    for (int m = 1; m <= max_edges; ++m)
        EXPECT_EQ(got[m], ref[m]) << "m=" << m;
    EXPECT_EQ(got[4], 4u);
    EXPECT_EQ(got[7], 60u);
}

TEST(Enumerate, VertexCapBinds)
{
    for (const auto& e : enumerate_expressions(SizeBound{5, 10})) {
        EXPECT_LE(e.vertex_count(), 5);
        EXPECT_LE(e.edge_count(), 10);
    }
    // every graph on at most 5 vertices has at most 2*5-3 = 7 edges
    EXPECT_EQ(enumerate_expressions(SizeBound{5, 10}).size(), enumerate_expressions(SizeBound{5, 7}).size());
    EXPECT_THROW(ExpressionStrata(SizeBound{1, 3}), InvalidArgument);
}

TEST(Enumerate, OneExpressionPerKey)
{
    std::set<CanonKey> keys;
    for (const auto& e : enumerate_expressions(SizeBound{10, 12})) {
        ASSERT_TRUE(is_canonical_orientation(e));
        ASSERT_TRUE(keys.insert(canonical_key(e)).second) << to_string(e);
    }
}
