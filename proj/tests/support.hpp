#pragma once

// Brute-force reference helpers shared by the unit tests. Nothing here
// reuses the library's canonical forms.

#include "spcrit/graph.hpp"
#include "spcrit/sp_expr.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

using spcrit::Edge;
using spcrit::Graph;

/// Minimum upper-triangle adjacency bitstring over every relabelling that
/// keeps vertices inside their class. Classes are ordered by their sort
/// key, so two graphs get equal forms iff an isomorphism maps each class
/// onto the class with the same key.
inline std::pair<std::vector<std::pair<int, int>>, std::uint64_t>
brute_form(const Graph& g, const std::vector<int>& class_key)
{
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return class_key[a] < class_key[b]; });
    std::vector<std::pair<int, int>> blocks; // [begin, end) in order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && class_key[order[j]] == class_key[order[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<std::pair<int, int>> signature;
    for (auto [b, e] : blocks)
        signature.emplace_back(class_key[order[b]], e - b);

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> pos(static_cast<std::size_t>(n));
    // odometer over per-block permutations
    for (auto [b, e] : blocks)
        std::sort(order.begin() + b, order.begin() + e);
    for (;;) {
        for (int i = 0; i < n; ++i)
            pos[order[i]] = i;
        std::uint64_t bits = 0;
        for (const auto& [u, v] : g.edges()) {
            int a = pos[u], c = pos[v];
            if (a > c)
                std::swap(a, c);
            bits |= std::uint64_t{1} << (c * (c - 1) / 2 + a);
        }
        best = std::min(best, bits);
        std::size_t blk = 0;
        for (; blk < blocks.size(); ++blk) {
            auto [b, e] = blocks[blk];
            if (std::next_permutation(order.begin() + b, order.begin() + e))
                break;
        }
        if (blk == blocks.size())
            break;
    }
    return {signature, best};
}

/// Degree classes, with terminals (if any) in a class of their own.
inline std::vector<int> degree_classes(const Graph& g, std::optional<std::pair<int, int>> terminals)
{
    std::vector<int> key(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        key[v] = 1 + g.degree(v);
    if (terminals)
        key[terminals->first] = key[terminals->second] = 0;
    return key;
}

/// Deterministic pseudo-random relabelling.
inline Graph relabel(const Graph& g, std::vector<int>& perm, std::mt19937& rng)
{
    perm.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), edges);
}

inline Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

// true if s and t are joined by an edge
inline bool has_st_edge(const spcrit::SpExpr& e)
{
    if (e.is_leaf())
        return true;
    if (e.kind() != spcrit::NodeKind::Parallel)
        return false;
    for (const auto& c : e.children())
        if (c.is_leaf())
            return true;
    return false;
}

} // namespace testsupport
