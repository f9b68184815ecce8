#pragma once

/// \file recognize.hpp
/// \brief Series-parallel recognition by series/parallel reduction.

#include "graph.hpp"
#include "sp_expr.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace spcrit {

namespace detail {

struct ReductionEdge {
    int u;
    int v;
    SpExpr expr; // read from u to v
    bool alive;
};

inline SpExpr oriented(const ReductionEdge& e, int from) { return e.u == from ? e.expr : reversed(e.expr); }

inline std::optional<SpExpr> try_reduce(const TerminalGraph& tg)
{
    const Graph& g = tg.graph;
    const int n = g.vertex_count();
    std::vector<ReductionEdge> edges;
    edges.reserve(static_cast<std::size_t>(2 * g.edge_count()));
    for (auto [u, v] : g.edges())
        edges.push_back({u, v, SpExpr::leaf(), true});
    std::vector<char> removed(static_cast<std::size_t>(n), 0);

    auto alive_count = [&] {
        int c = 0;
        for (const auto& e : edges)
            c += e.alive ? 1 : 0;
        return c;
    };

    for (;;) {
        bool progress = false;

        // merge parallel edges
        std::map<std::pair<int, int>, std::size_t> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto& e = edges[i];
            if (!e.alive)
                continue;
            const auto key = std::minmax(e.u, e.v);
            auto [it, inserted] = seen.emplace(key, i);
            if (inserted)
                continue;
            auto& keep = edges[it->second];
            keep.expr = parallel_sum(keep.expr, oriented(e, keep.u));
            e.alive = false;
            progress = true;
        }

        // contract internal vertices of degree two
        std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].alive) {
                incident[edges[i].u].push_back(i);
                incident[edges[i].v].push_back(i);
            }
        for (int v = 0; v < n; ++v) {
            if (v == tg.s || v == tg.t || removed[v])
                continue;
            if (incident[v].size() < 2)
                return std::nullopt; // dangling piece off every s-t path
            if (incident[v].size() != 2)
                continue;
            auto& e1 = edges[incident[v][0]];
            auto& e2 = edges[incident[v][1]];
            if (!e1.alive || !e2.alive)
                continue; // touched earlier in this sweep
            const int a = e1.u == v ? e1.v : e1.u;
            const int b = e2.u == v ? e2.v : e2.u;
            if (a == b)
                continue; // merged on the next sweep
            SpExpr joined = serial_sum(oriented(e1, a), oriented(e2, v));
            e1.alive = false;
            e2.alive = false;
            removed[v] = 1;
            edges.push_back({a, b, std::move(joined), true});
            // incident lists of a and b are stale now; finish this sweep
            progress = true;
            break;
        }

        if (alive_count() == 1)
            break;
        if (!progress)
            return std::nullopt;
    }

    for (const auto& e : edges) {
        if (!e.alive)
            continue;
        if (std::minmax(e.u, e.v) != std::minmax(tg.s, tg.t))
            return std::nullopt;
        return oriented(e, tg.s);
    }
    return std::nullopt;
}

} // namespace detail

/// Decomposes (G, s, t) into an SpExpr read from s to t. Throws
/// NotSeriesParallel if the reduction stalls.
inline SpExpr recognize_sp(const TerminalGraph& tg)
{
    const Graph& g = tg.graph;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw NotSeriesParallel("vertex " + std::to_string(v) + " is isolated");
    if (!is_connected(g))
        throw NotSeriesParallel("graph is disconnected");
    if (auto e = detail::try_reduce(tg))
        return *e;
    throw NotSeriesParallel("series/parallel reduction stalls for terminals " + std::to_string(tg.s) + ", " +
                            std::to_string(tg.t));
}

struct Recognized {
    SpExpr expr;
    int s;
    int t;
};

/// Tries every terminal pair (s < t, lexicographic) and returns the first
/// that reduces; nullopt if none does.
inline std::optional<Recognized> recognize_sp_any(const Graph& g)
{
    if (g.edge_count() == 0 || !is_connected(g))
        return std::nullopt;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            return std::nullopt;
    for (int s = 0; s < g.vertex_count(); ++s)
        for (int t = s + 1; t < g.vertex_count(); ++t)
            if (auto e = detail::try_reduce(TerminalGraph(g, s, t)))
                return Recognized{*e, s, t};
    return std::nullopt;
}

} // namespace spcrit
