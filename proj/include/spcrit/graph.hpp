#pragma once

/// \file graph.hpp
/// \brief Simple undirected graphs, 2-terminal graphs, and structural queries.

#include "error.hpp"
#include "sp_expr.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spcrit {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Edges are kept normalised
/// (u < v) and sorted.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
    {
        if (n < 0)
            throw InvalidArgument("negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InvalidArgument("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
            if (u == v)
                throw InvalidArgument("loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw MultiEdge();
        adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& row : adj_)
            std::sort(row.begin(), row.end());
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const
    {
        if (u > v)
            std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    Graph without_edge(std::size_t index) const
    {
        std::vector<Edge> rest;
        rest.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (i != index)
                rest.push_back(edges_[i]);
        return Graph(n_, std::move(rest));
    }

    /// Subgraph induced by \p keep (renumbered in the given order).
    Graph induced(std::span<const int> keep) const
    {
        std::vector<int> slot(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            slot[keep[i]] = static_cast<int>(i);
        std::vector<Edge> sub;
        for (auto [u, v] : edges_)
            if (slot[u] >= 0 && slot[v] >= 0)
                sub.emplace_back(slot[u], slot[v]);
        return Graph(static_cast<int>(keep.size()), std::move(sub));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// (G, s, t) with s != t.
struct TerminalGraph {
    Graph graph;
    int s = 0;
    int t = 1;

    TerminalGraph() = default;
    TerminalGraph(Graph g, int s_, int t_) : graph(std::move(g)), s(s_), t(t_)
    {
        if (s < 0 || t < 0 || s >= graph.vertex_count() || t >= graph.vertex_count())
            throw InvalidArgument("terminal out of range");
        if (s == t)
            throw InvalidArgument("terminals must be distinct");
    }

    friend bool operator==(const TerminalGraph&, const TerminalGraph&) = default;
};

namespace detail {

inline void realize_into(const SpExpr& e, int s, int t, int& next, std::vector<Edge>& out)
{
    switch (e.kind()) {
    case NodeKind::Leaf:
        out.emplace_back(s, t);
        return;
    case NodeKind::Serial: {
        const auto kids = e.children();
        int from = s;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const int to = i + 1 == kids.size() ? t : next++;
            realize_into(kids[i], from, to, next, out);
            from = to;
        }
        return;
    }
    case NodeKind::Parallel:
        for (const auto& c : e.children())
            realize_into(c, s, t, next, out);
        return;
    }
}

} // namespace detail

/// Realises \p e with s = 0, t = 1 and internal vertices numbered 2, 3, ...
/// in left-to-right order of first use.
inline TerminalGraph realize(const SpExpr& e)
{
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(e.edge_count()));
    int next = 2;
    detail::realize_into(e, 0, 1, next, edges);
    return TerminalGraph(Graph(next, std::move(edges)), 0, 1);
}

// ---------------------------------------------------------------------------
// connectivity

/// Component id per vertex; ids are assigned in order of lowest vertex.
inline std::vector<int> components(const Graph& g, int skip_a = -1, int skip_b = -1)
{
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int r = 0; r < g.vertex_count(); ++r) {
        if (comp[r] >= 0 || r == skip_a || r == skip_b)
            continue;
        comp[r] = next;
        stack.push_back(r);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] < 0 && w != skip_a && w != skip_b) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline int component_count(const std::vector<int>& comp)
{
    int best = -1;
    for (int c : comp)
        best = std::max(best, c);
    return best + 1;
}

inline bool is_connected(const Graph& g) { return g.vertex_count() <= 1 || component_count(components(g)) == 1; }

/// Connected, at least three vertices, and no cut vertex.
inline bool is_two_connected(const Graph& g)
{
    if (g.vertex_count() < 3 || !is_connected(g))
        return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (component_count(components(g, v)) != 1)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// cycles

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g)
{
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        parent[r] = -1;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

/// Length of a shortest odd cycle; nullopt for bipartite graphs.
inline std::optional<int> odd_girth(const Graph& g)
{
    // shortest odd closed walk through r = distance r -> (r, odd) in the
    // bipartite double cover; the overall minimum is an odd cycle
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(2 * n));
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[2 * r] = 0;
        std::queue<int> q;
        q.push(2 * r);
        while (!q.empty()) {
            const int state = q.front();
            q.pop();
            const int v = state / 2;
            const int parity = state % 2;
            for (int w : g.neighbors(v)) {
                const int next = 2 * w + (1 - parity);
                if (dist[next] < 0) {
                    dist[next] = dist[state] + 1;
                    q.push(next);
                }
            }
        }
        if (dist[2 * r + 1] > 0)
            best = std::min(best, dist[2 * r + 1]);
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

inline constexpr int max_cycle_search_vertices = 30;

namespace detail {

inline void check_cycle_guard(const Graph& g)
{
    if (g.vertex_count() > max_cycle_search_vertices)
        throw GuardRefusal("cycle search is limited to " + std::to_string(max_cycle_search_vertices) +
                           " vertices");
}

// Every cycle of exactly `length` vertices whose minimum vertex is `root`,
// reported once per direction pair (the second vertex is below the last).
template <class Visit>
bool cycles_through_min(const Graph& g, int root, int length, Visit&& visit)
{
    const int n = g.vertex_count();
    // distance back to root inside the vertices >= root, for pruning
    std::vector<int> back(static_cast<std::size_t>(n), -1);
    back[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (w > root && back[w] < 0) {
                back[w] = back[v] + 1;
                q.push(w);
            }
    }

    std::vector<int> path{root};
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    on[root] = 1;

    auto dfs = [&](auto&& self, int v) -> bool {
        const int have = static_cast<int>(path.size());
        if (have == length) {
            if (g.has_edge(v, root) && path[1] < path.back())
                return visit(std::span<const int>(path));
            return false;
        }
        for (int w : g.neighbors(v)) {
            if (w <= root || on[w] || back[w] < 0)
                continue;
            // after stepping to w, `length - have - 1` more vertices, then close
            if (back[w] > length - have)
                continue;
            on[w] = 1;
            path.push_back(w);
            const bool stop = self(self, w);
            path.pop_back();
            on[w] = 0;
            if (stop)
                return true;
        }
        return false;
    };
    return dfs(dfs, root);
}

} // namespace detail

/// Calls \p visit(span of vertices) once per cycle of \p length vertices.
/// Returning true from \p visit stops the search.
template <class Visit>
void for_each_cycle(const Graph& g, int length, Visit&& visit)
{
    detail::check_cycle_guard(g);
    if (length < 3)
        throw InvalidArgument("cycle length must be at least 3");
    for (int r = 0; r < g.vertex_count(); ++r)
        if (detail::cycles_through_min(g, r, length, visit))
            return;
}

inline bool has_cycle_of_length(const Graph& g, int length)
{
    bool found = false;
    for_each_cycle(g, length, [&](std::span<const int>) {
        found = true;
        return true;
    });
    return found;
}

/// Does \p host contain \p pattern as a (not necessarily induced) subgraph
/// with terminals mapped onto terminals, in either order?
inline bool contains_terminal_subgraph(const TerminalGraph& host, const TerminalGraph& pattern)
{
    const Graph& h = host.graph;
    const Graph& p = pattern.graph;
    if (p.vertex_count() > h.vertex_count() || p.edge_count() > h.edge_count())
        return false;
    std::vector<int> image(static_cast<std::size_t>(p.vertex_count()), -1);
    std::vector<char> used(static_cast<std::size_t>(h.vertex_count()), 0);

    auto fits = [&](int pv, int hv) {
        if (used[hv])
            return false;
        for (int pw : p.neighbors(pv))
            if (image[pw] >= 0 && !h.has_edge(hv, image[pw]))
                return false;
        return true;
    };
    auto extend = [&](auto&& self, int pv) -> bool {
        if (pv == p.vertex_count())
            return true;
        if (image[pv] >= 0)
            return self(self, pv + 1);
        for (int hv = 0; hv < h.vertex_count(); ++hv) {
            if (!fits(pv, hv))
                continue;
            image[pv] = hv;
            used[hv] = 1;
            if (self(self, pv + 1))
                return true;
            image[pv] = -1;
            used[hv] = 0;
        }
        return false;
    };

    for (int flip = 0; flip < 2; ++flip) {
        std::fill(image.begin(), image.end(), -1);
        std::fill(used.begin(), used.end(), 0);
        const int hs = flip ? host.t : host.s;
        const int ht = flip ? host.s : host.t;
        image[pattern.s] = hs;
        used[hs] = 1;
        if (!fits(pattern.t, ht))
            continue;
        image[pattern.t] = ht;
        used[ht] = 1;
        if (extend(extend, 0))
            return true;
    }
    return false;
}

/// True iff two distinct 5-cycles share a vertex.
inline bool two_c5_sharing_vertex(const Graph& g)
{
    std::vector<int> hits(static_cast<std::size_t>(g.vertex_count()), 0);
    bool found = false;
    for_each_cycle(g, 5, [&](std::span<const int> cyc) {
        for (int v : cyc)
            if (++hits[v] >= 2)
                found = true;
        return found;
    });
    return found;
}

} // namespace spcrit
