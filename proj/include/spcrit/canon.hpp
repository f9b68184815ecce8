#pragma once

/// \file canon.hpp
/// \brief Canonical forms for plain graphs.
///
/// canonical_form() is a general individualisation/refinement labeling with
/// no automorphism pruning: exact, exponential in the worst case, fine at
/// desk scale. graph_key() prefers the series-parallel decomposition, which
/// is exact and polynomial, and falls back to canonical_form().

#include "graph.hpp"
#include "recognize.hpp"
#include "sp_expr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <vector>

namespace spcrit {

inline constexpr int max_canonical_vertices = 30;

namespace detail {

// Equitable refinement of a vertex colouring. Colours are renumbered by
// (old colour, sorted neighbour colour multiset), which is isomorphism
// invariant.
inline std::vector<int> refine(const Graph& g, std::vector<int> colour)
{
    const int n = g.vertex_count();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{colour[v]};
            std::vector<int> nb;
            for (int w : g.neighbors(v))
                nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [s, v] : sig)
            ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids)
            id = next++;
        std::vector<int> out(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            out[v] = ids[sig[v].first];
        const int before = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
        if (next == before)
            return out;
        colour = std::move(out);
    }
}

inline std::string labelled_string(const Graph& g, const std::vector<int>& colour, const std::vector<int>& position)
{
    // colours first so terminal marks survive into the form
    const int n = g.vertex_count();
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        at[position[v]] = v;
    std::string out;
    for (int i = 0; i < n; ++i) {
        out += std::to_string(colour[at[i]]);
        out += ' ';
    }
    out += '|';
    std::vector<Edge> relabelled;
    for (auto [u, v] : g.edges()) {
        int a = position[u];
        int b = position[v];
        if (a > b)
            std::swap(a, b);
        relabelled.emplace_back(a, b);
    }
    std::sort(relabelled.begin(), relabelled.end());
    for (auto [a, b] : relabelled)
        out += std::to_string(a) + '-' + std::to_string(b) + ' ';
    return out;
}

inline void search_canonical(const Graph& g, const std::vector<int>& initial, std::vector<int> colour,
                             std::optional<std::string>& best)
{
    const int n = g.vertex_count();
    colour = refine(g, std::move(colour));
    // first smallest non-singleton cell
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v)
        cells[colour[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells)
        if (members.size() > 1 && (!target || members.size() < target->size()))
            target = &members;
    if (!target) {
        std::string form = labelled_string(g, initial, colour);
        if (!best || form < *best)
            best = std::move(form);
        return;
    }
    const int cell_colour = colour[target->front()];
    for (int v : *target) {
        std::vector<int> next = colour;
        // individualise v: push everything above the cell up by one
        for (int w = 0; w < n; ++w)
            if (next[w] > cell_colour || (next[w] == cell_colour && w != v))
                next[w] += 1;
        search_canonical(g, initial, std::move(next), best);
    }
}

} // namespace detail

/// Canonical string of \p g; when \p terminals is given the two vertices
/// are marked (as an unordered pair).
inline std::string canonical_form(const Graph& g, std::optional<std::pair<int, int>> terminals = std::nullopt)
{
    if (g.vertex_count() > max_canonical_vertices)
        throw GuardRefusal("canonical labeling is limited to " + std::to_string(max_canonical_vertices) +
                           " vertices");
    std::vector<int> initial(static_cast<std::size_t>(g.vertex_count()), 0);
    if (terminals) {
        initial[terminals->first] = 1;
        initial[terminals->second] = 1;
    }
    std::optional<std::string> best;
    detail::search_canonical(g, initial, initial, best);
    return "n" + std::to_string(g.vertex_count()) + ":" + best.value_or("");
}

/// Isomorphism key of a graph without terminals.
inline CanonKey graph_key(const Graph& g)
{
    std::optional<std::string> best;
    if (g.edge_count() > 0 && is_connected(g)) {
        bool isolated = false;
        for (int v = 0; v < g.vertex_count(); ++v)
            isolated = isolated || g.degree(v) == 0;
        for (int s = 0; !isolated && s < g.vertex_count(); ++s)
            for (int t = s + 1; t < g.vertex_count(); ++t)
                if (auto e = detail::try_reduce(TerminalGraph(g, s, t))) {
                    CanonKey k = canonical_key(*e);
                    if (!best || k.bytes < *best)
                        best = std::move(k.bytes);
                }
    }
    if (best)
        return CanonKey{"sp:" + *best};
    return CanonKey{"cf:" + canonical_form(g)};
}

} // namespace spcrit
