#pragma once

/// \file hom.hpp
/// \brief C_{2k+1}-colourings: backtracking search, forced sets, minimality
/// and criticality.
///
/// Colourings are searched with residue bitmask domains and full arc
/// consistency on the edge constraint |phi(u) - phi(v)| = 1 (mod n).

#include "cyc_ring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "recognize.hpp"
#include "sp_expr.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spcrit {

inline constexpr int max_oracle_vertices = 40;

struct HomOptions {
    bool override_guards = false;
};

/// vertex -> residue
struct HomAssignment {
    std::vector<int> colour;

    friend bool operator==(const HomAssignment&, const HomAssignment&) = default;
};

inline bool is_valid_hom(const Graph& g, CycleOrder order, const HomAssignment& phi)
{
    if (static_cast<int>(phi.colour.size()) != g.vertex_count())
        return false;
    for (int c : phi.colour)
        if (c < 0 || c >= order.n())
            return false;
    for (auto [u, v] : g.edges()) {
        const int d = (phi.colour[u] - phi.colour[v] + order.n()) % order.n();
        if (d != 1 && d != order.n() - 1)
            return false;
    }
    return true;
}

namespace detail {

inline void check_oracle_guard(const Graph& g, const HomOptions& opts)
{
    if (!opts.override_guards && g.vertex_count() > max_oracle_vertices)
        throw GuardRefusal("homomorphism oracle is limited to " + std::to_string(max_oracle_vertices) +
                           " vertices (override to proceed)");
}

class HomSearch {
public:
    HomSearch(const Graph& g, CycleOrder order) : g_(g), order_(order)
    {
        // static tie-break: higher degree first, then lower id
        rank_.resize(static_cast<std::size_t>(g.vertex_count()));
        std::vector<int> by_degree(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            by_degree[v] = v;
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int i = 0; i < g.vertex_count(); ++i)
            rank_[by_degree[i]] = i;
    }

    /// Solves from preset domains. Components with no preset vertex get
    /// their highest-ranked vertex pinned to 0 (C_n is vertex transitive).
    std::optional<HomAssignment> solve(std::vector<std::uint64_t> domains)
    {
        const auto comp = components(g_);
        const int count = component_count(comp);
        std::vector<char> pinned(static_cast<std::size_t>(count), 0);
        std::vector<int> lead(static_cast<std::size_t>(count), -1);
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (domains[v] != order_.mask())
                pinned[comp[v]] = 1;
            if (lead[comp[v]] < 0 || rank_[v] < rank_[lead[comp[v]]])
                lead[comp[v]] = v;
        }
        for (int c = 0; c < count; ++c)
            if (!pinned[c])
                domains[lead[c]] = 1;

        std::vector<int> dirty;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (domains[v] != order_.mask())
                dirty.push_back(v);
        if (!propagate(domains, dirty))
            return std::nullopt;
        if (!search(domains))
            return std::nullopt;
        HomAssignment phi;
        phi.colour.resize(domains.size());
        for (std::size_t v = 0; v < domains.size(); ++v)
            phi.colour[v] = std::countr_zero(domains[v]);
        if (!is_valid_hom(g_, order_, phi))
            throw InvariantViolation("colouring search produced an invalid assignment");
        return phi;
    }

    std::uint64_t full() const { return order_.mask(); }

private:
    std::uint64_t support(std::uint64_t d) const
    {
        return rotate_left(d, 1, order_) | rotate_left(d, order_.n() - 1, order_);
    }

    bool propagate(std::vector<std::uint64_t>& dom, std::vector<int> queue) const
    {
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            const std::uint64_t allowed = support(dom[v]);
            for (int w : g_.neighbors(v)) {
                const std::uint64_t next = dom[w] & allowed;
                if (next == dom[w])
                    continue;
                if (next == 0)
                    return false;
                dom[w] = next;
                queue.push_back(w);
            }
        }
        return true;
    }

    bool search(std::vector<std::uint64_t>& dom) const
    {
        int pick = -1;
        int pick_size = 0;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            const int size = std::popcount(dom[v]);
            if (size <= 1)
                continue;
            if (pick < 0 || size < pick_size || (size == pick_size && rank_[v] < rank_[pick])) {
                pick = v;
                pick_size = size;
            }
        }
        if (pick < 0)
            return true;
        for (std::uint64_t rest = dom[pick]; rest; rest &= rest - 1) {
            std::vector<std::uint64_t> trial = dom;
            trial[pick] = rest & (~rest + 1);
            if (propagate(trial, {pick}) && search(trial)) {
                dom = std::move(trial);
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    CycleOrder order_;
    std::vector<int> rank_;
};

} // namespace detail

/// A C_n-colouring of \p g, or nullopt if none exists.
inline std::optional<HomAssignment> has_hom(const Graph& g, CycleOrder order, const HomOptions& opts = {})
{
    detail::check_oracle_guard(g, opts);
    detail::HomSearch search(g, order);
    return search.solve(std::vector<std::uint64_t>(static_cast<std::size_t>(g.vertex_count()), order.mask()));
}

/// A colouring with phi(s) = 0 and phi(t) = x, if one exists.
inline std::optional<HomAssignment> colouring_with(const TerminalGraph& tg, CycleOrder order, int x,
                                                   const HomOptions& opts = {})
{
    detail::check_oracle_guard(tg.graph, opts);
    detail::HomSearch search(tg.graph, order);
    std::vector<std::uint64_t> dom(static_cast<std::size_t>(tg.graph.vertex_count()), order.mask());
    dom[tg.s] = 1;
    dom[tg.t] = std::uint64_t{1} << x;
    return search.solve(std::move(dom));
}

struct ForcedSetResult {
    SymSet set;
    std::map<int, HomAssignment> witness; // one per forced residue
};

/// Forced set of (G, s, t) by one colouring search per target residue.
inline ForcedSetResult forced_set_oracle(const TerminalGraph& tg, CycleOrder order, const HomOptions& opts = {})
{
    std::uint64_t bits = 0;
    std::map<int, HomAssignment> witness;
    for (int x = 0; x < order.n(); ++x)
        if (auto phi = colouring_with(tg, order, x, opts)) {
            bits |= std::uint64_t{1} << x;
            witness.emplace(x, std::move(*phi));
        }
    return {SymSet::from_bits(order, bits), std::move(witness)};
}

/// Forced set from the decomposition: edge -> s(1), serial -> sum,
/// parallel -> intersection.
inline SymSet forced_set_dp(const SpExpr& e, CycleOrder order)
{
    switch (e.kind()) {
    case NodeKind::Leaf:
        return SymSet::orbit(order, 1);
    case NodeKind::Serial: {
        SymSet acc = SymSet::orbit(order, 0);
        for (const auto& c : e.children())
            acc = mink_sum(acc, forced_set_dp(c, order));
        return acc;
    }
    case NodeKind::Parallel: {
        SymSet acc = SymSet::full(order);
        for (const auto& c : e.children())
            acc = intersect(acc, forced_set_dp(c, order));
        return acc;
    }
    }
    throw InvariantViolation("unknown node kind");
}

inline bool is_restricted(const TerminalGraph& tg, CycleOrder order, const HomOptions& opts = {})
{
    return !forced_set_oracle(tg, order, opts).set.is_full();
}

inline bool is_restricted(const SpExpr& e, CycleOrder order) { return !forced_set_dp(e, order).is_full(); }

namespace detail {

// Does (G - edge, s, t) force some residue of `targets`? The witness, if any.
inline std::optional<HomAssignment> forces_any(const TerminalGraph& tg, std::size_t edge, CycleOrder order,
                                               const SymSet& targets, const HomOptions& opts)
{
    const TerminalGraph cut(tg.graph.without_edge(edge), tg.s, tg.t);
    for (int x : targets.elements())
        if (auto phi = colouring_with(cut, order, x, opts))
            return phi;
    return std::nullopt;
}

} // namespace detail

/// S if (G, s, t) is minimally S-forcing with S a nonempty proper subset,
/// else nullopt. Only single-edge deletions are tested: forced sets only
/// grow as edges are removed, so a strict increase at every edge implies
/// one for every proper subgraph.
inline std::optional<SymSet> is_minimally_forcing(const TerminalGraph& tg, CycleOrder order,
                                                  const HomOptions& opts = {})
{
    const SymSet s = forced_set_oracle(tg, order, opts).set;
    if (s.is_empty() || s.is_full())
        return std::nullopt;
    const SymSet outside = complement(s);
    for (std::size_t d = 0; d < tg.graph.edges().size(); ++d)
        if (!detail::forces_any(tg, d, order, outside, opts))
            return std::nullopt;
    return s;
}

inline std::optional<SymSet> is_minimally_forcing(const SpExpr& e, CycleOrder order, const HomOptions& opts = {})
{
    return is_minimally_forcing(realize(e), order, opts);
}

/// Membership in F_S^T: minimally S-forcing, and every single-edge deletion
/// newly forces a residue of T.
inline bool refined_membership(const TerminalGraph& tg, const SymSet& s, const SymSet& t, CycleOrder order,
                               const HomOptions& opts = {})
{
    s.check_same(t);
    if (s.is_empty() || t.is_empty() || s.intersects(t))
        throw InvalidArgument("refinement tag needs disjoint nonempty sets, got " + to_string(s) + " and " +
                              to_string(t));
    if (forced_set_oracle(tg, order, opts).set != s)
        return false;
    // residues of T are outside S, so a hit is also a strict increase
    for (std::size_t d = 0; d < tg.graph.edges().size(); ++d)
        if (!detail::forces_any(tg, d, order, t, opts))
            return false;
    return true;
}

inline bool refined_membership(const SpExpr& e, const SymSet& s, const SymSet& t, CycleOrder order,
                               const HomOptions& opts = {})
{
    return refined_membership(realize(e), s, t, order, opts);
}

/// A parallel split G = G1 || G2 with the forced sets of both factors.
struct ParallelSplit {
    SpExpr first;
    SpExpr second;
    SymSet first_forced;
    SymSet second_forced;
};

/// Certificate that a graph is C_n-critical.
struct CriticalReport {
    Graph graph;
    std::vector<HomAssignment> edge_witness; // colouring of G - e, per edge index
    std::optional<ParallelSplit> split;
};

/// Outcome of a criticality test; exactly one of the optionals is set.
struct CriticalityVerdict {
    std::optional<CriticalReport> report;
    std::optional<HomAssignment> colouring; // G itself is colourable
    std::optional<Edge> redundant_edge;     // G - e is still not colourable
    std::optional<int> isolated_vertex;     // G - v is still not colourable

    bool critical() const { return report.has_value(); }
};

inline CriticalityVerdict check_critical(const Graph& g, CycleOrder order, const HomOptions& opts = {})
{
    CriticalityVerdict verdict;
    if (auto phi = has_hom(g, order, opts)) {
        verdict.colouring = std::move(phi);
        return verdict;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) {
            verdict.isolated_vertex = v;
            return verdict;
        }
    CriticalReport report{g, {}, std::nullopt};
    for (std::size_t d = 0; d < g.edges().size(); ++d) {
        auto phi = has_hom(g.without_edge(d), order, opts);
        if (!phi) {
            verdict.redundant_edge = g.edges()[d];
            return verdict;
        }
        report.edge_witness.push_back(std::move(*phi));
    }
    verdict.report = std::move(report);
    return verdict;
}

/// Not colourable, but every edge-deleted (hence every proper) subgraph is.
inline std::optional<CriticalReport> is_critical(const Graph& g, CycleOrder order, const HomOptions& opts = {})
{
    return check_critical(g, order, opts).report;
}

struct CutStructureResult {
    bool two_connected = false;
    std::vector<std::string> violations;

    bool ok() const { return two_connected && violations.empty(); }
};

/// 2-connectivity, and every piece hanging off a 2-cut {u, v} is a
/// restricted (u, v)-terminal series-parallel graph.
inline CutStructureResult cut_structure_check(const Graph& g, CycleOrder order, const HomOptions& opts = {})
{
    CutStructureResult out;
    out.two_connected = is_two_connected(g);
    if (!out.two_connected) {
        out.violations.push_back("not 2-connected");
        return out;
    }
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto comp = components(g, u, v);
            const int count = component_count(comp);
            if (count < 2)
                continue;
            for (int c = 0; c < count; ++c) {
                std::vector<int> keep{u, v};
                for (int w = 0; w < n; ++w)
                    if (comp[w] == c && w != u && w != v)
                        keep.push_back(w);
                const TerminalGraph piece(g.induced(keep), 0, 1);
                const std::string where = "2-cut {" + std::to_string(u) + "," + std::to_string(v) + "} piece " +
                                          std::to_string(c);
                if (!is_restricted(piece, order, opts))
                    out.violations.push_back(where + " is unrestricted");
                try {
                    recognize_sp(piece);
                } catch (const NotSeriesParallel&) {
                    out.violations.push_back(where + " is not (u,v)-terminal series-parallel");
                }
            }
        }
    return out;
}

} // namespace spcrit
