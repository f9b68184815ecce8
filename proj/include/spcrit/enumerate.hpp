#pragma once

/// \file enumerate.hpp
/// \brief Exhaustive generation of 2-terminal series-parallel graphs.
///
/// Generation works on the flattened decomposition, which is unique per
/// directed isomorphism class, so no hash set is needed while building:
///   serial   = first child (edge or parallel) followed by the remainder,
///   parallel = multiset of >= 2 children (edge or serial), at most one edge.
/// Terminal reversal is removed at output by keeping only the orientation
/// with the smaller directed key.

#include "error.hpp"
#include "sp_expr.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace spcrit {

/// Vertex and edge caps; whichever binds first.
struct SizeBound {
    int max_vertices = 12;
    int max_edges = 16;

    bool admits(const SpExpr& e) const { return e.vertex_count() <= max_vertices && e.edge_count() <= max_edges; }
    bool admits(int vertices, int edges) const { return vertices <= max_vertices && edges <= max_edges; }
};

/// Every directed class within a bound, grouped by edge count.
class ExpressionStrata {
public:
    explicit ExpressionStrata(SizeBound bound) : bound_(bound)
    {
        if (bound.max_edges < 1 || bound.max_vertices < 2)
            throw InvalidArgument("enumeration bound must allow at least one edge");
        const auto m_max = static_cast<std::size_t>(bound.max_edges);
        serial_.resize(m_max + 1);
        parallel_.resize(m_max + 1);
        for (std::size_t m = 2; m <= m_max; ++m) {
            build_serial(static_cast<int>(m));
            build_parallel(static_cast<int>(m));
        }
    }

    SizeBound bound() const { return bound_; }

    /// Directed classes with exactly \p m edges.
    std::vector<SpExpr> directed(int m) const
    {
        std::vector<SpExpr> out;
        if (m == 1)
            out.push_back(SpExpr::leaf());
        if (m >= 2 && m <= bound_.max_edges) {
            out.insert(out.end(), serial_[m].begin(), serial_[m].end());
            out.insert(out.end(), parallel_[m].begin(), parallel_[m].end());
        }
        return out;
    }

    /// Calls \p visit once per class with (s, t) unordered, by increasing
    /// edge count.
    void for_each_unordered(const std::function<void(const SpExpr&)>& visit) const
    {
        for (int m = 1; m <= bound_.max_edges; ++m)
            for (const auto& e : directed(m))
                if (is_canonical_orientation(e))
                    visit(e);
    }

private:
    // leaf or parallel-rooted, m edges
    std::vector<SpExpr> non_serial(int m) const
    {
        if (m == 1)
            return {SpExpr::leaf()};
        return parallel_[m];
    }

    void build_serial(int m)
    {
        const int budget = bound_.max_vertices - 2;
        for (int m1 = 1; m1 < m; ++m1) {
            const auto heads = non_serial(m1);
            const auto tails = directed(m - m1);
            for (const auto& a : heads)
                for (const auto& b : tails)
                    if (a.internal_vertex_count() + b.internal_vertex_count() + 1 <= budget)
                        serial_[m].push_back(serial_sum(a, b));
        }
    }

    struct Slot {
        int stratum;
        std::size_t index;
    };

    const SpExpr& non_parallel_at(Slot s) const
    {
        static const SpExpr edge = SpExpr::leaf();
        return s.stratum == 1 ? edge : serial_[s.stratum][s.index];
    }

    std::size_t non_parallel_size(int stratum) const
    {
        return stratum == 1 ? 1 : serial_[stratum].size();
    }

    void build_parallel(int m)
    {
        std::vector<SpExpr> chosen;
        extend_parallel(m, m, Slot{1, 0}, bound_.max_vertices - 2, chosen);
    }

    // choose children in non-decreasing slot order
    void extend_parallel(int m, int remaining, Slot from, int budget, std::vector<SpExpr>& chosen)
    {
        if (remaining == 0) {
            if (chosen.size() >= 2)
                parallel_[m].push_back(SpExpr::parallel(chosen));
            return;
        }
        for (int stratum = from.stratum; stratum <= remaining && stratum < m; ++stratum) {
            const std::size_t start = stratum == from.stratum ? from.index : 0;
            for (std::size_t i = start; i < non_parallel_size(stratum); ++i) {
                const SpExpr& c = non_parallel_at(Slot{stratum, i});
                if (c.internal_vertex_count() > budget)
                    continue;
                // the remainder must be empty or hold at least one more child
                const int rest = remaining - stratum;
                if (rest == 0 && chosen.empty())
                    continue;
                chosen.push_back(c);
                // a second direct edge would be a multi-edge
                const Slot next = stratum == 1 ? Slot{2, 0} : Slot{stratum, i};
                extend_parallel(m, rest, next, budget - c.internal_vertex_count(), chosen);
                chosen.pop_back();
            }
        }
    }

    SizeBound bound_;
    std::vector<std::vector<SpExpr>> serial_;
    std::vector<std::vector<SpExpr>> parallel_;
};

/// One expression per 2-terminal series-parallel graph within \p bound,
/// (s, t) unordered, ordered by edge count.
inline std::vector<SpExpr> enumerate_expressions(SizeBound bound)
{
    ExpressionStrata strata(bound);
    std::vector<SpExpr> out;
    strata.for_each_unordered([&](const SpExpr& e) { out.push_back(e); });
    return out;
}

inline std::vector<SpExpr> enumerate_expressions(int max_edges)
{
    return enumerate_expressions(SizeBound{max_edges + 1, max_edges});
}

} // namespace spcrit
