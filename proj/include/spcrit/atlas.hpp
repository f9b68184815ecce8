#pragma once

/// \file atlas.hpp
/// \brief The k = 2 base graphs H1..H6: every minimally forcing
/// series-parallel graph on at most 10 vertices.

#include "families.hpp"
#include "graph.hpp"
#include "hom.hpp"

#include <string>
#include <vector>

namespace spcrit {

inline constexpr SizeBound atlas_bound{10, 16};

struct AtlasEntry {
    std::string name;
    SpExpr expr;
    FamilyTag tag;
};

namespace detail {

inline void atlas_expect(bool ok, const std::string& what)
{
    if (!ok)
        throw InvariantViolation("base atlas: " + what);
}

} // namespace detail

/// H1..H6 ordered by (vertex count, canonical key), with their anchors
/// checked. Throws InvariantViolation if the enumeration contradicts one.
inline std::vector<AtlasEntry> base_atlas()
{
    const CycleOrder order(2);
    const RefinedFamilies families(order, atlas_bound);

    std::vector<AtlasEntry> out;
    for (const auto& tag : plain_tags(order))
        for (const auto& m : families.members(tag))
            out.push_back({"", m.expr, tag});
    std::sort(out.begin(), out.end(), [](const AtlasEntry& a, const AtlasEntry& b) {
        if (a.expr.vertex_count() != b.expr.vertex_count())
            return a.expr.vertex_count() < b.expr.vertex_count();
        return canonical_key(a.expr) < canonical_key(b.expr);
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].name = "H" + std::to_string(i + 1);

    using detail::atlas_expect;
    atlas_expect(out.size() == 6, "expected 6 base graphs, found " + std::to_string(out.size()));
    const auto s = [&](int i) { return SymSet::orbit(order, i); };
    const auto sb = [&](int i) { return SymSet::orbit_complement(order, i); };

    atlas_expect(canonical_key(out[0].expr) == canonical_key(SpExpr::leaf()) && out[0].tag.forced == s(1),
                 "H1 must be K2 forcing s1");
    atlas_expect(canonical_key(out[1].expr) == canonical_key(path_expr(2)) && out[1].tag.forced == sb(1),
                 "H2 must be P3 forcing sb1");
    atlas_expect(out[4].expr.vertex_count() == 9 && out[4].tag.forced == sb(2), "H5 must have 9 vertices and force sb2");
    atlas_expect(two_c5_sharing_vertex(realize(out[4].expr).graph), "H5 must have two 5-cycles sharing a vertex");
    atlas_expect(out[5].expr.vertex_count() == 10, "H6 must have 10 vertices");
    atlas_expect(has_cycle_of_length(realize(out[5].expr).graph, 8), "H6 must contain an 8-cycle");

    const TerminalGraph h4_h1 = realize(serial_sum(out[3].expr, out[0].expr));
    const TerminalGraph h3 = realize(out[2].expr);
    atlas_expect(h3.graph.edge_count() < h4_h1.graph.edge_count() && contains_terminal_subgraph(h4_h1, h3),
                 "H4 + H1 must contain H3 as a proper subgraph between the same terminals");
    return out;
}

} // namespace spcrit
