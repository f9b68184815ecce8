#pragma once

/// \file json_io.hpp
/// \brief JSON records for forced sets, family members, the atlas and
/// critical catalogs. Every top-level record carries a "schema" string
/// whose suffix is the format version.

#include "atlas.hpp"
#include "critical.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "hom.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace spcrit {

using json = nlohmann::ordered_json;

inline constexpr const char* forced_set_schema = "spcrit.forced-set/1";
inline constexpr const char* family_member_schema = "spcrit.family-member/1";
inline constexpr const char* atlas_schema = "spcrit.atlas-entry/1";
inline constexpr const char* critical_schema = "spcrit.critical-catalog/1";
inline constexpr const char* verify_schema = "spcrit.verify/1";

inline json edges_to_json(const Graph& g)
{
    json out = json::array();
    for (const auto& [u, v] : g.edges())
        out.push_back({u, v});
    return out;
}

inline json graph_to_json(const Graph& g, std::optional<std::pair<int, int>> terminals = std::nullopt)
{
    json out{{"n", g.vertex_count()}, {"edges", edges_to_json(g)}};
    if (terminals)
        out["terminals"] = {terminals->first, terminals->second};
    return out;
}

inline json graph_to_json(const TerminalGraph& tg) { return graph_to_json(tg.graph, std::pair{tg.s, tg.t}); }

/// Reads the "n", "edges" and optional "terminals" fields.
inline std::pair<Graph, std::optional<std::pair<int, int>>> graph_from_json(const json& j)
{
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        Graph g(j.at("n").get<int>(), edges);
        std::optional<std::pair<int, int>> terminals;
        if (j.contains("terminals"))
            terminals = std::pair{j["terminals"].at(0).get<int>(), j["terminals"].at(1).get<int>()};
        return {std::move(g), terminals};
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed graph record: ") + e.what());
    }
}

inline json colouring_to_json(const HomAssignment& phi) { return phi.colour; }

inline json forced_set_to_json(const ForcedSetResult& r, const TerminalGraph& tg, CycleOrder order,
                               const std::string& method)
{
    json witnesses = json::object();
    for (const auto& [x, phi] : r.witness)
        witnesses[std::to_string(x)] = colouring_to_json(phi);
    json out{{"schema", forced_set_schema}, {"k", order.k()},       {"method", method},
             {"graph", graph_to_json(tg)},  {"forced", to_string(r.set)}, {"alias", alias(r.set)},
             {"witness", witnesses}};
    return out;
}

/// One JSONL record per family member, with the element each single-edge
/// deletion newly forces and the colouring that shows it.
inline json family_member_to_json(const FamilyTag& tag, const FamilyMember& m)
{
    const CycleOrder order = tag.order();
    const TerminalGraph tg = realize(m.expr);
    const SymSet forced = forced_set_dp(m.expr, order);
    const SymSet target = tag.effective_target();
    json witness = json::array();
    for (std::size_t e = 0; e < tg.graph.edges().size(); ++e) {
        const auto phi = detail::forces_any(tg, e, order, target, {});
        if (!phi)
            throw InvariantViolation("family member " + m.key.bytes + " has an edge with no new target element");
        const auto [u, v] = tg.graph.edges()[e];
        witness.push_back({{"edge", {u, v}}, {"gained", phi->colour[static_cast<std::size_t>(tg.t)]},
                           {"colouring", colouring_to_json(*phi)}});
    }
    json out{{"schema", family_member_schema}, {"k", order.k()}, {"tag", to_string(tag)}, {"key", m.key.bytes},
             {"expr", to_string(m.expr)}};
    const json g = graph_to_json(tg);
    out["n"] = g["n"];
    out["edges"] = g["edges"];
    out["terminals"] = g["terminals"];
    out["forced"] = to_string(forced);
    out["witness"] = std::move(witness);
    return out;
}

inline json atlas_entry_to_json(const AtlasEntry& a)
{
    const TerminalGraph tg = realize(a.expr);
    json out{{"schema", atlas_schema}, {"name", a.name}, {"tag", to_string(a.tag)},
             {"key", canonical_key(a.expr).bytes}, {"expr", to_string(a.expr)}};
    const json g = graph_to_json(tg);
    out["n"] = g["n"];
    out["edges"] = g["edges"];
    out["terminals"] = g["terminals"];
    return out;
}

inline json critical_report_to_json(const CanonKey& key, const CriticalReport& r)
{
    json out{{"key", key.bytes}};
    out["n"] = r.graph.vertex_count();
    out["edges"] = edges_to_json(r.graph);
    if (r.split) {
        out["split"] = {{"first", to_string(r.split->first)},
                        {"second", to_string(r.split->second)},
                        {"first_forced", to_string(r.split->first_forced)},
                        {"second_forced", to_string(r.split->second_forced)}};
    } else {
        out["split"] = nullptr;
    }
    if (const auto g = girth(r.graph))
        out["girth"] = *g;
    if (const auto og = odd_girth(r.graph))
        out["odd_girth"] = *og;
    json wit = json::array();
    for (const auto& phi : r.edge_witness)
        wit.push_back(colouring_to_json(phi));
    out["edge_witness"] = std::move(wit);
    return out;
}

inline json critical_catalog_to_json(const CriticalCatalog& cat, const std::string& method)
{
    json members = json::array();
    for (const auto& [key, r] : cat.members)
        members.push_back(critical_report_to_json(key, r));
    return json{{"schema", critical_schema},
                {"k", cat.order.k()},
                {"bound", {{"max_vertices", cat.bound.max_vertices}, {"max_edges", cat.bound.max_edges}}},
                {"method", method},
                {"count", cat.members.size()},
                {"members", std::move(members)},
                {"violations", cat.violations}};
}

inline json verification_to_json(const VerificationReport& r)
{
    json stats = json::object();
    for (const auto& [k, v] : r.stats)
        stats[k] = v;
    return json{{"name", r.name}, {"ok", r.ok()}, {"checked", r.checked}, {"violations", r.violations},
                {"stats", stats}};
}

} // namespace spcrit
