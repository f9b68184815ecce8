#pragma once

/// \file critical.hpp
/// \brief C_n-critical series-parallel graphs: generation from pairs of
/// refined families, a brute-force filter, and structural checks.

#include "canon.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "hom.hpp"
#include "parallel.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spcrit {

/// Critical graphs keyed by graph_key (terminals discarded).
struct CriticalCatalog {
    CycleOrder order;
    SizeBound bound;
    std::map<CanonKey, CriticalReport> members;
    std::vector<std::string> violations; // generated graphs that failed re-verification

    std::set<CanonKey> keys() const
    {
        std::set<CanonKey> out;
        for (const auto& [k, _] : members)
            out.insert(k);
        return out;
    }
};

/// Every G1 || G2 with G1 in F_S^T and G2 in F_T^S over disjoint nonempty
/// symmetric S, T, within \p bound, re-verified by the oracle.
inline CriticalCatalog generate_critical(CycleOrder order, SizeBound bound, int jobs = 1)
{
    CriticalCatalog cat{order, bound, {}, {}};
    if (bound.max_edges < 3 || bound.max_vertices < 3)
        return cat;
    // a factor has at least one edge and the other keeps both terminals
    const RefinedFamilies families(order, SizeBound{bound.max_vertices, bound.max_edges - 1});

    std::vector<std::pair<SpExpr, SpExpr>> pairs;
    const auto sets = enumerate_symmetric_subsets(order, true);
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            const SymSet& s = sets[a];
            const SymSet& t = sets[b];
            if (s.intersects(t))
                continue;
            const auto first = families.directed_members(FamilyTag(s, t));
            const auto second = families.directed_members(FamilyTag(t, s));
            for (const auto& g1 : first)
                for (const auto& g2 : second) {
                    if (g1.is_leaf() && g2.is_leaf())
                        continue;
                    if (!bound.admits(g1.vertex_count() + g2.vertex_count() - 2, g1.edge_count() + g2.edge_count()))
                        continue;
                    pairs.emplace_back(g1, g2);
                }
        }

    // dedup before the expensive re-verification; first pair in order wins
    std::map<CanonKey, std::size_t> first_seen;
    std::vector<CanonKey> keys(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        keys[i] = graph_key(realize(parallel_sum(pairs[i].first, pairs[i].second)).graph);
    });
    for (std::size_t i = 0; i < pairs.size(); ++i)
        first_seen.emplace(keys[i], i);

    std::vector<std::pair<CanonKey, std::size_t>> unique(first_seen.begin(), first_seen.end());
    std::vector<CriticalityVerdict> verdicts(unique.size());
    parallel_for(unique.size(), jobs, [&](std::size_t i) {
        const auto& [g1, g2] = pairs[unique[i].second];
        verdicts[i] = check_critical(realize(parallel_sum(g1, g2)).graph, order);
    });
    for (std::size_t i = 0; i < unique.size(); ++i) {
        const auto& [g1, g2] = pairs[unique[i].second];
        const std::string name = to_string(parallel_sum(g1, g2));
        if (!verdicts[i].critical()) {
            cat.violations.push_back("generated graph " + name + " is not critical");
            continue;
        }
        CriticalReport report = std::move(*verdicts[i].report);
        report.split = ParallelSplit{g1, g2, forced_set_dp(g1, order), forced_set_dp(g2, order)};
        cat.members.emplace(unique[i].first, std::move(report));
    }
    return cat;
}

/// Every series-parallel graph within \p bound that is critical.
inline CriticalCatalog filter_critical_bruteforce(CycleOrder order, SizeBound bound, int jobs = 1)
{
    CriticalCatalog cat{order, bound, {}, {}};
    const ExpressionStrata strata(bound);
    const auto workers = static_cast<std::size_t>(std::max(jobs, 1));
    for (int m = 1; m <= bound.max_edges; ++m) {
        std::vector<SpExpr> layer;
        for (const auto& e : strata.directed(m))
            if (is_canonical_orientation(e))
                layer.push_back(e);
        std::vector<std::vector<std::pair<std::size_t, CriticalReport>>> found(workers);
        parallel_for(workers, jobs, [&](std::size_t w) {
            for (std::size_t i = w; i < layer.size(); i += workers)
                if (auto report = is_critical(realize(layer[i]).graph, order))
                    found[w].emplace_back(i, std::move(*report));
        });
        std::vector<std::pair<std::size_t, CriticalReport>> merged;
        for (auto& part : found)
            for (auto& hit : part)
                merged.push_back(std::move(hit));
        std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [i, report] : merged) {
            CanonKey key = graph_key(report.graph);
            cat.members.emplace(std::move(key), std::move(report));
        }
    }
    return cat;
}

/// Keys present in one catalog only.
struct CatalogDiff {
    std::vector<CanonKey> only_first;
    std::vector<CanonKey> only_second;

    bool empty() const { return only_first.empty() && only_second.empty(); }
};

inline CatalogDiff compare_catalogs(const CriticalCatalog& a, const CriticalCatalog& b)
{
    CatalogDiff d;
    const auto ka = a.keys();
    const auto kb = b.keys();
    std::set_difference(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(d.only_first));
    std::set_difference(kb.begin(), kb.end(), ka.begin(), ka.end(), std::back_inserter(d.only_second));
    return d;
}

// ---------------------------------------------------------------------------
// checks

struct VerificationReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> violations;
    std::map<std::string, long> stats;

    bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string describe(const CanonKey& key) { return key.bytes; }

} // namespace detail

/// 2-connectivity and restricted 2-cut pieces for every member.
inline VerificationReport verify_structure(const CriticalCatalog& cat, int jobs = 1)
{
    VerificationReport r{"structure", cat.members.size(), {}, {}};
    std::vector<const std::pair<const CanonKey, CriticalReport>*> items;
    for (const auto& item : cat.members)
        items.push_back(&item);
    std::vector<CutStructureResult> results(items.size());
    parallel_for(items.size(), jobs,
                 [&](std::size_t i) { results[i] = cut_structure_check(items[i]->second.graph, cat.order); });
    for (std::size_t i = 0; i < items.size(); ++i)
        for (const auto& v : results[i].violations)
            r.violations.push_back(detail::describe(items[i]->first) + ": " + v);
    return r;
}

/// k = 2 only. Every member of odd girth >= 5 has two 5-cycles sharing a
/// vertex and an 8- or 10-cycle. Also checks, on the union of \p families,
/// that members above 5 vertices have two such 5-cycles and members above
/// 9 vertices (except H4+H5) have an 8- or 10-cycle, and that H4+H5 is
/// C5-colourable. \p atlas supplies H4 and H5.
inline VerificationReport verify_colourability_theorem(const CriticalCatalog& cat, const FamilyCatalog& families,
                                                       const SpExpr& h4, const SpExpr& h5)
{
    VerificationReport r{"colourability", 0, {}, {}};
    if (cat.order.k() != 2)
        throw InvalidArgument("the colourability check is stated for k = 2");
    long exempt = 0;
    for (const auto& [key, report] : cat.members) {
        ++r.checked;
        const auto og = odd_girth(report.graph);
        if (og && *og < 5) {
            ++exempt;
            continue;
        }
        if (!two_c5_sharing_vertex(report.graph))
            r.violations.push_back(detail::describe(key) + ": no two 5-cycles share a vertex");
        if (!has_cycle_of_length(report.graph, 8) && !has_cycle_of_length(report.graph, 10))
            r.violations.push_back(detail::describe(key) + ": neither an 8-cycle nor a 10-cycle");
    }
    r.stats["odd_girth_below_5"] = exempt;

    const SpExpr h4_h5 = serial_sum(h4, h5);
    const CanonKey skip = canonical_key(h4_h5);
    long lemma_checked = 0;
    for (const auto& m : families.union_members()) {
        const Graph g = realize(m.expr).graph;
        if (g.vertex_count() > 5) {
            ++lemma_checked;
            if (!two_c5_sharing_vertex(g))
                r.violations.push_back("family member " + m.key.bytes + ": no two 5-cycles share a vertex");
        }
        if (g.vertex_count() > 9 && m.key != skip && !has_cycle_of_length(g, 8) && !has_cycle_of_length(g, 10))
            r.violations.push_back("family member " + m.key.bytes + ": neither an 8-cycle nor a 10-cycle");
    }
    r.stats["family_members_checked"] = lemma_checked;

    if (!has_hom(realize(h4_h5).graph, cat.order))
        r.violations.push_back("H4+H5 is not C5-colourable");
    return r;
}

/// k = 2 only: every member has girth at most 6. Girth-6 members are
/// counted, not asserted.
inline VerificationReport verify_girth_bound(const CriticalCatalog& cat)
{
    VerificationReport r{"girth", 0, {}, {}};
    if (cat.order.k() != 2)
        throw InvalidArgument("the girth bound is stated for k = 2");
    long six = 0;
    for (const auto& [key, report] : cat.members) {
        ++r.checked;
        const auto g = girth(report.graph);
        if (!g || *g > 6)
            r.violations.push_back(detail::describe(key) + ": girth " + (g ? std::to_string(*g) : "infinite"));
        else if (*g == 6)
            ++six;
    }
    r.stats["girth_6"] = six;
    return r;
}

/// Every stored split has disjoint forced sets, and deleting any edge of
/// one factor newly forces an element of the other factor's forced set.
inline VerificationReport verify_splits(const CriticalCatalog& cat)
{
    VerificationReport r{"splits", 0, {}, {}};
    for (const auto& [key, report] : cat.members) {
        if (!report.split)
            continue;
        ++r.checked;
        const auto& sp = *report.split;
        const std::string who = detail::describe(key);
        if (sp.first_forced.intersects(sp.second_forced))
            r.violations.push_back(who + ": factor forced sets intersect");
        const auto check_factor = [&](const SpExpr& f, const SymSet& own, const SymSet& other, const char* label) {
            const TerminalGraph tg = realize(f);
            if (forced_set_oracle(tg, cat.order).set != own)
                r.violations.push_back(who + ": " + label + " forced set disagrees with the oracle");
            for (std::size_t e = 0; e < tg.graph.edges().size(); ++e)
                if (!detail::forces_any(tg, e, cat.order, other, {}))
                    r.violations.push_back(who + ": " + label + " edge " + std::to_string(e) +
                                           " gains nothing in the other factor's set");
        };
        check_factor(sp.first, sp.first_forced, sp.second_forced, "first");
        check_factor(sp.second, sp.second_forced, sp.first_forced, "second");
    }
    return r;
}

} // namespace spcrit
