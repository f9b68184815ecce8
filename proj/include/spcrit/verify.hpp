#pragma once

/// \file verify.hpp
/// \brief The verification battery run by `spcrit verify`: sum table,
/// shift-hit inclusion, oracle vs DP forced sets, recursive vs oracle
/// families, the s(i)^s(j) proposition and the critical catalog checks.

#include "atlas.hpp"
#include "critical.hpp"
#include "cyc_ring.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "hom.hpp"
#include "parallel.hpp"

#include <array>
#include <string>
#include <vector>

namespace spcrit {

/// Guard for the exhaustive scans; both caps must hold without override.
inline constexpr SizeBound max_battery_bound{12, 16};

inline void check_battery_guard(SizeBound bound, bool override_guards)
{
    if (override_guards)
        return;
    if (bound.max_vertices > max_battery_bound.max_vertices || bound.max_edges > max_battery_bound.max_edges)
        throw GuardRefusal("exhaustive enumeration beyond " + std::to_string(max_battery_bound.max_vertices) +
                           " vertices / " + std::to_string(max_battery_bound.max_edges) +
                           " edges refused; pass --override-guards to run anyway");
}

/// Sum table of the six proper symmetric subsets of Z5 against the
/// expected aliases (row + column).
inline VerificationReport check_sum_table()
{
    static const std::array<const char*, 6> head{"s0", "s1", "s2", "sb0", "sb1", "sb2"};
    static const std::array<std::array<const char*, 6>, 6> expected{{
        {"s0", "s1", "s2", "sb0", "sb1", "sb2"},
        {"s1", "sb1", "sb0", "Z", "sb0", "Z"},
        {"s2", "sb0", "sb2", "Z", "Z", "sb0"},
        {"sb0", "Z", "Z", "Z", "Z", "Z"},
        {"sb1", "sb0", "Z", "Z", "Z", "Z"},
        {"sb2", "Z", "sb0", "Z", "Z", "Z"},
    }};
    const CycleOrder order(2);
    VerificationReport r{"sum_table", 0, {}, {}};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            ++r.checked;
            const SymSet sum = mink_sum(parse_sym_set(order, head[i]), parse_sym_set(order, head[j]));
            if (sum != parse_sym_set(order, expected[i][j]))
                r.violations.push_back(std::string(head[i]) + " + " + head[j] + " = " + alias(sum) + ", expected " +
                                       expected[i][j]);
        }
    return r;
}

/// complement(Q_S) is contained in (complement Q)_S for every symmetric Q
/// and nonempty symmetric S.
inline VerificationReport check_shift_complement(CycleOrder order)
{
    VerificationReport r{"shift_complement", 0, {}, {}};
    const auto all = enumerate_symmetric_subsets(order, false);
    for (const auto& q : all)
        for (const auto& s : all) {
            if (s.is_empty())
                continue;
            ++r.checked;
            if (!complement(shift_hits(q, s)).subset_of(shift_hits(complement(q), s)))
                r.violations.push_back("Q=" + to_string(q) + " S=" + to_string(s));
        }
    return r;
}

/// forced_set_oracle = forced_set_dp on every expression with at most
/// \p max_edges edges.
inline VerificationReport check_oracle_dp(CycleOrder order, int max_edges, int jobs = 1)
{
    VerificationReport r{"oracle_dp", 0, {}, {}};
    const auto exprs = enumerate_expressions(max_edges);
    std::vector<char> bad(exprs.size(), 0);
    parallel_for(exprs.size(), jobs, [&](std::size_t i) {
        bad[i] = forced_set_oracle(realize(exprs[i]), order).set != forced_set_dp(exprs[i], order);
    });
    r.checked = exprs.size();
    for (std::size_t i = 0; i < exprs.size(); ++i)
        if (bad[i])
            r.violations.push_back(to_string(exprs[i]));
    return r;
}

namespace detail {

inline void diff_keys(VerificationReport& r, const std::string& what, const std::set<CanonKey>& a,
                      const std::set<CanonKey>& b)
{
    ++r.checked;
    if (a != b)
        r.violations.push_back(what + ": " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                               " members");
}

} // namespace detail

/// Recursive families against the oracle scan for every refined tag; for
/// k = 2 also the four-rule closure against the plain tags. Parallel
/// members must have factors whose forced sets do not contain each other.
inline VerificationReport check_families(CycleOrder order, SizeBound bound, int jobs = 1)
{
    VerificationReport r{"families", 0, {}, {}};
    const RefinedFamilies recursive(order, bound);
    const OracleFamilies oracle(order, bound, jobs);
    for (const auto& tag : recursive.tags())
        detail::diff_keys(r, "recursive " + to_string(tag), recursive.catalog({tag}).keys(tag),
                          oracle.catalog({tag}).keys(tag));

    const auto plain = plain_tags(order);
    const FamilyCatalog oracle_plain = oracle.catalog(plain);
    if (order.k() == 2) {
        const FamilyCatalog closure = build_T_closure(bound);
        for (const auto& tag : plain)
            detail::diff_keys(r, "closure " + to_string(tag), closure.keys(tag), oracle_plain.keys(tag));
    }
    r.stats["union"] = static_cast<long>(oracle_plain.union_members().size());

    for (const auto& m : oracle_plain.union_members()) {
        if (m.expr.kind() != NodeKind::Parallel)
            continue;
        const auto kids = m.expr.children();
        for (std::size_t i = 0; i < kids.size(); ++i) {
            // compare each child with the parallel sum of the others
            std::vector<SpExpr> rest;
            for (std::size_t j = 0; j < kids.size(); ++j)
                if (j != i)
                    rest.push_back(kids[j]);
            const SymSet a = forced_set_dp(kids[i], order);
            const SymSet b = forced_set_dp(rest.size() == 1 ? rest.front() : SpExpr::parallel(rest), order);
            if (a.subset_of(b) || b.subset_of(a))
                r.violations.push_back(m.key.bytes + ": nested factor forced sets");
        }
    }
    return r;
}

/// F_{s(i)}^{s(j)} is empty for i != 1; for i = 1 it holds K2 and serial
/// sums of K2 with an s(0)-forcing member.
inline VerificationReport check_orbit_proposition(CycleOrder order, int max_edges, int jobs = 1)
{
    VerificationReport r{"orbit_proposition", 0, {}, {}};
    const OracleFamilies oracle(order, SizeBound{max_edges + 1, max_edges}, jobs);
    const SymSet zero = SymSet::orbit(order, 0);
    const auto s0_member = [&](const std::vector<SpExpr>& parts) {
        const SpExpr e = parts.size() == 1 ? parts.front() : SpExpr::serial(parts);
        const auto forced = is_minimally_forcing(e, order);
        return forced && *forced == zero;
    };
    long members = 0;
    for (int i = 0; i <= order.k(); ++i)
        for (int j = 0; j <= order.k(); ++j) {
            if (i == j)
                continue;
            const FamilyTag tag(SymSet::orbit(order, i), SymSet::orbit(order, j));
            ++r.checked;
            for (const auto& m : oracle.members(tag)) {
                ++members;
                const std::string who = to_string(tag) + " " + to_string(m.expr);
                if (i != 1) {
                    r.violations.push_back(who + ": family should be empty");
                    continue;
                }
                if (m.expr.is_leaf())
                    continue;
                bool ok = false;
                if (m.expr.kind() == NodeKind::Serial) {
                    const auto kids = m.expr.children();
                    const std::vector<SpExpr> all(kids.begin(), kids.end());
                    if (all.front().is_leaf() && s0_member({all.begin() + 1, all.end()}))
                        ok = true;
                    if (all.back().is_leaf() && s0_member({all.begin(), all.end() - 1}))
                        ok = true;
                }
                if (!ok)
                    r.violations.push_back(who + ": not K2 plus an s(0)-forcing member");
            }
        }
    r.stats["members"] = members;
    return r;
}

/// Composition-route and brute-force catalogs agree.
inline VerificationReport check_critical_equivalence(const CriticalCatalog& generated,
                                                     const CriticalCatalog& bruteforce)
{
    VerificationReport r{"critical_equivalence", generated.members.size() + bruteforce.members.size(), {}, {}};
    const auto d = compare_catalogs(generated, bruteforce);
    for (const auto& k : d.only_first)
        r.violations.push_back("generated only: " + k.bytes);
    for (const auto& k : d.only_second)
        r.violations.push_back("brute force only: " + k.bytes);
    for (const auto& v : generated.violations)
        r.violations.push_back(v);
    r.stats["members"] = static_cast<long>(generated.members.size());
    return r;
}

struct BatteryResult {
    std::vector<VerificationReport> checks;

    bool ok() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const VerificationReport& c) { return c.ok(); });
    }
};

/// Everything `spcrit verify` runs. Forced-set and proposition scans use
/// 8 edges; family and critical scans use \p bound.
inline BatteryResult run_battery(CycleOrder order, SizeBound bound, int jobs = 1, bool override_guards = false)
{
    check_battery_guard(bound, override_guards);
    BatteryResult out;
    if (order.k() == 2)
        out.checks.push_back(check_sum_table());
    out.checks.push_back(check_shift_complement(order));
    out.checks.push_back(check_oracle_dp(order, 8, jobs));
    out.checks.push_back(check_families(order, bound, jobs));
    out.checks.push_back(check_orbit_proposition(order, 8, jobs));

    const CriticalCatalog generated = generate_critical(order, bound, jobs);
    const CriticalCatalog brute = filter_critical_bruteforce(order, bound, jobs);
    out.checks.push_back(check_critical_equivalence(generated, brute));
    out.checks.push_back(verify_structure(generated, jobs));
    out.checks.push_back(verify_splits(generated));
    if (order.k() == 2) {
        VerificationReport atlas{"atlas", 1, {}, {}};
        try {
            const auto entries = base_atlas();
            const FamilyCatalog fams = RefinedFamilies(order, bound).catalog(plain_tags(order));
            out.checks.push_back(atlas);
            out.checks.push_back(verify_colourability_theorem(generated, fams, entries[3].expr, entries[4].expr));
        } catch (const InvariantViolation& e) {
            atlas.violations.push_back(e.what());
            out.checks.push_back(atlas);
        }
        out.checks.push_back(verify_girth_bound(generated));
    }
    return out;
}

} // namespace spcrit
