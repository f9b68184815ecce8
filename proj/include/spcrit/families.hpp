#pragma once

/// \file families.hpp
/// \brief Families of minimally forcing series-parallel graphs.
///
/// Three independent constructions live here:
///   - TClosure: the k = 2 rule closure seeded with K2 in T_{s(1)};
///   - RefinedFamilies: the general F_S^T recursion (parallel rule with
///     R = S ∩ T, serial rule with R = S + T and shifted targets);
///   - OracleFamilies: every expression within a bound, filtered by
///     brute-force forced sets of G and of every G - e.
/// All three report members as swap-invariant canonical keys.

#include "cyc_ring.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "hom.hpp"
#include "parallel.hpp"
#include "sp_expr.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace spcrit {

/// Names F_S^T. An absent target means T = complement of S, i.e. the plain
/// family of minimally S-forcing graphs.
struct FamilyTag {
    SymSet forced;
    std::optional<SymSet> target;

    explicit FamilyTag(SymSet s, std::optional<SymSet> t = std::nullopt) : forced(s), target(t)
    {
        if (forced.is_empty() || forced.is_full())
            throw InvalidArgument("family forced set must be nonempty and proper, got " + to_string(forced));
        if (target) {
            forced.check_same(*target);
            if (target->is_empty() || forced.intersects(*target))
                throw InvalidArgument("family target must be nonempty and disjoint from " + to_string(forced));
        }
    }

    SymSet effective_target() const { return target ? *target : complement(forced); }
    CycleOrder order() const { return forced.order(); }

    friend bool operator==(const FamilyTag& a, const FamilyTag& b)
    {
        return a.forced == b.forced && a.effective_target() == b.effective_target();
    }
    friend auto operator<=>(const FamilyTag& a, const FamilyTag& b)
    {
        if (auto c = a.forced <=> b.forced; c != 0)
            return c;
        return a.effective_target() <=> b.effective_target();
    }
};

/// "s1", or "sb1,s1" when a target is given.
inline std::string to_string(const FamilyTag& tag)
{
    if (!tag.target)
        return alias(tag.forced);
    return alias(tag.forced) + "," + alias(*tag.target);
}

inline FamilyTag parse_family_tag(CycleOrder order, std::string_view text)
{
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        depth += text[i] == '{' ? 1 : text[i] == '}' ? -1 : 0;
        if (text[i] == ',' && depth == 0)
            return FamilyTag(parse_sym_set(order, text.substr(0, i)), parse_sym_set(order, text.substr(i + 1)));
    }
    return FamilyTag(parse_sym_set(order, text));
}

/// Every tag (S, T) with S, T nonempty, symmetric and disjoint.
inline std::vector<FamilyTag> all_refined_tags(CycleOrder order)
{
    std::vector<FamilyTag> out;
    const auto sets = enumerate_symmetric_subsets(order, true);
    for (const auto& s : sets)
        for (const auto& t : enumerate_symmetric_subsets(order, false))
            if (!t.is_empty() && !s.intersects(t))
                out.emplace_back(s, t);
    return out;
}

/// The plain families F_S, one per nonempty proper symmetric S.
inline std::vector<FamilyTag> plain_tags(CycleOrder order)
{
    std::vector<FamilyTag> out;
    for (const auto& s : enumerate_symmetric_subsets(order, true))
        out.emplace_back(s);
    return out;
}

struct FamilyMember {
    CanonKey key;
    SpExpr expr; // canonical orientation
};

/// Members per tag, deduplicated by canonical key, each list ordered by
/// (vertex count, key).
struct FamilyCatalog {
    CycleOrder order;
    SizeBound bound;
    std::map<FamilyTag, std::vector<FamilyMember>> members;

    std::set<CanonKey> keys(const FamilyTag& tag) const
    {
        std::set<CanonKey> out;
        if (auto it = members.find(tag); it != members.end())
            for (const auto& m : it->second)
                out.insert(m.key);
        return out;
    }

    /// Union over all tags, one representative per key.
    std::vector<FamilyMember> union_members() const
    {
        std::map<CanonKey, SpExpr> seen;
        for (const auto& [tag, list] : members)
            for (const auto& m : list)
                seen.emplace(m.key, m.expr);
        std::vector<FamilyMember> out;
        for (auto& [k, e] : seen)
            out.push_back({k, e});
        std::stable_sort(out.begin(), out.end(), [](const FamilyMember& a, const FamilyMember& b) {
            return a.expr.vertex_count() < b.expr.vertex_count();
        });
        return out;
    }
};

namespace detail {

inline SpExpr canonical_orientation(const SpExpr& e) { return is_canonical_orientation(e) ? e : reversed(e); }

inline std::vector<FamilyMember> to_members(const std::vector<SpExpr>& exprs)
{
    std::map<CanonKey, SpExpr> seen;
    for (const auto& e : exprs)
        seen.emplace(canonical_key(e), e);
    std::vector<FamilyMember> out;
    for (auto& [k, e] : seen)
        out.push_back({k, canonical_orientation(e)});
    std::stable_sort(out.begin(), out.end(), [](const FamilyMember& a, const FamilyMember& b) {
        return a.expr.vertex_count() < b.expr.vertex_count();
    });
    return out;
}

/// Directed members of one family, bucketed by edge count.
class DirectedFamily {
public:
    explicit DirectedFamily(int max_edges) : by_edges_(static_cast<std::size_t>(max_edges) + 1) {}

    bool add(const SpExpr& e)
    {
        if (!seen_.insert(directed_key(e)).second)
            return false;
        by_edges_[static_cast<std::size_t>(e.edge_count())].push_back(e);
        return true;
    }

    const std::vector<SpExpr>& with_edges(int m) const { return by_edges_[static_cast<std::size_t>(m)]; }
    int max_edges() const { return static_cast<int>(by_edges_.size()) - 1; }

    std::vector<SpExpr> all() const
    {
        std::vector<SpExpr> out;
        for (const auto& b : by_edges_)
            out.insert(out.end(), b.begin(), b.end());
        return out;
    }

private:
    std::vector<std::vector<SpExpr>> by_edges_;
    std::unordered_set<std::string> seen_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// k = 2 closure

/// Least fixed point of the four k = 2 composition rules, seeded with K2 in
/// T_{s(1)} and built by increasing edge count. Families are closed under
/// terminal reversal (forced sets are symmetric), so both orientations of
/// every member take part in later compositions.
class TClosure {
public:
    explicit TClosure(SizeBound bound) : order_(2), bound_(bound)
    {
        for (int i = 0; i < 3; ++i) {
            sets_.push_back(SymSet::orbit(order_, i));
            sets_.push_back(SymSet::orbit_complement(order_, i));
        }
        for (std::size_t i = 0; i < sets_.size(); ++i)
            families_.emplace_back(bound.max_edges);
        add(s(1), SpExpr::leaf());
        for (int m = 2; m <= bound.max_edges; ++m)
            build_stratum(m);
    }

    CycleOrder order() const { return order_; }

    FamilyCatalog catalog() const
    {
        FamilyCatalog cat{order_, bound_, {}};
        for (std::size_t i = 0; i < sets_.size(); ++i)
            cat.members.emplace(FamilyTag(sets_[i]), detail::to_members(families_[i].all()));
        return cat;
    }

private:
    // indices into sets_
    static std::size_t s(int i) { return static_cast<std::size_t>(2 * i); }
    static std::size_t sb(int i) { return static_cast<std::size_t>(2 * i + 1); }

    void add(std::size_t family, const SpExpr& e)
    {
        if (!bound_.admits(e))
            return;
        families_[family].add(e);
        families_[family].add(reversed(e));
    }

    template <class Combine>
    void compose(int m, std::size_t left, std::size_t right, std::size_t into, int shared, Combine&& combine)
    {
        std::vector<SpExpr> made;
        for (int m1 = 1; m1 < m; ++m1)
            for (const auto& g : families_[left].with_edges(m1))
                for (const auto& h : families_[right].with_edges(m - m1))
                    if (g.vertex_count() + h.vertex_count() - shared <= bound_.max_vertices)
                        made.push_back(combine(g, h));
        for (const auto& e : made)
            add(into, e);
    }

    void build_stratum(int m)
    {
        // (i) sb(i) || sb(j) -> s(third)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                compose(m, sb(i), sb(j), s(3 - i - j), 2, parallel_sum);
        for (int i = 1; i <= 2; ++i) {
            // (ii) s(i) + s(i) -> sb(i)
            compose(m, s(i), s(i), sb(i), 1, serial_sum);
            // (iii) s(i) + sb(i) -> sb(0)
            compose(m, s(i), sb(i), sb(0), 1, serial_sum);
        }
        // (iv) X + s(0) -> X
        for (std::size_t x = 0; x < sets_.size(); ++x)
            compose(m, x, s(0), x, 1, serial_sum);
    }

    CycleOrder order_;
    SizeBound bound_;
    std::vector<SymSet> sets_;
    std::vector<detail::DirectedFamily> families_;
};

inline FamilyCatalog build_T_closure(SizeBound bound) { return TClosure(bound).catalog(); }

// ---------------------------------------------------------------------------
// general refined recursion

/// Least fixed point of the F_R^Q recursion over every tag, seeded with K2
/// in F_{s(1)}^X for each nonempty symmetric X inside sb(1).
///   parallel: R = S ∩ T, G1 in F_S^{Q ∩ (T\S)}, G2 in F_T^{Q ∩ (S\T)}
///   serial:   R = S + T, G1 in F_S^{Q_T},       G2 in F_T^{Q_S}
class RefinedFamilies {
public:
    RefinedFamilies(CycleOrder order, SizeBound bound) : order_(order), bound_(bound)
    {
        tags_ = all_refined_tags(order);
        for (std::size_t i = 0; i < tags_.size(); ++i) {
            index_.emplace(key(tags_[i].forced, tags_[i].effective_target()), i);
            families_.emplace_back(bound.max_edges);
        }
        plan_rules();

        const SymSet one = SymSet::orbit(order, 1);
        for (std::size_t i = 0; i < tags_.size(); ++i)
            if (tags_[i].forced == one && tags_[i].effective_target().subset_of(complement(one)))
                families_[i].add(SpExpr::leaf());
        for (int m = 2; m <= bound.max_edges; ++m)
            build_stratum(m);
    }

    CycleOrder order() const { return order_; }
    SizeBound bound() const { return bound_; }
    const std::vector<FamilyTag>& tags() const { return tags_; }

    /// Directed members (both orientations present) of F_S^T.
    std::vector<SpExpr> directed_members(const FamilyTag& tag) const { return families_[find(tag)].all(); }

    std::vector<FamilyMember> members(const FamilyTag& tag) const
    {
        return detail::to_members(families_[find(tag)].all());
    }

    FamilyCatalog catalog(const std::vector<FamilyTag>& wanted) const
    {
        FamilyCatalog cat{order_, bound_, {}};
        for (const auto& t : wanted)
            cat.members.emplace(t, members(t));
        return cat;
    }

    FamilyCatalog catalog() const { return catalog(tags_); }

private:
    struct Rule {
        bool parallel;
        std::size_t left;
        std::size_t right;
    };

    static std::pair<std::uint64_t, std::uint64_t> key(const SymSet& s, const SymSet& t) { return {s.bits(), t.bits()}; }

    std::size_t find(const FamilyTag& tag) const
    {
        auto it = index_.find(key(tag.forced, tag.effective_target()));
        if (it == index_.end())
            throw InvalidArgument("unknown family tag " + to_string(tag));
        return it->second;
    }

    std::size_t find(const SymSet& s, const SymSet& t) const
    {
        auto it = index_.find(key(s, t));
        if (it == index_.end())
            throw InvariantViolation("rule refers to missing tag " + to_string(s) + "," + to_string(t));
        return it->second;
    }

    void plan_rules()
    {
        const auto sets = enumerate_symmetric_subsets(order_, true);
        rules_.resize(tags_.size());
        for (std::size_t i = 0; i < tags_.size(); ++i) {
            const SymSet r = tags_[i].forced;
            const SymSet q = tags_[i].effective_target();
            for (const auto& a : sets)
                for (const auto& b : sets) {
                    if (a < b && intersect(a, b) == r) {
                        const SymSet qa = intersect(q, difference(b, a));
                        const SymSet qb = intersect(q, difference(a, b));
                        if (!qa.is_empty() && !qb.is_empty())
                            rules_[i].push_back({true, find(a, qa), find(b, qb)});
                    }
                    if (mink_sum(a, b) == r) {
                        const SymSet qa = shift_hits(q, b);
                        const SymSet qb = shift_hits(q, a);
                        if (!qa.is_empty() && !qb.is_empty())
                            rules_[i].push_back({false, find(a, qa), find(b, qb)});
                    }
                }
        }
    }

    void build_stratum(int m)
    {
        std::vector<std::vector<SpExpr>> made(tags_.size());
        for (std::size_t i = 0; i < tags_.size(); ++i)
            for (const auto& rule : rules_[i]) {
                const int shared = rule.parallel ? 2 : 1;
                for (int m1 = 1; m1 < m; ++m1)
                    for (const auto& g : families_[rule.left].with_edges(m1))
                        for (const auto& h : families_[rule.right].with_edges(m - m1)) {
                            if (g.vertex_count() + h.vertex_count() - shared > bound_.max_vertices)
                                continue;
                            made[i].push_back(rule.parallel ? parallel_sum(g, h) : serial_sum(g, h));
                        }
            }
        for (std::size_t i = 0; i < tags_.size(); ++i)
            for (const auto& e : made[i])
                families_[i].add(e);
    }

    CycleOrder order_;
    SizeBound bound_;
    std::vector<FamilyTag> tags_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index_;
    std::vector<std::vector<Rule>> rules_;
    std::vector<detail::DirectedFamily> families_;
};

inline std::vector<SpExpr> build_F_recursive(const FamilyTag& tag, CycleOrder order, SizeBound bound)
{
    std::vector<SpExpr> out;
    for (const auto& m : RefinedFamilies(order, bound).members(tag))
        out.push_back(m.expr);
    return out;
}

// ---------------------------------------------------------------------------
// oracle side

/// Brute-force evidence that (G, s, t) is minimally S-forcing: S itself and,
/// per edge, the residues G - e forces beyond S.
struct ForcingProfile {
    SymSet forced;
    std::vector<SymSet> gained; // per edge index of the realised graph
};

/// nullopt unless the graph is minimally forcing for a nonempty proper set.
inline std::optional<ForcingProfile> minimal_forcing_profile(const TerminalGraph& tg, CycleOrder order,
                                                             const HomOptions& opts = {})
{
    const SymSet s = forced_set_oracle(tg, order, opts).set;
    if (s.is_empty() || s.is_full())
        return std::nullopt;
    ForcingProfile profile{s, {}};
    for (std::size_t d = 0; d < tg.graph.edges().size(); ++d) {
        const TerminalGraph cut(tg.graph.without_edge(d), tg.s, tg.t);
        std::uint64_t bits = 0;
        for (int x : complement(s).elements())
            if (colouring_with(cut, order, x, opts))
                bits |= std::uint64_t{1} << x;
        if (bits == 0)
            return std::nullopt;
        profile.gained.push_back(SymSet::from_bits(order, bits));
    }
    return profile;
}

inline bool profile_matches(const ForcingProfile& p, const FamilyTag& tag)
{
    if (p.forced != tag.forced)
        return false;
    const SymSet t = tag.effective_target();
    return std::all_of(p.gained.begin(), p.gained.end(), [&](const SymSet& g) { return g.intersects(t); });
}

/// Every expression within the bound whose brute-force profile shows it is
/// minimally forcing.
class OracleFamilies {
public:
    OracleFamilies(CycleOrder order, SizeBound bound, int jobs = 1) : order_(order), bound_(bound)
    {
        const auto exprs = enumerate_expressions(bound);
        std::vector<std::optional<ForcingProfile>> found(exprs.size());
        parallel_for(exprs.size(), jobs, [&](std::size_t i) {
            found[i] = minimal_forcing_profile(realize(exprs[i]), order);
        });
        for (std::size_t i = 0; i < exprs.size(); ++i)
            if (found[i])
                hits_.push_back({exprs[i], std::move(*found[i])});
    }

    struct Hit {
        SpExpr expr;
        ForcingProfile profile;
    };

    const std::vector<Hit>& hits() const { return hits_; }

    std::vector<FamilyMember> members(const FamilyTag& tag) const
    {
        std::vector<SpExpr> picked;
        for (const auto& h : hits_)
            if (profile_matches(h.profile, tag))
                picked.push_back(h.expr);
        return detail::to_members(picked);
    }

    FamilyCatalog catalog(const std::vector<FamilyTag>& wanted) const
    {
        FamilyCatalog cat{order_, bound_, {}};
        for (const auto& t : wanted)
            cat.members.emplace(t, members(t));
        return cat;
    }

private:
    CycleOrder order_;
    SizeBound bound_;
    std::vector<Hit> hits_;
};

/// enumerate_expressions filtered by refined_membership.
inline std::vector<SpExpr> enumerate_F_oracle(const FamilyTag& tag, CycleOrder order, SizeBound bound)
{
    std::vector<SpExpr> out;
    const SymSet t = tag.effective_target();
    for (const auto& e : enumerate_expressions(bound))
        if (refined_membership(e, tag.forced, t, order))
            out.push_back(e);
    return out;
}

} // namespace spcrit
