#include "spcrit/atlas.hpp"
#include "spcrit/families.hpp"
#include "spcrit/json_io.hpp"
#include "spcrit/verify.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace spcrit;

namespace {

const SpExpr E = SpExpr::leaf();

SymSet S(int k, const char* text) { return parse_sym_set(CycleOrder(k), text); }

std::set<CanonKey> keys_of(const std::vector<SpExpr>& exprs)
{
    std::set<CanonKey> out;
    for (const auto& e : exprs)
        out.insert(canonical_key(e));
    return out;
}

} // namespace

TEST(FamilyTag, ValidationAndText)
{
    const CycleOrder o(2);
    EXPECT_THROW(FamilyTag(SymSet::empty(o)), InvalidArgument);
    EXPECT_THROW(FamilyTag(SymSet::full(o)), InvalidArgument);
    EXPECT_THROW(FamilyTag(S(2, "sb1"), S(2, "s0")), InvalidArgument);
    EXPECT_EQ(to_string(parse_family_tag(o, "sb1,s1")), "sb1,s1");
    EXPECT_EQ(parse_family_tag(o, "{0,2,3},{1,4}"), parse_family_tag(o, "sb1,s1"));
    EXPECT_EQ(FamilyTag(S(2, "s1")), FamilyTag(S(2, "s1"), S(2, "sb1")));
    EXPECT_EQ(all_refined_tags(o).size(), 12u);
    EXPECT_EQ(all_refined_tags(CycleOrder(3)).size(), 50u);
}

TEST(TClosure, FiveVertexBound)
{
    const FamilyCatalog cat = build_T_closure(SizeBound{5, 16});
    const auto all = cat.union_members();
    ASSERT_EQ(all.size(), 4u);
    EXPECT_EQ(cat.keys(FamilyTag(S(2, "s1"))), keys_of({E}));
    EXPECT_EQ(cat.keys(FamilyTag(S(2, "sb1"))), keys_of({path_expr(2)}));
    EXPECT_EQ(cat.keys(FamilyTag(S(2, "sb0"))), keys_of({path_expr(3)}));
    EXPECT_EQ(cat.keys(FamilyTag(S(2, "s2"))), keys_of({parallel_sum(path_expr(2), path_expr(3))}));
}

TEST(TClosure, EqualsOracleUpToTenVertices)
{
    const SizeBound bound{10, 16};
    const FamilyCatalog closure = build_T_closure(bound);
    const FamilyCatalog oracle = OracleFamilies(CycleOrder(2), bound).catalog(plain_tags(CycleOrder(2)));
    for (const auto& tag : plain_tags(CycleOrder(2)))
        EXPECT_EQ(closure.keys(tag), oracle.keys(tag)) << to_string(tag);
    EXPECT_EQ(closure.union_members().size(), 6u);
}

TEST(TClosure, SerialWithZeroForcingKeepsTag)
{
    // rule (iv): X + Z stays in T_X when Z is s0-forcing
    const FamilyCatalog cat = build_T_closure(SizeBound{12, 16});
    const auto zeros = cat.members.at(FamilyTag(S(2, "s0")));
    ASSERT_FALSE(zeros.empty());
    const SpExpr sum = serial_sum(E, zeros.front().expr);
    EXPECT_TRUE(cat.keys(FamilyTag(S(2, "s1"))).count(canonical_key(sum)));
    EXPECT_EQ(is_minimally_forcing(sum, CycleOrder(2)), S(2, "s1"));
}

TEST(OracleFamilies, Examples)
{
    const CycleOrder o(2);
    const auto s1 = enumerate_F_oracle(FamilyTag(S(2, "s1"), S(2, "sb1")), o, SizeBound{4, 3});
    EXPECT_EQ(keys_of(s1), keys_of({E}));
    EXPECT_TRUE(enumerate_F_oracle(FamilyTag(S(2, "s0"), S(2, "sb0")), o, SizeBound{3, 2}).empty());
    const auto sb1 = enumerate_F_oracle(FamilyTag(S(2, "sb1"), S(2, "s1")), o, SizeBound{6, 6});
    EXPECT_TRUE(keys_of(sb1).count(canonical_key(path_expr(2))));
}

TEST(RefinedFamilies, EqualsOracleForEveryTag)
{
    for (const auto& [k, bound] : {std::pair{2, SizeBound{10, 16}}, std::pair{3, SizeBound{10, 16}}}) {
        const CycleOrder o(k);
        const RefinedFamilies rec(o, bound);
        const OracleFamilies orc(o, bound);
        for (const auto& tag : all_refined_tags(o))
            EXPECT_EQ(rec.catalog({tag}).keys(tag), orc.catalog({tag}).keys(tag)) << "k=" << k << " " << to_string(tag);
    }
}

TEST(RefinedFamilies, SerialOfTwoEdgesIsSb1)
{
    const auto members = build_F_recursive(FamilyTag(S(2, "sb1")), CycleOrder(2), SizeBound{10, 16});
    EXPECT_TRUE(keys_of(members).count(canonical_key(serial_sum(E, E))));
}

TEST(RefinedFamilies, MembersAreSound)
{
    for (int k : {2, 3}) {
        const CycleOrder o(k);
        const RefinedFamilies rec(o, SizeBound{9, 14});
        for (const auto& tag : rec.tags())
            for (const auto& m : rec.members(tag)) {
                ASSERT_EQ(is_minimally_forcing(m.expr, o), tag.forced) << to_string(m.expr);
                ASSERT_TRUE(refined_membership(m.expr, tag.forced, tag.effective_target(), o));
            }
    }
}

TEST(RefinedFamilies, NoSb0MemberSplitsAsS1PlusS2)
{
    const CycleOrder o(2);
    const FamilyCatalog cat = RefinedFamilies(o, SizeBound{12, 16}).catalog(plain_tags(o));
    const auto forces = [&](const std::vector<SpExpr>& parts, const SymSet& want) {
        const SpExpr e = parts.size() == 1 ? parts.front() : SpExpr::serial(parts);
        const auto f = is_minimally_forcing(e, o);
        return f && *f == want;
    };
    for (const auto& m : cat.members.at(FamilyTag(S(2, "sb0")))) {
        if (m.expr.kind() != NodeKind::Serial)
            continue;
        const std::vector<SpExpr> kids(m.expr.children().begin(), m.expr.children().end());
        for (std::size_t cut = 1; cut < kids.size(); ++cut) {
            const std::vector<SpExpr> left(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(cut));
            const std::vector<SpExpr> right(kids.begin() + static_cast<std::ptrdiff_t>(cut), kids.end());
            EXPECT_FALSE(forces(left, S(2, "s1")) && forces(right, S(2, "s2"))) << to_string(m.expr);
            EXPECT_FALSE(forces(left, S(2, "s2")) && forces(right, S(2, "s1"))) << to_string(m.expr);
        }
    }
}

TEST(Families, SingleOrbitTags)
{
    for (int k : {2, 3}) {
        const auto r = check_orbit_proposition(CycleOrder(k), 8);
        EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
        EXPECT_GT(r.stats.at("members"), 0);
    }
}

TEST(Families, BatteryCheckPasses)
{
    const auto r = check_families(CycleOrder(2), SizeBound{9, 16});
    EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
}

TEST(Atlas, Anchors)
{
    const auto atlas = base_atlas();
    ASSERT_EQ(atlas.size(), 6u);
    const int vertices[] = {2, 3, 4, 5, 9, 10};
    const char* tags[] = {"s1", "sb1", "sb0", "s2", "sb2", "s0"};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(atlas[i].name, "H" + std::to_string(i + 1));
        EXPECT_EQ(atlas[i].expr.vertex_count(), vertices[i]);
        EXPECT_EQ(to_string(atlas[i].tag), tags[i]);
        EXPECT_EQ(forced_set_oracle(realize(atlas[i].expr), CycleOrder(2)).set, atlas[i].tag.forced);
    }
    EXPECT_EQ(canonical_key(atlas[4].expr), canonical_key(serial_sum(atlas[3].expr, atlas[3].expr)));
    EXPECT_EQ(canonical_key(atlas[5].expr), canonical_key(parallel_sum(atlas[1].expr, atlas[4].expr)));
}

TEST(Atlas, MatchesGoldenFile)
{
    std::ifstream in(std::string(SPCRIT_TEST_DATA) + "/golden/atlas_k2.jsonl");
    ASSERT_TRUE(in) << "missing golden file";
    std::ostringstream want;
    want << in.rdbuf();
    std::ostringstream got;
    for (const auto& a : base_atlas())
        got << atlas_entry_to_json(a).dump() << '\n';
    EXPECT_EQ(got.str(), want.str());
}
