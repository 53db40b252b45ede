#include <lda/error.hpp>
#include <lda/families.hpp>
#include <lda/labeling.hpp>
#include <lda/solver.hpp>

#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace lda;

namespace {

auto solved(const Graph & g, const SearchBudget & budget = {}) -> int
{
    auto r = chi_ld_exact(g, budget);
    EXPECT_TRUE(r.exhausted);
    EXPECT_TRUE(r.witness.has_value());
    if (! r.exhausted || ! r.witness)
        return -1;
    auto report = verify_lda(g, *r.witness);
    EXPECT_TRUE(report.is_lda);
    EXPECT_EQ(report.color_count, *r.upper);
    EXPECT_EQ(r.lower, *r.upper);
    return *r.upper;
}

} // namespace

TEST(Solver, Examples)
{
    EXPECT_EQ(solved(cycle_graph(4)), 2);
    EXPECT_EQ(solved(cycle_graph(5)), 5);
    EXPECT_EQ(solved(path_graph(4)), 4);
}

TEST(Solver, Cycles)
{
    std::vector<int> expected{3, 2, 5, 4, 5, 4, 5, 4};
    for (int n = 3; n <= 10; ++n)
        EXPECT_EQ(solved(cycle_graph(n)), expected[n - 3]) << "C" << n;
}

TEST(Solver, Paths)
{
    std::vector<int> expected{2, 2, 4, 3, 4, 4, 4, 4, 4};
    for (int n = 2; n <= 10; ++n)
        EXPECT_EQ(solved(path_graph(n)), expected[n - 2]) << "P" << n;
}

TEST(Solver, CompleteGraphs)
{
    for (int n = 2; n <= 7; ++n)
        EXPECT_EQ(solved(complete_graph(n)), n) << "K" << n;
}

TEST(Solver, CompleteMultipartite)
{
    std::function<void(std::vector<int>, int)> walk = [&](std::vector<int> parts, int left) {
        if (parts.size() >= 2 && parts.size() <= 3)
            EXPECT_EQ(solved(complete_multipartite(parts)), static_cast<int>(parts.size()))
                << family_name(MultipartiteSpec{parts});
        if (parts.size() == 3)
            return;
        for (int p = parts.empty() ? 1 : parts.back(); p <= left; ++p) {
            auto next = parts;
            next.push_back(p);
            walk(next, left - p);
        }
    };
    walk({}, 8);
}

TEST(Solver, FriendshipAndBistars)
{
    EXPECT_EQ(solved(friendship_graph(2)), 5);
    EXPECT_EQ(solved(friendship_graph(3)), 7);
    EXPECT_EQ(solved(bistar_graph(2, 2)), 4);
    EXPECT_EQ(solved(bistar_graph(2, 3)), 4);
}

TEST(Solver, MatchesBruteForceOnRandomGraphs)
{
    oracle::Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = rng.connected_graph(2 + rng.below(6), 0.35);
        auto expected = oracle::chi_ld(g);
        auto r = chi_ld_exact(g);
        ASSERT_TRUE(expected.has_value());
        ASSERT_TRUE(r.exhausted);
        ASSERT_EQ(*r.upper, *expected);
    }
}

TEST(Solver, WitnessProperties)
{
    oracle::Rng rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = rng.connected_graph(3 + rng.below(6), 0.3);
        auto r = chi_ld_exact(g);
        ASSERT_TRUE(r.exhausted);
        ASSERT_GE(*r.upper, chi_exact(g));
        auto w = weights(g, *r.witness);
        for (auto [u, v] : sym_diff_property_pairs(g))
            ASSERT_NE(w[u], w[v]);
        if (is_tree(g))
            ASSERT_GE(*r.upper, tree_leaf_lower_bound(g));
    }
}

TEST(Solver, ThreadsAndSymmetryAgree)
{
    oracle::Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = rng.connected_graph(4 + rng.below(5), 0.3);
        int base = solved(g);
        EXPECT_EQ(solved(g, {.threads = 4}), base);
        EXPECT_EQ(solved(g, {.symmetry = true}), base);
        EXPECT_EQ(solved(g, {.threads = 3, .symmetry = true}), base);
    }
    EXPECT_EQ(solved(cycle_graph(9), {.threads = 4, .symmetry = true}), 5);
}

TEST(Solver, Deterministic)
{
    auto a = chi_ld_exact(path_graph(8));
    auto b = chi_ld_exact(path_graph(8));
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
    EXPECT_EQ(a.witness, b.witness);
}

TEST(Solver, BudgetExhaustionGivesInterval)
{
    auto r = chi_ld_exact(cycle_graph(10), {.max_nodes = 500});
    EXPECT_FALSE(r.exhausted);
    EXPECT_GE(r.lower, 2);
    EXPECT_LE(r.lower, 4);
    if (r.upper)
        EXPECT_GE(*r.upper, r.lower);
}

TEST(Solver, Rejections)
{
    auto kind = [](auto && fn) -> std::optional<ErrorKind> {
        try {
            fn();
        } catch (const Error & e) {
            return e.kind();
        }
        return std::nullopt;
    };
    EXPECT_EQ(kind([] { chi_ld_exact(cycle_graph(12)); }), ErrorKind::budget);
    EXPECT_EQ(kind([] { chi_ld_exact(Graph(3, {{0, 1}})); }), ErrorKind::domain);
    EXPECT_EQ(kind([] { chi_exact(cycle_graph(17)); }), ErrorKind::budget);
}

TEST(Feasibility, Examples)
{
    auto c4 = exists_lda_with_at_most(cycle_graph(4), 2);
    EXPECT_EQ(c4.status, Feasibility::found);
    ASSERT_TRUE(c4.witness);
    EXPECT_LE(verify_lda(cycle_graph(4), *c4.witness).color_count, 2);
    EXPECT_EQ(exists_lda_with_at_most(cycle_graph(3), 2).status, Feasibility::absent);
    EXPECT_EQ(exists_lda_with_at_most(complete_graph(2), 1).status, Feasibility::absent);
    EXPECT_EQ(exists_lda_with_at_most(cycle_graph(10), 4, {.max_nodes = 10}).status, Feasibility::indeterminate);
}

TEST(Feasibility, FilterRestrictsWitnesses)
{
    auto g = cycle_graph(4);
    auto r = exists_lda_with_at_most(g, 2, {}, [](const Labeling & f) { return f[0] == 4; });
    ASSERT_EQ(r.status, Feasibility::found);
    EXPECT_EQ((*r.witness)[0], 4);
    auto none = exists_lda_with_at_most(g, 4, {}, [](const Labeling &) { return false; });
    EXPECT_EQ(none.status, Feasibility::absent);
}

TEST(Chromatic, Examples)
{
    EXPECT_EQ(chi_exact(cycle_graph(5)), 3);
    EXPECT_EQ(chi_exact(complete_multipartite({2, 3})), 2);
    EXPECT_EQ(chi_exact(complete_graph(5)), 5);
    EXPECT_EQ(chi_exact(wheel_graph(5)), 4);
}

TEST(Chromatic, MatchesBruteForce)
{
    oracle::Rng rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = rng.graph(1 + rng.below(8), 0.45);
        ASSERT_EQ(chi_exact(g), oracle::chromatic(g));
    }
}

TEST(Orbits, Examples)
{
    EXPECT_EQ(automorphism_orbits(cycle_graph(6)).size(), 1u);
    EXPECT_EQ(automorphism_orbits(path_graph(4)), (std::vector<std::vector<int>>{{0, 3}, {1, 2}}));
    EXPECT_EQ(automorphism_orbits(star_graph(3)), (std::vector<std::vector<int>>{{0}, {1, 2, 3}}));
}

TEST(Orbits, MatchBruteForce)
{
    oracle::Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = rng.graph(1 + rng.below(7), 0.4);
        ASSERT_EQ(automorphism_orbits(g), oracle::orbits(g));
    }
}

TEST(Table, CyclesAgree)
{
    auto rows = reproduce_table(TableFamily::cycles, 3, 10);
    ASSERT_EQ(rows.size(), 8u);
    for (const auto & row : rows) {
        EXPECT_TRUE(row.result.exhausted) << row.instance;
        EXPECT_EQ(row.agrees, std::optional<bool>(true)) << row.instance;
    }
    auto text = format_table(rows);
    EXPECT_EQ(text.substr(0, text.find('\n')), "instance  order  chi_ld  known  agrees");
    EXPECT_NE(text.find("C5            5       5      5     yes"), std::string::npos);
}

TEST(Table, PathsAndSmallFamilies)
{
    for (auto family : {TableFamily::paths, TableFamily::complete, TableFamily::friendship, TableFamily::books}) {
        int to = family == TableFamily::paths ? 10 : family == TableFamily::complete ? 6 : 3;
        for (const auto & row : reproduce_table(family, table_family_min(family), to))
            EXPECT_EQ(row.agrees, std::optional<bool>(true)) << row.instance;
    }
}

TEST(Table, BudgetedRowsAreUndecided)
{
    auto rows = reproduce_table(TableFamily::cycles, 10, 10, {.max_nodes = 100});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_FALSE(rows[0].result.exhausted);
    EXPECT_FALSE(rows[0].agrees.has_value());
    EXPECT_NE(format_table(rows).find('?'), std::string::npos);
}

TEST(Table, KnownValues)
{
    auto c11 = known_value(TableFamily::cycles, 11);
    ASSERT_TRUE(c11);
    EXPECT_EQ(c11->lower, 4);
    EXPECT_EQ(c11->upper, 5);
    EXPECT_EQ(known_value(TableFamily::cycles, 16)->upper, 6);
    EXPECT_EQ(known_value(TableFamily::paths, 11)->lower, 3);
    EXPECT_FALSE(known_value(TableFamily::cycles, 2));
}

TEST(Table, Csv)
{
    auto csv = format_table_csv(reproduce_table(TableFamily::paths, 2, 3));
    EXPECT_EQ(csv, "instance,parameter,order,lower,upper,exhausted,known_lower,known_upper,agrees\n"
                   "P2,2,2,2,2,true,2,2,yes\n"
                   "P3,3,3,2,2,true,2,2,yes\n");
}

TEST(Table, FamilyNames)
{
    for (auto family : {TableFamily::cycles, TableFamily::paths, TableFamily::complete, TableFamily::friendship,
                        TableFamily::books, TableFamily::wheels})
        EXPECT_EQ(parse_table_family(table_family_name(family)), family);
    EXPECT_THROW(parse_table_family("stars"), Error);
}
