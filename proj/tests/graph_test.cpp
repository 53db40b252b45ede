#include <lda/error.hpp>
#include <lda/families.hpp>
#include <lda/graph.hpp>

#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace lda;

namespace {

auto degree_sum(const Graph & g) -> int
{
    int s = 0;
    for (int v = 0; v < g.order(); ++v)
        s += g.degree(v);
    return s;
}

auto sorted_degrees(const Graph & g) -> std::vector<int>
{
    auto d = degrees(g);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST(Graph, NormalisesAndSortsEdges)
{
    Graph g(4, {{3, 2}, {0, 1}, {2, 0}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}}));
    EXPECT_EQ(g.neighbors(2), (std::vector<int>{0, 3}));
    EXPECT_TRUE(g.adjacent(3, 2));
    EXPECT_FALSE(g.adjacent(1, 3));
}

TEST(Graph, RejectsLoopsDuplicatesAndBadIds)
{
    EXPECT_THROW(Graph(3, {{1, 1}}), Error);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
    EXPECT_THROW(Graph(3, {{0, 3}}), Error);
    EXPECT_THROW(Graph(-1, {}), Error);
}

TEST(Graph, AdjacencyMatchesEdgesOnWideGraphs)
{
    oracle::Rng rng(7);
    auto g = rng.graph(150, 0.05);
    auto a = oracle::matrix(g);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            ASSERT_EQ(g.adjacent(u, v), a[u][v] != 0);
}

TEST(Families, SmallShapes)
{
    auto c4 = cycle_graph(4);
    EXPECT_EQ(c4.order(), 4);
    EXPECT_EQ(c4.size(), 4);
    EXPECT_EQ(regular_degree(c4), 2);

    auto book = book_c4(2);
    EXPECT_EQ(book.order(), 7);
    EXPECT_EQ(book.size(), 8);
    EXPECT_EQ(book.degree(0), 4);
    // cycles u x_i z_i y_i
    EXPECT_TRUE(book.adjacent(0, 1) && book.adjacent(1, 5) && book.adjacent(5, 3) && book.adjacent(3, 0));

    auto f2 = friendship_graph(2);
    EXPECT_EQ(f2.order(), 5);
    EXPECT_EQ(f2.size(), 6);

    auto w = wheel_graph(5);
    EXPECT_EQ(w.degree(5), 5);
    EXPECT_EQ(w.size(), 10);

    auto b = bistar_graph(2, 3);
    EXPECT_EQ(b.order(), 7);
    EXPECT_TRUE(b.adjacent(0, 1));
    EXPECT_TRUE(b.adjacent(0, 2) && b.adjacent(0, 3));
    EXPECT_TRUE(b.adjacent(1, 4) && b.adjacent(1, 6));

    auto k = complete_multipartite({2, 3});
    EXPECT_EQ(k.size(), 6);
    EXPECT_FALSE(k.adjacent(0, 1));
    EXPECT_TRUE(k.adjacent(1, 2));
}

TEST(Families, RejectOutOfRangeParameters)
{
    EXPECT_THROW(cycle_graph(2), Error);
    EXPECT_THROW(wheel_graph(2), Error);
    EXPECT_THROW(path_graph(0), Error);
    EXPECT_THROW(complete_multipartite({}), Error);
    EXPECT_THROW(tree_graph(4, {{0, 1}, {1, 2}}), Error);
}

TEST(Families, GenerateDispatchesAndNames)
{
    EXPECT_EQ(generate(CycleSpec{5}), cycle_graph(5));
    EXPECT_EQ(generate(BookSpec{3}), book_c4(3));
    EXPECT_EQ(family_name(CycleSpec{5}), "C5");
    EXPECT_EQ(family_name(PathSpec{4}), "P4");
    EXPECT_EQ(family_name(MultipartiteSpec{{2, 3}}), "K(2,3)");
}

TEST(Families, HandshakeHoldsEverywhere)
{
    std::vector<Graph> all = {path_graph(7),     cycle_graph(9),          complete_graph(6),
                              star_graph(5),     bistar_graph(3, 4),      friendship_graph(4),
                              wheel_graph(7),    book_c4(5),              complete_multipartite({1, 2, 3}),
                              empty_graph(3)};
    for (const auto & g : all)
        EXPECT_EQ(degree_sum(g), 2 * g.size());
}

TEST(Products, DisjointUnionLayout)
{
    EXPECT_EQ(disjoint_union(cycle_graph(4), 1), cycle_graph(4));
    auto two = disjoint_union(cycle_graph(4), 2);
    EXPECT_EQ(two.order(), 8);
    EXPECT_EQ(two.size(), 8);
    EXPECT_EQ(component_count(two), 2);
    EXPECT_TRUE(two.adjacent(4, 5));
    EXPECT_EQ(disjoint_union(complete_multipartite({2, 3}), 2).size(), 12);
}

TEST(Products, CoronaLayout)
{
    auto c = corona_empty(cycle_graph(4), 2);
    EXPECT_EQ(c.order(), 12);
    EXPECT_EQ(c.size(), 12);
    for (int v = 0; v < 4; ++v)
        for (int j = 0; j < 2; ++j) {
            int id = 4 + v * 2 + j;
            EXPECT_EQ(c.neighbors(id), std::vector<int>{v});
        }
    auto p4 = corona_empty(complete_graph(2), 1);
    EXPECT_EQ(p4, Graph(4, {{0, 1}, {0, 2}, {1, 3}}));
    EXPECT_TRUE(is_tree(p4));
    EXPECT_EQ(sorted_degrees(p4), sorted_degrees(path_graph(4)));
    EXPECT_EQ(corona_empty(cycle_graph(4), 4).order(), 20);
}

TEST(Products, DirectProductMatchesDefinition)
{
    oracle::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = rng.graph(1 + rng.below(5), 0.5);
        auto h = rng.graph(1 + rng.below(5), 0.5);
        auto p = direct_product(g, h);
        int m = h.order();
        ASSERT_EQ(p.order(), g.order() * m);
        for (int a = 0; a < p.order(); ++a)
            for (int b = 0; b < p.order(); ++b) {
                bool expect = g.adjacent(a / m, b / m) && h.adjacent(a % m, b % m);
                ASSERT_EQ(p.adjacent(a, b), expect);
            }
        for (int v = 0; v < p.order(); ++v)
            ASSERT_EQ(p.degree(v), g.degree(v / m) * h.degree(v % m));
    }
}

TEST(Products, LexicographicProductMatchesDefinition)
{
    oracle::Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = rng.graph(1 + rng.below(5), 0.5);
        auto h = rng.graph(1 + rng.below(5), 0.5);
        auto p = lexicographic_product(g, h);
        int m = h.order();
        for (int a = 0; a < p.order(); ++a)
            for (int b = 0; b < p.order(); ++b) {
                bool expect = g.adjacent(a / m, b / m) || (a / m == b / m && h.adjacent(a % m, b % m));
                ASSERT_EQ(p.adjacent(a, b), expect);
            }
        for (int v = 0; v < p.order(); ++v)
            ASSERT_EQ(p.degree(v), g.degree(v / m) * m + h.degree(v % m));
    }
}

TEST(Products, SmallIdentities)
{
    EXPECT_EQ(sorted_degrees(lexicographic_product(complete_graph(2), empty_graph(2))), (std::vector<int>{2, 2, 2, 2}));
    EXPECT_TRUE(is_complete_bipartite(lexicographic_product(complete_graph(2), empty_graph(2))));
    EXPECT_EQ(lexicographic_product(complete_graph(2), complete_graph(2)), complete_graph(4));
    auto c4k2 = lexicographic_product(cycle_graph(4), complete_graph(2));
    EXPECT_EQ(regular_degree(c4k2), 5);
    auto k2k2 = direct_product(complete_graph(2), complete_graph(2));
    EXPECT_EQ(component_count(k2k2), 2);
    EXPECT_EQ(k2k2.size(), 2);
}

TEST(Products, K2TimesK23IsTwoCopiesOfK23)
{
    auto p = direct_product(complete_graph(2), complete_multipartite({2, 3}));
    auto u = disjoint_union(complete_multipartite({2, 3}), 2);
    EXPECT_EQ(p.order(), 10);
    EXPECT_EQ(p.size(), 12);
    EXPECT_EQ(sorted_degrees(p), sorted_degrees(u));
    EXPECT_EQ(component_count(p), 2);
    auto comp = component_ids(p);
    for (int c = 0; c < 2; ++c) {
        std::vector<int> keep, index(p.order(), -1);
        for (int v = 0; v < p.order(); ++v)
            if (comp[v] == c) {
                index[v] = static_cast<int>(keep.size());
                keep.push_back(v);
            }
        std::vector<Edge> edges;
        for (auto [a, b] : p.edges())
            if (index[a] >= 0)
                edges.push_back({index[a], index[b]});
        auto part = is_complete_bipartite(Graph(static_cast<int>(keep.size()), edges));
        ASSERT_TRUE(part);
        EXPECT_EQ(std::min(part->left.size(), part->right.size()), 2u);
        EXPECT_EQ(std::max(part->left.size(), part->right.size()), 3u);
    }
}

TEST(Products, JoinK1)
{
    EXPECT_EQ(join_k1(cycle_graph(4)), wheel_graph(4));
    EXPECT_EQ(join_k1(empty_graph(4)), Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    EXPECT_EQ(sorted_degrees(join_k1(cycle_graph(4))), (std::vector<int>{3, 3, 3, 3, 4}));
}

TEST(Structure, SymmetricDifference)
{
    EXPECT_EQ(sym_diff_size(cycle_graph(4), 0, 2), 0);
    EXPECT_EQ(sym_diff_size(path_graph(3), 0, 1), 3);
    EXPECT_EQ(sym_diff_size(complete_graph(2), 0, 1), 2);
    EXPECT_THROW(sym_diff_size(complete_graph(2), 0, 5), Error);
}

TEST(Structure, CompleteBipartiteDetection)
{
    auto k23 = is_complete_bipartite(complete_multipartite({2, 3}));
    ASSERT_TRUE(k23);
    EXPECT_EQ(k23->left.size() + k23->right.size(), 5u);
    EXPECT_EQ(std::min(k23->left.size(), k23->right.size()), 2u);
    auto prod = direct_product(cycle_graph(3), complete_multipartite({2, 2}));
    EXPECT_EQ(regular_degree(prod), 4);
    EXPECT_TRUE(is_connected(prod));
    EXPECT_FALSE(is_complete_bipartite(prod));
    EXPECT_FALSE(is_complete_bipartite(cycle_graph(6)));
    EXPECT_TRUE(is_complete_bipartite(cycle_graph(4)));
    EXPECT_FALSE(is_complete_bipartite(disjoint_union(complete_graph(2), 2)));
}

TEST(Structure, Queries)
{
    auto b = bistar_graph(3, 3);
    EXPECT_EQ(pendant_classes(b).size(), 2u);
    EXPECT_EQ(pendant_vertices(b).size(), 6u);
    EXPECT_TRUE(is_tree(b));

    auto c5 = cycle_graph(5);
    EXPECT_EQ(regular_degree(c5), 2);
    EXPECT_FALSE(bipartition(c5));

    auto corona = corona_empty(cycle_graph(4), 2);
    EXPECT_EQ(pendant_vertices(corona).size(), 8u);
    EXPECT_EQ(pendant_classes(corona).size(), 4u);

    EXPECT_TRUE(has_isolated_vertex(empty_graph(2)));
    EXPECT_FALSE(is_tree(cycle_graph(3)));
    EXPECT_EQ(component_count(disjoint_union(complete_multipartite({2, 3}), 3)), 3);
}

TEST(Structure, BipartitionIsProperOnRandomBipartiteGraphs)
{
    oracle::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        int a = 1 + rng.below(5), b = 1 + rng.below(5);
        std::vector<Edge> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (rng.chance(0.5))
                    edges.push_back({u, a + v});
        Graph g(a + b, edges);
        auto part = bipartition(g);
        ASSERT_TRUE(part);
        std::vector<int> side(g.order(), -1);
        for (int v : part->left)
            side[v] = 0;
        for (int v : part->right)
            side[v] = 1;
        for (int v = 0; v < g.order(); ++v)
            ASSERT_NE(side[v], -1);
        for (auto [u, v] : g.edges())
            ASSERT_NE(side[u], side[v]);
    }
}
