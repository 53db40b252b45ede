#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lda {

using Edge = std::pair<int, int>;

// Simple undirected graph on ids 0..n-1. Immutable once built.
class Graph {
  public:
    Graph() = default;

    // Edges may be given in any order and orientation; loops, duplicates and
    // out-of-range ids are rejected with ErrorKind::invalid_spec.
    Graph(int n, std::vector<Edge> edges);

    auto order() const noexcept -> int { return n_; }
    auto size() const noexcept -> int { return static_cast<int>(edges_.size()); }

    // Sorted lexicographically, u < v in every pair.
    auto edges() const noexcept -> const std::vector<Edge> & { return edges_; }

    // Sorted ascending.
    auto neighbors(int v) const -> const std::vector<int> & { return adj_[v]; }
    auto degree(int v) const -> int { return static_cast<int>(adj_[v].size()); }
    auto adjacent(int u, int v) const -> bool
    {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }

    auto operator==(const Graph & other) const -> bool { return n_ == other.n_ && edges_ == other.edges_; }

  private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

// Copy c of vertex v gets id c*|V(G)| + v.
auto disjoint_union(const Graph & g, int copies) -> Graph;

// Pendant j of base vertex v gets id n + v*r + j.
auto corona_empty(const Graph & g, int r) -> Graph;

// (g, h) gets id g*|V(H)| + h in both products.
auto direct_product(const Graph & g, const Graph & h) -> Graph;
auto lexicographic_product(const Graph & g, const Graph & h) -> Graph;

// The apex is the new highest id.
auto join_k1(const Graph & g) -> Graph;

auto sym_diff_size(const Graph & g, int u, int v) -> int;

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

auto is_complete_bipartite(const Graph & g) -> std::optional<Bipartition>;

auto degrees(const Graph & g) -> std::vector<int>;
auto regular_degree(const Graph & g) -> std::optional<int>;
// Two-colouring with vertex 0's component side first; empty if an odd cycle exists.
auto bipartition(const Graph & g) -> std::optional<Bipartition>;
// Component index per vertex, numbered by smallest member.
auto component_ids(const Graph & g) -> std::vector<int>;
auto component_count(const Graph & g) -> int;
auto is_connected(const Graph & g) -> bool;
auto is_tree(const Graph & g) -> bool;
auto has_isolated_vertex(const Graph & g) -> bool;
auto pendant_vertices(const Graph & g) -> std::vector<int>;
// Distinct neighbourhoods of pendant vertices, i.e. the support vertices.
auto pendant_classes(const Graph & g) -> std::vector<int>;

} // namespace lda
