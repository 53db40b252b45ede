#pragma once

#include <lda/graph.hpp>

#include <optional>
#include <vector>

namespace lda {

// +1 (blue) or -1 (red) per vertex id.
using SignColoring = std::vector<int>;

struct NbcCensus {
    int rr = 0;
    int bb = 0;
    int rb = 0;
    int r = 0;
    int b = 0;

    auto operator==(const NbcCensus &) const -> bool = default;
};

auto verify_nbc(const Graph & g, const SignColoring & sigma) -> bool;
// Only non-leaf vertices need a zero neighbour sum.
auto verify_interior_nbc(const Graph & tree, const SignColoring & sigma) -> bool;
auto census(const Graph & g, const SignColoring & sigma) -> NbcCensus;

// ++--++-- around the cycle; requires n divisible by 4.
auto nbc_cycle(int n) -> SignColoring;
// First half of every part +1, second half -1; requires all parts even.
auto nbc_complete_multipartite(const std::vector<int> & parts) -> SignColoring;
// Colouring balancing every non-leaf vertex of a tree whose internal degrees are all even.
auto nbc_tree_interior(const Graph & tree) -> SignColoring;

struct NbcSearchOptions {
    int max_vertices = 24;
    // When set only non-leaf vertices must balance.
    bool interior_only = false;
};

// Returns the first valid colouring in lexicographic order with +1 before -1.
auto nbc_search(const Graph & g, const NbcSearchOptions & options = {}) -> std::optional<SignColoring>;

} // namespace lda
