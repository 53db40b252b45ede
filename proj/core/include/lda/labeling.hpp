#pragma once

#include <lda/graph.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace lda {

// label[v] in 1..n, a bijection.
using Labeling = std::vector<int>;
using Weight = std::int64_t;
using WeightProfile = std::vector<Weight>;

struct VerificationReport {
    bool is_lda = false;
    int color_count = 0;
    WeightProfile weights;
    // Edges (u, v), u < v, with equal weights, sorted.
    std::vector<Edge> violations;
    std::map<Weight, std::vector<int>> weight_classes;
};

// Throws ErrorKind::invalid_labeling unless f is a bijection onto 1..n.
void check_bijection(const Labeling & f, int n);

auto weights(const Graph & g, const Labeling & f) -> WeightProfile;
auto verify_lda(const Graph & g, const Labeling & f) -> VerificationReport;
auto distinct_count(const WeightProfile & w) -> int;

// Pairs u < v whose open neighbourhoods differ in one or two vertices.
auto sym_diff_property_pairs(const Graph & g) -> std::vector<Edge>;

// Number of support vertices plus one.
auto tree_leaf_lower_bound(const Graph & tree) -> int;

struct PendantBound {
    int s = 0;
    int certified = 0;
};

auto pendant_lower_bound(const Graph & g) -> PendantBound;

// n + 1 - f(v).
auto complement_labeling(const Labeling & f) -> Labeling;

} // namespace lda
