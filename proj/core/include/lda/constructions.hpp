#pragma once

#include <lda/coloring.hpp>
#include <lda/graph.hpp>
#include <lda/labeling.hpp>
#include <lda/magic_rectangle.hpp>

#include <optional>
#include <vector>

namespace lda {

// Every construction verifies its own output and throws rather than return
// a labeling that is not LDA or exceeds claimed_bound.
struct ConstructionResult {
    Graph graph;
    Labeling labeling;
    VerificationReport report;
    int claimed_bound = 0;
    // Lower bound on chi_ld of the graph, when the construction's setting provides one.
    std::optional<int> lower_bound;
};

// t >= 2 uses the closed form with t+1 colours; t = 1 is plain C4.
auto label_book_c4(int t) -> ConstructionResult;

// G with 2p pendants per vertex (corona_empty(G, 2p) layout).
auto label_corona(const Graph & g, const Labeling & f, int p) -> ConstructionResult;

// Per-edge disequality m*w(u) + (1-m)deg(u)/2 != m*w(v) + (1-m)deg(v)/2.
auto check_copy_condition(const Graph & g, const Labeling & f, int m) -> bool;
auto copy_condition_violations(const Graph & g, const Labeling & f, int m) -> std::vector<Edge>;

struct PendantCopyCheck {
    // Support vertices y with 0 <= m(f(y) - w(y) + deg(y)/2) - deg(y)/2 <= m-1.
    std::vector<int> failed_supports;
    // Edges between non-pendant vertices violating the copy disequality.
    std::vector<Edge> failed_edges;

    auto holds() const -> bool { return failed_supports.empty() && failed_edges.empty(); }
};

auto pendant_copy_violations(const Graph & g, const Labeling & f, int m) -> PendantCopyCheck;
auto check_pendant_copy_conditions(const Graph & g, const Labeling & f, int m) -> bool;

// m copies of G (disjoint_union layout); sigma balances every vertex.
auto label_copies_nbc(const Graph & g, const Labeling & f, const SignColoring & sigma, int m) -> ConstructionResult;

// m copies of a graph with pendants; sigma balances every non-pendant vertex.
auto label_copies_pendant(const Graph & g, const Labeling & f, const SignColoring & sigma, int m)
    -> ConstructionResult;

// G x H with G 2t-regular (balanced by sigma) and H regular.
auto label_direct_nbc(const Graph & g, const Labeling & f, const SignColoring & sigma, const Graph & h)
    -> ConstructionResult;

// G x K_{n1,n2} for r-regular G; the multipartite layout puts the n1 side first.
auto label_direct_complete_bipartite(const Graph & g, int n1, int n2) -> ConstructionResult;

// G[H], G regular bipartite with equal sides, H even-regular balanced by sigma.
auto label_lexi_regular_bipartite(const Graph & g, const Graph & h, const Labeling & f, const SignColoring & sigma)
    -> ConstructionResult;

// B_{c,d}[K_{parts}] with all parts even.
auto label_lexi_bistar(int c, int d, const std::vector<int> & parts) -> ConstructionResult;

// G[H], G bipartite with constant but different degrees on the two sides.
auto label_lexi_biregular(const Graph & g, const Graph & h, const Labeling & f, const SignColoring & sigma)
    -> ConstructionResult;

// (G+K1)[H], G regular bipartite with equal sides.
auto label_lexi_join_k1(const Graph & g, const Graph & h, const Labeling & f, const SignColoring & sigma)
    -> ConstructionResult;

// One weight per part: weight = total label sum minus own part sum.
auto label_complete_multipartite(const std::vector<int> & parts) -> ConstructionResult;

} // namespace lda
