#include <lda/error.hpp>
#include <lda/labeling.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace lda {

void check_bijection(const Labeling & f, int n)
{
    if (static_cast<int>(f.size()) != n)
        throw Error(ErrorKind::invalid_labeling,
                    "labeling has " + std::to_string(f.size()) + " entries for a graph of order " + std::to_string(n));
    std::vector<char> seen(n + 1, 0);
    for (int x : f) {
        if (x < 1 || x > n)
            throw Error(ErrorKind::invalid_labeling, "label " + std::to_string(x) + " outside 1.." + std::to_string(n));
        if (seen[x])
            throw Error(ErrorKind::invalid_labeling, "label " + std::to_string(x) + " used twice");
        seen[x] = 1;
    }
}

auto weights(const Graph & g, const Labeling & f) -> WeightProfile
{
    check_bijection(f, g.order());
    WeightProfile w(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        w[u] += f[v];
        w[v] += f[u];
    }
    return w;
}

auto distinct_count(const WeightProfile & w) -> int
{
    return static_cast<int>(std::set<Weight>(w.begin(), w.end()).size());
}

auto verify_lda(const Graph & g, const Labeling & f) -> VerificationReport
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw Error(ErrorKind::domain, "vertex " + std::to_string(v) + " is isolated");
    VerificationReport report;
    report.weights = weights(g, f);
    for (auto [u, v] : g.edges())
        if (report.weights[u] == report.weights[v])
            report.violations.emplace_back(u, v);
    for (int v = 0; v < g.order(); ++v)
        report.weight_classes[report.weights[v]].push_back(v);
    report.color_count = static_cast<int>(report.weight_classes.size());
    report.is_lda = report.violations.empty();
    return report;
}

auto sym_diff_property_pairs(const Graph & g) -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            int d = sym_diff_size(g, u, v);
            if (d == 1 || d == 2)
                out.emplace_back(u, v);
        }
    return out;
}

auto tree_leaf_lower_bound(const Graph & tree) -> int
{
    if (! is_tree(tree) || tree.order() < 3)
        throw Error(ErrorKind::invalid_spec, "leaf bound needs a tree on at least 3 vertices");
    return static_cast<int>(pendant_classes(tree).size()) + 1;
}

auto pendant_lower_bound(const Graph & g) -> PendantBound
{
    auto pendants = pendant_vertices(g);
    if (pendants.empty())
        throw Error(ErrorKind::domain, "graph has no pendant vertex");
    PendantBound bound;
    bound.s = static_cast<int>(pendant_classes(g).size());
    bool every_inner_has_inner = true;
    bool any_inner = false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) <= 1)
            continue;
        any_inner = true;
        bool found = false;
        for (int w : g.neighbors(v))
            if (g.degree(w) > 1)
                found = true;
        if (! found)
            every_inner_has_inner = false;
    }
    bound.certified = bound.s + ((any_inner && every_inner_has_inner) ? 1 : 0);
    return bound;
}

auto complement_labeling(const Labeling & f) -> Labeling
{
    Labeling out(f.size());
    int n = static_cast<int>(f.size());
    for (int v = 0; v < n; ++v)
        out[v] = n + 1 - f[v];
    return out;
}

} // namespace lda
