#include <lda/error.hpp>
#include <lda/graph.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace lda {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n)
{
    if (n < 0)
        throw Error(ErrorKind::invalid_spec, "negative vertex count");
    for (auto & [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::invalid_spec,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw Error(ErrorKind::invalid_spec, "loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw Error(ErrorKind::invalid_spec,
                    "duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    edges_ = std::move(edges);

    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    adj_.assign(n, {});
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    for (auto & a : adj_)
        std::sort(a.begin(), a.end());
}

auto disjoint_union(const Graph & g, int copies) -> Graph
{
    if (copies < 1)
        throw Error(ErrorKind::invalid_spec, "copy count must be positive");
    int n = g.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.size()) * copies);
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : g.edges())
            edges.emplace_back(c * n + u, c * n + v);
    return Graph(n * copies, std::move(edges));
}

auto corona_empty(const Graph & g, int r) -> Graph
{
    if (r < 1)
        throw Error(ErrorKind::invalid_spec, "pendant count must be positive");
    int n = g.order();
    auto edges = g.edges();
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < r; ++j)
            edges.emplace_back(v, n + v * r + j);
    return Graph(n * (1 + r), std::move(edges));
}

auto direct_product(const Graph & g, const Graph & h) -> Graph
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorKind::invalid_spec, "product factors must be nonempty");
    int m = h.order();
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        for (auto [c, d] : h.edges()) {
            edges.emplace_back(a * m + c, b * m + d);
            edges.emplace_back(a * m + d, b * m + c);
        }
    return Graph(g.order() * m, std::move(edges));
}

auto lexicographic_product(const Graph & g, const Graph & h) -> Graph
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorKind::invalid_spec, "product factors must be nonempty");
    int m = h.order();
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                edges.emplace_back(a * m + x, b * m + y);
    for (int a = 0; a < g.order(); ++a)
        for (auto [c, d] : h.edges())
            edges.emplace_back(a * m + c, a * m + d);
    return Graph(g.order() * m, std::move(edges));
}

auto join_k1(const Graph & g) -> Graph
{
    int n = g.order();
    auto edges = g.edges();
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, n);
    return Graph(n + 1, std::move(edges));
}

auto sym_diff_size(const Graph & g, int u, int v) -> int
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw Error(ErrorKind::invalid_spec, "vertex id out of range");
    const auto & a = g.neighbors(u);
    const auto & b = g.neighbors(v);
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return static_cast<int>(out.size());
}

auto bipartition(const Graph & g) -> std::optional<Bipartition>
{
    int n = g.order();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (! q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                }
                else if (side[w] == side[v])
                    return std::nullopt;
            }
        }
    }
    Bipartition result;
    for (int v = 0; v < n; ++v)
        (side[v] == 0 ? result.left : result.right).push_back(v);
    return result;
}

auto is_complete_bipartite(const Graph & g) -> std::optional<Bipartition>
{
    if (g.order() < 2 || ! is_connected(g))
        return std::nullopt;
    auto parts = bipartition(g);
    if (! parts)
        return std::nullopt;
    if (static_cast<long long>(parts->left.size()) * static_cast<long long>(parts->right.size()) != g.size())
        return std::nullopt;
    return parts;
}

auto degrees(const Graph & g) -> std::vector<int>
{
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    return d;
}

auto regular_degree(const Graph & g) -> std::optional<int>
{
    if (g.order() == 0)
        return std::nullopt;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != g.degree(0))
            return std::nullopt;
    return g.degree(0);
}

auto component_ids(const Graph & g) -> std::vector<int>
{
    int n = g.order();
    std::vector<int> id(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (id[s] != -1)
            continue;
        id[s] = next;
        std::vector<int> stack{s};
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (id[w] == -1) {
                    id[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return id;
}

auto component_count(const Graph & g) -> int
{
    auto ids = component_ids(g);
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

auto is_connected(const Graph & g) -> bool { return component_count(g) == 1; }

auto is_tree(const Graph & g) -> bool { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

auto has_isolated_vertex(const Graph & g) -> bool
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            return true;
    return false;
}

auto pendant_vertices(const Graph & g) -> std::vector<int>
{
    std::vector<int> result;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            result.push_back(v);
    return result;
}

auto pendant_classes(const Graph & g) -> std::vector<int>
{
    std::set<int> supports;
    for (int v : pendant_vertices(g))
        supports.insert(g.neighbors(v).front());
    return {supports.begin(), supports.end()};
}

} // namespace lda
