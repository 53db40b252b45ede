#pragma once

// Brute-force reference implementations and random generators for tests.
// Everything here works from the raw edge list so it shares no code paths
// with the library beyond Graph construction.

#include <lda/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using lda::Edge;
using lda::Graph;

inline auto matrix(const Graph & g) -> std::vector<std::vector<char>>
{
    std::vector<std::vector<char>> a(g.order(), std::vector<char>(g.order(), 0));
    for (auto [u, v] : g.edges())
        a[u][v] = a[v][u] = 1;
    return a;
}

inline auto weights(const Graph & g, const std::vector<int> & f) -> std::vector<std::int64_t>
{
    auto a = matrix(g);
    std::vector<std::int64_t> w(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (a[u][v])
                w[u] += f[v];
    return w;
}

inline auto is_lda(const Graph & g, const std::vector<int> & f) -> bool
{
    auto w = oracle::weights(g, f);
    for (auto [u, v] : g.edges())
        if (w[u] == w[v])
            return false;
    return true;
}

inline auto colors(const Graph & g, const std::vector<int> & f) -> int
{
    auto w = oracle::weights(g, f);
    return static_cast<int>(std::set<std::int64_t>(w.begin(), w.end()).size());
}

// Minimum colour count over all n! bijections; empty when none is LDA.
inline auto chi_ld(const Graph & g) -> std::optional<int>
{
    int n = g.order();
    std::vector<int> f(n);
    std::iota(f.begin(), f.end(), 1);
    std::vector<std::int64_t> w(n);
    std::optional<int> best;
    do {
        std::fill(w.begin(), w.end(), 0);
        for (auto [u, v] : g.edges()) {
            w[u] += f[v];
            w[v] += f[u];
        }
        bool lda = true;
        for (auto [u, v] : g.edges())
            if (w[u] == w[v]) {
                lda = false;
                break;
            }
        if (! lda)
            continue;
        std::sort(w.begin(), w.end());
        int c = static_cast<int>(std::unique(w.begin(), w.end()) - w.begin());
        if (! best || c < *best)
            best = c;
    } while (std::next_permutation(f.begin(), f.end()));
    return best;
}

inline auto chromatic(const Graph & g) -> int
{
    int n = g.order();
    if (n == 0)
        return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : g.edges())
                if (c[u] == c[v])
                    proper = false;
            if (proper)
                return k;
            int i = 0;
            while (i < n && ++c[i] == k)
                c[i++] = 0;
            if (i == n)
                break;
        }
    }
    return n;
}

// Every sign vector, with leaves optionally unconstrained.
inline auto nbc_exists(const Graph & g, bool interior_only = false) -> bool
{
    int n = g.order();
    auto a = matrix(g);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int deg = 0, sum = 0;
            for (int x = 0; x < n; ++x)
                if (a[v][x]) {
                    ++deg;
                    sum += (mask >> x) & 1u ? 1 : -1;
                }
            if (interior_only && deg <= 1)
                continue;
            ok = sum == 0;
        }
        if (ok)
            return true;
    }
    return false;
}

// Orbits from all n! permutations that preserve adjacency.
inline auto orbits(const Graph & g) -> std::vector<std::vector<int>>
{
    int n = g.order();
    auto a = matrix(g);
    std::vector<int> p(n), rep(n);
    std::iota(p.begin(), p.end(), 0);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int x) {
        while (rep[x] != x)
            x = rep[x] = rep[rep[x]];
        return x;
    };
    do {
        bool auto_ = true;
        for (auto [u, v] : g.edges())
            if (! a[p[u]][p[v]]) {
                auto_ = false;
                break;
            }
        if (auto_)
            for (int v = 0; v < n; ++v) {
                int x = find(v), y = find(p[v]);
                if (x != y)
                    rep[std::max(x, y)] = std::min(x, y);
            }
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < n; ++v)
        by_root[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto & [root, members] : by_root)
        out.push_back(members);
    return out;
}

inline auto connected(int n, const std::vector<Edge> & edges) -> bool
{
    if (n == 0)
        return true;
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int x) {
        while (rep[x] != x)
            x = rep[x];
        return x;
    };
    int parts = n;
    for (auto [u, v] : edges) {
        int x = find(u), y = find(v);
        if (x != y) {
            rep[x] = y;
            --parts;
        }
    }
    return parts == 1;
}

// All labeled connected graphs on n vertices (n <= 6 is cheap).
inline auto connected_graphs(int n) -> std::vector<Graph>
{
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u)
                edges.push_back(slots[i]);
        if (connected(n, edges))
            out.emplace_back(n, std::move(edges));
    }
    return out;
}

// One representative per isomorphism class: the labeled graph whose edge
// mask is smallest over all relabelings.
inline auto connected_graphs_up_to_isomorphism(int n) -> std::vector<Graph>
{
    std::vector<Edge> slots;
    std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            slot_of[u][v] = slot_of[v][u] = static_cast<int>(slots.size());
            slots.push_back({u, v});
        }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        bool minimal = true;
        for (std::size_t k = 1; k < perms.size() && minimal; ++k) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1u)
                    image |= 1u << slot_of[perms[k][slots[i].first]][perms[k][slots[i].second]];
            minimal = image >= mask;
        }
        if (! minimal)
            continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u)
                edges.push_back(slots[i]);
        if (connected(n, edges))
            out.emplace_back(n, std::move(edges));
    }
    return out;
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    auto below(int bound) -> int { return std::uniform_int_distribution<int>(0, bound - 1)(engine_); }
    auto chance(double p) -> bool { return std::bernoulli_distribution(p)(engine_); }

    auto permutation(int n) -> std::vector<int>
    {
        std::vector<int> f(n);
        std::iota(f.begin(), f.end(), 1);
        std::shuffle(f.begin(), f.end(), engine_);
        return f;
    }

    auto graph(int n, double p) -> Graph
    {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (chance(p))
                    edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }

    // Random spanning tree plus extra edges, so always connected.
    auto connected_graph(int n, double extra) -> Graph
    {
        std::vector<Edge> edges;
        std::set<Edge> seen;
        for (int v = 1; v < n; ++v) {
            Edge e{below(v), v};
            edges.push_back(e);
            seen.insert(e);
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (! seen.count({u, v}) && chance(extra))
                    edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }

    auto tree(int n) -> Graph { return connected_graph(n, 0.0); }

  private:
    std::mt19937_64 engine_;
};

} // namespace oracle
