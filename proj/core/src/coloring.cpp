#include <lda/coloring.hpp>
#include <lda/error.hpp>

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

namespace lda {

namespace
{
    void check_size(const Graph & g, const SignColoring & sigma)
    {
        if (static_cast<int>(sigma.size()) != g.order())
            throw Error(ErrorKind::invalid_spec, "colouring has " + std::to_string(sigma.size()) +
                                                     " entries for a graph of order " + std::to_string(g.order()));
        for (int s : sigma)
            if (s != 1 && s != -1)
                throw Error(ErrorKind::invalid_spec, "signs must be +1 or -1");
    }

    auto neighbour_sum(const Graph & g, const SignColoring & sigma, int v) -> int
    {
        int sum = 0;
        for (int w : g.neighbors(v))
            sum += sigma[w];
        return sum;
    }

    // BFS distances restricted to alive vertices.
    auto farthest(const Graph & g, const std::vector<char> & alive, int from) -> int
    {
        std::vector<int> dist(g.order(), -1);
        std::queue<int> q;
        dist[from] = 0;
        q.push(from);
        int best = from;
        while (! q.empty()) {
            int v = q.front();
            q.pop();
            if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best))
                best = v;
            for (int w : g.neighbors(v))
                if (alive[w] && dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        return best;
    }

    struct Step {
        int x;
        int y;      // second removed leaf, or -1
        int anchor; // the vertex whose sign x must oppose, or -1
    };
}

auto verify_nbc(const Graph & g, const SignColoring & sigma) -> bool
{
    check_size(g, sigma);
    for (int v = 0; v < g.order(); ++v)
        if (neighbour_sum(g, sigma, v) != 0)
            return false;
    return true;
}

auto verify_interior_nbc(const Graph & tree, const SignColoring & sigma) -> bool
{
    if (! is_tree(tree) || tree.order() < 3)
        throw Error(ErrorKind::invalid_spec, "interior colouring needs a tree on at least 3 vertices");
    check_size(tree, sigma);
    for (int v = 0; v < tree.order(); ++v)
        if (tree.degree(v) > 1 && neighbour_sum(tree, sigma, v) != 0)
            return false;
    return true;
}

auto census(const Graph & g, const SignColoring & sigma) -> NbcCensus
{
    check_size(g, sigma);
    NbcCensus c;
    for (int s : sigma)
        (s > 0 ? c.b : c.r)++;
    for (auto [u, v] : g.edges()) {
        if (sigma[u] != sigma[v])
            ++c.rb;
        else if (sigma[u] > 0)
            ++c.bb;
        else
            ++c.rr;
    }
    return c;
}

auto nbc_cycle(int n) -> SignColoring
{
    if (n < 3)
        throw Error(ErrorKind::invalid_spec, "cycle needs n >= 3");
    if (n % 4 != 0)
        throw Error(ErrorKind::no_coloring, "C" + std::to_string(n) + " has no neighbourhood balanced colouring");
    SignColoring sigma(n);
    for (int v = 0; v < n; ++v)
        sigma[v] = (v % 4 < 2) ? 1 : -1;
    return sigma;
}

auto nbc_complete_multipartite(const std::vector<int> & parts) -> SignColoring
{
    if (parts.size() < 2)
        throw Error(ErrorKind::invalid_spec, "need at least two parts");
    SignColoring sigma;
    for (int p : parts) {
        if (p < 1)
            throw Error(ErrorKind::invalid_spec, "part sizes must be positive");
        if (p % 2 != 0)
            throw Error(ErrorKind::no_coloring, "part of odd size " + std::to_string(p) + " admits no balanced colouring");
        sigma.insert(sigma.end(), p / 2, 1);
        sigma.insert(sigma.end(), p / 2, -1);
    }
    return sigma;
}

auto nbc_tree_interior(const Graph & tree) -> SignColoring
{
    int n = tree.order();
    if (! is_tree(tree) || n < 3)
        throw Error(ErrorKind::invalid_spec, "interior colouring needs a tree on at least 3 vertices");
    for (int v = 0; v < n; ++v)
        if (tree.degree(v) > 1 && tree.degree(v) % 2 != 0)
            throw Error(ErrorKind::no_coloring,
                        "internal vertex " + std::to_string(v) + " has odd degree " + std::to_string(tree.degree(v)));

    std::vector<char> alive(n, 1);
    std::vector<int> deg = degrees(tree);
    int remaining = n;
    std::vector<Step> steps;

    auto alive_leaves_of = [&](int v) {
        std::vector<int> out;
        for (int w : tree.neighbors(v))
            if (alive[w] && deg[w] == 1)
                out.push_back(w);
        return out;
    };
    auto kill = [&](int v) {
        alive[v] = 0;
        --remaining;
        for (int w : tree.neighbors(v))
            if (alive[w])
                --deg[w];
    };

    while (remaining > 3) {
        int start = static_cast<int>(std::find(alive.begin(), alive.end(), 1) - alive.begin());
        int a = farthest(tree, alive, start);
        int b = farthest(tree, alive, a);
        int x = std::min(a, b);
        int v = -1;
        for (int w : tree.neighbors(x))
            if (alive[w])
                v = w;
        auto leaves = alive_leaves_of(v);
        if (leaves.size() == 1) {
            int w = -1;
            for (int u : tree.neighbors(v))
                if (alive[u] && u != x)
                    w = u;
            steps.push_back({x, -1, w});
            kill(x);
        }
        else {
            int y = -1;
            for (int l : leaves)
                if (l != x) {
                    y = l;
                    break;
                }
            steps.push_back({x, y, -1});
            kill(x);
            kill(y);
        }
    }

    SignColoring sigma(n, 1);
    // Base K_{1,2}: centre +1, smaller leaf +1, larger leaf -1.
    std::vector<int> base;
    for (int v = 0; v < n; ++v)
        if (alive[v])
            base.push_back(v);
    int centre = -1;
    for (int v : base)
        if (deg[v] == 2)
            centre = v;
    std::vector<int> ends;
    for (int v : base)
        if (v != centre)
            ends.push_back(v);
    sigma[centre] = 1;
    sigma[ends[0]] = 1;
    sigma[ends[1]] = -1;

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->y == -1)
            sigma[it->x] = -sigma[it->anchor];
        else {
            sigma[it->x] = 1;
            sigma[it->y] = -1;
        }
    }
    return sigma;
}

auto nbc_search(const Graph & g, const NbcSearchOptions & options) -> std::optional<SignColoring>
{
    int n = g.order();
    if (n > options.max_vertices)
        throw Error(ErrorKind::budget, "NBC search limited to " + std::to_string(options.max_vertices) + " vertices");

    std::vector<char> constrained(n, 1);
    for (int v = 0; v < n; ++v) {
        if (options.interior_only && g.degree(v) <= 1)
            constrained[v] = 0;
        if (constrained[v] && g.degree(v) % 2 != 0)
            return std::nullopt;
    }

    SignColoring sigma(n, 0);
    std::vector<int> sum(n, 0), open(n);
    for (int v = 0; v < n; ++v)
        open[v] = g.degree(v);

    auto assign = [&](int v, int s) {
        sigma[v] = s;
        bool ok = true;
        for (int w : g.neighbors(v)) {
            sum[w] += s;
            --open[w];
            if (constrained[w] && std::abs(sum[w]) > open[w])
                ok = false;
        }
        return ok;
    };
    auto unassign = [&](int v) {
        for (int w : g.neighbors(v)) {
            sum[w] -= sigma[v];
            ++open[w];
        }
        sigma[v] = 0;
    };

    auto dfs = [&](auto & self, int v) -> bool {
        if (v == n)
            return true;
        for (int s : {1, -1}) {
            bool ok = assign(v, s);
            if (ok && self(self, v + 1))
                return true;
            unassign(v);
        }
        return false;
    };
    if (dfs(dfs, 0))
        return sigma;
    return std::nullopt;
}

} // namespace lda
