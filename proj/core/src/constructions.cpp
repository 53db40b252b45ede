#include <lda/constructions.hpp>
#include <lda/error.hpp>
#include <lda/families.hpp>
#include <lda/solver.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace lda {

namespace
{
    auto edge_text(Edge e) -> std::string
    {
        return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
    }

    auto finish(Graph graph, Labeling labeling, int bound, std::optional<int> lower = std::nullopt)
        -> ConstructionResult
    {
        auto report = verify_lda(graph, labeling);
        if (! report.is_lda)
            throw Error(ErrorKind::invalid_labeling,
                        "internal error: construction gave equal weights on edge " + edge_text(report.violations.front()));
        if (report.color_count > bound)
            throw Error(ErrorKind::invalid_labeling, "internal error: construction used " +
                                                         std::to_string(report.color_count) +
                                                         " colours, above its bound " + std::to_string(bound));
        return {std::move(graph), std::move(labeling), std::move(report), bound, lower};
    }

    auto require_lda(const Graph & g, const Labeling & f, const char * what) -> VerificationReport
    {
        check_bijection(f, g.order());
        auto report = verify_lda(g, f);
        if (! report.is_lda)
            throw Error(ErrorKind::invalid_labeling, std::string(what) + " is not local distance antimagic: edge " +
                                                         edge_text(report.violations.front()) + " has equal weights");
        return report;
    }

    void require_nbc(const Graph & g, const SignColoring & sigma, const char * what)
    {
        if (! verify_nbc(g, sigma))
            throw Error(ErrorKind::condition, std::string(what) + " is not neighbourhood balanced");
    }

    // Labels m(f-1)+i for +1 and m*f+1-i for -1, i = 1..m.
    auto spread(int m, int f, int sign, int i) -> int { return sign > 0 ? m * (f - 1) + i : m * f + 1 - i; }

    // Even regular degree 2t with t >= 1, or throws.
    auto half_degree(const Graph & h, const char * what) -> int
    {
        auto r = regular_degree(h);
        if (! r || *r == 0 || *r % 2 != 0)
            throw Error(ErrorKind::condition, std::string(what) + " must be regular of positive even degree");
        return *r / 2;
    }

    struct Sides {
        std::vector<int> a;
        std::vector<int> b;
        std::vector<int> index; // 1-based position within own side
        std::vector<char> in_a;
    };

    auto sides_of(const Graph & g) -> Sides
    {
        auto parts = bipartition(g);
        if (! parts)
            throw Error(ErrorKind::condition, "first factor must be bipartite");
        Sides s{parts->left, parts->right, std::vector<int>(g.order()), std::vector<char>(g.order(), 0)};
        for (std::size_t j = 0; j < s.a.size(); ++j) {
            s.index[s.a[j]] = static_cast<int>(j) + 1;
            s.in_a[s.a[j]] = 1;
        }
        for (std::size_t j = 0; j < s.b.size(); ++j)
            s.index[s.b[j]] = static_cast<int>(j) + 1;
        return s;
    }

    void check_h_factor(const Graph & h, const Labeling & f, const SignColoring & sigma)
    {
        half_degree(h, "second factor");
        require_nbc(h, sigma, "colouring of the second factor");
        require_lda(h, f, "labeling of the second factor");
    }
}

auto label_book_c4(int t) -> ConstructionResult
{
    if (t < 1)
        throw Error(ErrorKind::invalid_spec, "book needs t >= 1");
    auto g = book_c4(t);
    Labeling f(g.order(), 0);
    auto x = [&](int i) -> int & { return f[i]; };
    auto y = [&](int i) -> int & { return f[t + i]; };
    auto z = [&](int i) -> int & { return f[2 * t + i]; };
    if (t == 1) {
        f[0] = 1;
        x(1) = 3;
        y(1) = 4;
        z(1) = 2;
        return finish(std::move(g), std::move(f), 2, 2);
    }
    f[0] = 3 * t - 2;
    for (int i = 1; i <= t - 1; ++i)
        z(i) = 3 * (i - 1) + 1;
    z(t) = 3 * t + 1;
    x(1) = 3 * t;
    y(1) = 3 * t - 1;
    std::vector<int> rest;
    for (int v = 2; v <= 3 * t - 3; ++v)
        if (v % 3 != 1)
            rest.push_back(v);
    for (int k = 0; k + 2 <= t; ++k) {
        x(k + 2) = rest[k];
        y(k + 2) = rest[rest.size() - 1 - k];
    }
    return finish(std::move(g), std::move(f), t + 1, t + 1);
}

auto label_corona(const Graph & g, const Labeling & f, int p) -> ConstructionResult
{
    if (p < 1)
        throw Error(ErrorKind::invalid_spec, "p must be positive");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < 2)
            throw Error(ErrorKind::condition, "base graph must have no pendant or isolated vertex (vertex " +
                                                  std::to_string(v) + ")");
    auto base = require_lda(g, f, "base labeling");
    int n = g.order();
    auto graph = corona_empty(g, 2 * p);
    Labeling out(graph.order());
    std::copy(f.begin(), f.end(), out.begin());
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < 2 * p; ++k) {
            int i = k + 1, j = v + 1;
            out[n + v * 2 * p + k] = (i % 2 == 1) ? i * n + j : (i + 1) * n + 1 - j;
        }
    std::optional<int> lower;
    if (n <= 16)
        lower = chi_exact(g) + n;
    return finish(std::move(graph), std::move(out), base.color_count + n, lower);
}

namespace
{
    // 2*(m*w + (1-m)*deg/2), kept integral.
    auto copy_weight2(Weight w, int deg, int m) -> Weight { return 2 * m * w + static_cast<Weight>(1 - m) * deg; }

    void check_signs(const SignColoring & sigma, int n)
    {
        if (static_cast<int>(sigma.size()) != n)
            throw Error(ErrorKind::invalid_spec, "colouring has " + std::to_string(sigma.size()) +
                                                     " entries, graph has " + std::to_string(n) + " vertices");
        for (int s : sigma)
            if (s != 1 && s != -1)
                throw Error(ErrorKind::invalid_spec, "colouring entries must be +1 or -1");
    }

    auto copies_labeling(const Graph & g, const Labeling & f, const SignColoring & sigma, int m) -> Labeling
    {
        int n = g.order();
        Labeling out(static_cast<std::size_t>(m) * n);
        for (int c = 0; c < m; ++c)
            for (int v = 0; v < n; ++v)
                out[c * n + v] = spread(m, f[v], sigma[v], c + 1);
        return out;
    }
}

auto copy_condition_violations(const Graph & g, const Labeling & f, int m) -> std::vector<Edge>
{
    check_bijection(f, g.order());
    auto w = weights(g, f);
    std::vector<Edge> bad;
    for (auto [u, v] : g.edges())
        if (copy_weight2(w[u], g.degree(u), m) == copy_weight2(w[v], g.degree(v), m))
            bad.push_back({u, v});
    return bad;
}

auto check_copy_condition(const Graph & g, const Labeling & f, int m) -> bool
{
    return copy_condition_violations(g, f, m).empty();
}

auto pendant_copy_violations(const Graph & g, const Labeling & f, int m) -> PendantCopyCheck
{
    check_bijection(f, g.order());
    auto w = weights(g, f);
    PendantCopyCheck out;
    for (int y : pendant_classes(g)) {
        if (g.degree(y) == 1)
            continue;
        Weight deg = g.degree(y);
        Weight q2 = m * (2 * f[y] - 2 * w[y] + deg) - deg;
        if (q2 >= 0 && q2 <= 2 * static_cast<Weight>(m - 1))
            out.failed_supports.push_back(y);
    }
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) == 1 || g.degree(v) == 1)
            continue;
        if (copy_weight2(w[u], g.degree(u), m) == copy_weight2(w[v], g.degree(v), m))
            out.failed_edges.push_back({u, v});
    }
    return out;
}

auto check_pendant_copy_conditions(const Graph & g, const Labeling & f, int m) -> bool
{
    return pendant_copy_violations(g, f, m).holds();
}

auto label_copies_nbc(const Graph & g, const Labeling & f, const SignColoring & sigma, int m) -> ConstructionResult
{
    if (m < 1)
        throw Error(ErrorKind::invalid_spec, "m must be positive");
    check_signs(sigma, g.order());
    require_nbc(g, sigma, "colouring");
    auto base = require_lda(g, f, "base labeling");
    auto bad = copy_condition_violations(g, f, m);
    if (! bad.empty())
        throw Error(ErrorKind::condition, "copy condition fails on edge " + edge_text(bad.front()));
    return finish(disjoint_union(g, m), copies_labeling(g, f, sigma, m), base.color_count);
}

auto label_copies_pendant(const Graph & g, const Labeling & f, const SignColoring & sigma, int m)
    -> ConstructionResult
{
    if (m < 1)
        throw Error(ErrorKind::invalid_spec, "m must be positive");
    int n = g.order();
    check_signs(sigma, n);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            if (g.degree(g.neighbors(v).front()) == 1)
                throw Error(ErrorKind::condition, "graph has a K2 component at vertex " + std::to_string(v));
            continue;
        }
        int sum = 0;
        for (int x : g.neighbors(v))
            sum += sigma[x];
        if (sum != 0)
            throw Error(ErrorKind::condition, "colouring does not balance non-pendant vertex " + std::to_string(v));
    }
    auto base = require_lda(g, f, "base labeling");
    auto check = pendant_copy_violations(g, f, m);
    if (! check.failed_supports.empty())
        throw Error(ErrorKind::condition, "support condition fails at vertex " +
                                              std::to_string(check.failed_supports.front()));
    if (! check.failed_edges.empty())
        throw Error(ErrorKind::condition, "copy condition fails on edge " + edge_text(check.failed_edges.front()));

    auto supports = pendant_classes(g);
    int s = static_cast<int>(supports.size());
    std::set<Weight> interior;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 1)
            interior.insert(base.weights[v]);
    int shared = 0;
    for (int y : supports)
        shared += interior.count(f[y]) ? 1 : 0;
    int bound = base.color_count + (m - 1) * s + shared;

    auto graph = disjoint_union(g, m);
    auto lower = pendant_lower_bound(graph).certified;
    return finish(std::move(graph), copies_labeling(g, f, sigma, m), bound, lower);
}

auto label_direct_nbc(const Graph & g, const Labeling & f, const SignColoring & sigma, const Graph & h)
    -> ConstructionResult
{
    half_degree(g, "first factor");
    check_signs(sigma, g.order());
    require_nbc(g, sigma, "colouring of the first factor");
    auto base = require_lda(g, f, "labeling of the first factor");
    auto r = regular_degree(h);
    if (! r || *r == 0)
        throw Error(ErrorKind::condition, "second factor must be regular of positive degree");
    int m = h.order();
    Labeling out(static_cast<std::size_t>(g.order()) * m);
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < m; ++y)
            out[x * m + y] = spread(m, f[x], sigma[x], y + 1);
    return finish(direct_product(g, h), std::move(out), base.color_count);
}

auto label_direct_complete_bipartite(const Graph & g, int n1, int n2) -> ConstructionResult
{
    if (n1 < 1 || n2 < 1)
        throw Error(ErrorKind::invalid_spec, "part sizes must be positive");
    auto r = regular_degree(g);
    if (! r || *r == 0)
        throw Error(ErrorKind::condition, "first factor must be regular of positive degree");
    int n = g.order();
    bool same = (n1 % 2) == (n2 % 2);
    if (! same && n % 2 == 0)
        throw Error(ErrorKind::unsupported,
                    "n even with part sizes of opposite parity has no 2-colour labeling in general "
                    "(K2 x K(2,3) has chi_ld 3)");

    // y plays the smaller side, or the odd side when parities differ.
    bool y_first = same ? n1 <= n2 : n1 % 2 == 1;
    int ny = y_first ? n1 : n2;
    int nz = y_first ? n2 : n1;
    int yoff = y_first ? 0 : n1;
    int zoff = y_first ? n1 : 0;
    bool both_odd = same && n1 % 2 == 1;
    if ((both_odd || ! same) && ny < 3)
        throw Error(ErrorKind::unsupported, "odd part of size " + std::to_string(ny) + " is not covered; need at least 3");

    int width = n1 + n2;
    Labeling out(static_cast<std::size_t>(n) * width);
    auto y_at = [&](int i, int j) -> int & { return out[(i - 1) * width + yoff + j - 1]; };
    auto z_at = [&](int i, int j) -> int & { return out[(i - 1) * width + zoff + j - 1]; };
    auto alternating = [n](int i, int j, int shift) { return j % 2 == 1 ? (j - 1) * n + i + shift : j * n + 1 - i + shift; };

    if (! both_odd) {
        std::optional<MagicRectangle> rect;
        if (! same)
            rect = magic_rectangle(n, ny);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= ny; ++j)
                y_at(i, j) = rect ? rect->at(i - 1, j - 1) : alternating(i, j, 0);
            for (int j = 1; j <= nz; ++j)
                z_at(i, j) = alternating(i, j, n * ny);
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= ny; ++j) {
                if (j <= 2)
                    y_at(i, j) = n * (j - 1) + i;
                else if (j == 3)
                    y_at(i, j) = 4 * n - 2 * (i - 1);
                else if (j % 2 == 1)
                    y_at(i, j) = n * (j + 1) - (i - 1);
                else
                    y_at(i, j) = n * j + i;
            }
            for (int j = 1; j <= nz; ++j) {
                if (j == 1)
                    z_at(i, j) = 4 * n - (2 * i - 1);
                else if (j == 3)
                    z_at(i, j) = n * (ny + 2) + i;
                else if (j % 2 == 1)
                    z_at(i, j) = n * (ny + j) - (i - 1);
                else
                    z_at(i, j) = n * (ny - 1 + j) + i;
            }
        }
    }
    return finish(direct_product(g, complete_multipartite({n1, n2})), std::move(out), 2, 2);
}

auto label_lexi_regular_bipartite(const Graph & g, const Graph & h, const Labeling & f, const SignColoring & sigma)
    -> ConstructionResult
{
    auto k = regular_degree(g);
    if (! k || *k < 2)
        throw Error(ErrorKind::condition, "first factor must be regular of degree at least 2");
    auto sides = sides_of(g);
    if (sides.a.size() != sides.b.size())
        throw Error(ErrorKind::condition, "first factor must have equal sides");
    check_signs(sigma, h.order());
    check_h_factor(h, f, sigma);
    auto base = verify_lda(h, f);
    int n = h.order();
    int s = static_cast<int>(sides.a.size());
    Labeling out(static_cast<std::size_t>(g.order()) * n);
    for (int x = 0; x < g.order(); ++x) {
        int j = sides.index[x];
        int shift = sides.in_a[x] ? 0 : s * n;
        for (int v = 0; v < n; ++v)
            out[x * n + v] = spread(s, f[v], sigma[v], j) + shift;
    }
    return finish(lexicographic_product(g, h), std::move(out), 2 * base.color_count);
}

auto label_lexi_biregular(const Graph & g, const Graph & h, const Labeling & f, const SignColoring & sigma)
    -> ConstructionResult
{
    if (has_isolated_vertex(g))
        throw Error(ErrorKind::condition, "first factor has an isolated vertex");
    auto sides = sides_of(g);
    for (const auto * side : {&sides.a, &sides.b})
        for (int x : *side)
            if (g.degree(x) != g.degree(side->front()))
                throw Error(ErrorKind::condition, "degrees differ within a side of the first factor");
    if (g.degree(sides.a.front()) == g.degree(sides.b.front()))
        throw Error(ErrorKind::condition, "first factor must not be regular");
    check_signs(sigma, h.order());
    check_h_factor(h, f, sigma);
    auto base = verify_lda(h, f);
    int n = h.order();
    int r = static_cast<int>(sides.a.size());
    int m = g.order();
    Labeling out(static_cast<std::size_t>(m) * n);
    for (int x = 0; x < m; ++x) {
        int j = sides.index[x] + (sides.in_a[x] ? 0 : r);
        for (int v = 0; v < n; ++v)
            out[x * n + v] = spread(m, f[v], sigma[v], j);
    }
    return finish(lexicographic_product(g, h), std::move(out), 2 * base.color_count);
}

auto label_lexi_join_k1(const Graph & g, const Graph & h, const Labeling & f, const SignColoring & sigma)
    -> ConstructionResult
{
    auto k = regular_degree(g);
    if (! k || *k == 0)
        throw Error(ErrorKind::condition, "first factor must be regular of positive degree");
    auto sides = sides_of(g);
    if (sides.a.size() != sides.b.size())
        throw Error(ErrorKind::condition, "first factor must have equal sides");
    check_signs(sigma, h.order());
    check_h_factor(h, f, sigma);
    auto base = verify_lda(h, f);
    int n = h.order();
    int s = static_cast<int>(sides.a.size());
    int m = g.order();
    Labeling out(static_cast<std::size_t>(m + 1) * n);
    for (int x = 0; x < m; ++x) {
        int j = sides.index[x];
        int shift = sides.in_a[x] ? n : (s + 1) * n;
        for (int v = 0; v < n; ++v)
            out[x * n + v] = spread(s, f[v], sigma[v], j) + shift;
    }
    for (int v = 0; v < n; ++v)
        out[m * n + v] = f[v];
    return finish(lexicographic_product(join_k1(g), h), std::move(out), 3 * base.color_count);
}

auto label_lexi_bistar(int c, int d, const std::vector<int> & parts) -> ConstructionResult
{
    if (c < 1 || d < 1)
        throw Error(ErrorKind::invalid_spec, "bistar needs c, d >= 1");
    if (parts.empty())
        throw Error(ErrorKind::invalid_spec, "need at least one part");
    for (int p : parts)
        if (p < 2 || p % 2 != 0)
            throw Error(ErrorKind::condition, "all part sizes must be even and positive");
    if (! std::is_sorted(parts.begin(), parts.end()))
        throw Error(ErrorKind::invalid_spec, "part sizes must be non-decreasing");
    int k = static_cast<int>(parts.size());
    int a = std::accumulate(parts.begin(), parts.end(), 0);
    int cd = c + d;
    int order = 2 + c + d;
    Labeling out(static_cast<std::size_t>(order) * a);
    auto at = [&](int bistar_vertex, int h) -> int & { return out[bistar_vertex * a + h]; };

    int prefix = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = 1; j <= parts[i]; ++j) {
            int h = prefix + j - 1;
            bool odd = j % 2 == 1;
            at(0, h) = 2 * prefix + (odd ? 2 * j - 1 : 2 * j);
            at(1, h) = 2 * prefix + (odd ? 2 * j : 2 * j - 1);
            for (int l = 1; l <= c; ++l)
                at(1 + l, h) = cd * prefix + 2 * a + (odd ? (j - 1) * cd + l : j * cd - l + 1);
            for (int l = 1; l <= d; ++l)
                at(1 + c + l, h) =
                    cd * prefix + 2 * a + (odd ? j * c + (j - 1) * d + l : (j - 1) * c + j * d - l + 1);
        }
        prefix += parts[i];
    }
    auto graph = lexicographic_product(bistar_graph(c, d), complete_multipartite(parts));
    if (c == d) {
        if (k == 1) {
            // A single part leaves the cyclic shift empty; swap one u-leaf and one v-leaf label instead.
            std::swap(at(2, 0), at(2 + c, 0));
        } else {
            std::vector<int> starts;
            for (int i = 0, start = 0; i < k; start += parts[i++])
                starts.push_back(start);
            auto shifted = out;
            for (int i = 0; i < k; ++i)
                shifted[a + starts[i]] = out[a + starts[(i + 1) % k]];
            auto report = verify_lda(graph, shifted);
            if (report.is_lda && report.color_count <= 3 * k) {
                out = std::move(shifted);
            } else {
                // Shift the u and v sums of part i by +delta and -delta, deltas nonzero with zero total.
                std::vector<int> delta(k);
                int i0 = 0;
                if (k % 2 == 1) {
                    delta[0] = delta[1] = 1;
                    delta[2] = -2;
                    i0 = 3;
                }
                for (int i = i0; i < k; ++i)
                    delta[i] = (i - i0) % 2 == 0 ? 1 : -1;
                for (int i = 0; i < k; ++i) {
                    int h = starts[i];
                    if (delta[i] == 1)
                        std::swap(at(0, h), at(1, h));
                    else if (delta[i] == -1)
                        std::swap(at(0, h + 1), at(1, h + 1));
                    else
                        std::swap(at(0, h + 1), at(1, h));
                }
            }
        }
    }
    return finish(std::move(graph), std::move(out), 3 * k, 2 * k + 1);
}

auto label_complete_multipartite(const std::vector<int> & parts) -> ConstructionResult
{
    if (parts.size() < 2)
        throw Error(ErrorKind::invalid_spec, "need at least two parts");
    for (int p : parts)
        if (p < 1)
            throw Error(ErrorKind::invalid_spec, "part sizes must be positive");
    auto graph = complete_multipartite(parts);
    int n = graph.order();
    std::vector<int> part_of(n);
    for (int i = 0, v = 0; i < static_cast<int>(parts.size()); ++i)
        for (int j = 0; j < parts[i]; ++j)
            part_of[v++] = i;
    Labeling f(n);
    std::iota(f.begin(), f.end(), 1);

    auto distinct_sums = [&]() {
        std::vector<long long> sums(parts.size(), 0);
        for (int v = 0; v < n; ++v)
            sums[part_of[v]] += f[v];
        return static_cast<int>(std::set<long long>(sums.begin(), sums.end()).size());
    };
    int r = static_cast<int>(parts.size());
    int have = distinct_sums();
    while (have < r) {
        bool improved = false;
        for (int u = 0; u < n && ! improved; ++u)
            for (int v = u + 1; v < n && ! improved; ++v) {
                if (part_of[u] == part_of[v])
                    continue;
                std::swap(f[u], f[v]);
                int now = distinct_sums();
                if (now > have) {
                    have = now;
                    improved = true;
                } else {
                    std::swap(f[u], f[v]);
                }
            }
        if (! improved)
            throw Error(ErrorKind::invalid_labeling, "internal error: could not separate part sums");
    }
    return finish(std::move(graph), std::move(f), r, r);
}

} // namespace lda
