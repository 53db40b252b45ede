#include <lda/error.hpp>
#include <lda/families.hpp>

#include <numeric>
#include <string>

namespace lda {

namespace
{
    void require(bool ok, const std::string & what)
    {
        if (! ok)
            throw Error(ErrorKind::invalid_spec, what);
    }

    template <class... Ts>
    struct overloaded : Ts... {
        using Ts::operator()...;
    };
}

auto path_graph(int n) -> Graph
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

auto cycle_graph(int n) -> Graph
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

auto complete_graph(int n) -> Graph
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

auto complete_multipartite(const std::vector<int> & parts) -> Graph
{
    require(! parts.empty(), "multipartite graph needs at least one part");
    std::vector<int> start{0};
    for (int p : parts) {
        require(p >= 1, "part sizes must be positive");
        start.push_back(start.back() + p);
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            for (int u = start[a]; u < start[a + 1]; ++u)
                for (int v = start[b]; v < start[b + 1]; ++v)
                    edges.emplace_back(u, v);
    return Graph(start.back(), std::move(edges));
}

auto star_graph(int leaves) -> Graph
{
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

auto bistar_graph(int c, int d) -> Graph
{
    require(c >= 1 && d >= 1, "bistar needs c, d >= 1");
    std::vector<Edge> edges{{0, 1}};
    for (int i = 0; i < c; ++i)
        edges.emplace_back(0, 2 + i);
    for (int i = 0; i < d; ++i)
        edges.emplace_back(1, 2 + c + i);
    return Graph(c + d + 2, std::move(edges));
}

auto friendship_graph(int t) -> Graph
{
    require(t >= 1, "friendship graph needs t >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i) {
        edges.emplace_back(0, 2 * i + 1);
        edges.emplace_back(0, 2 * i + 2);
        edges.emplace_back(2 * i + 1, 2 * i + 2);
    }
    return Graph(2 * t + 1, std::move(edges));
}

auto wheel_graph(int n) -> Graph
{
    require(n >= 3, "wheel needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
        edges.emplace_back(v, n);
    }
    return Graph(n + 1, std::move(edges));
}

auto book_c4(int t) -> Graph
{
    require(t >= 1, "book needs t >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= t; ++i) {
        int x = i, y = t + i, z = 2 * t + i;
        edges.emplace_back(0, x);
        edges.emplace_back(0, y);
        edges.emplace_back(x, z);
        edges.emplace_back(y, z);
    }
    return Graph(3 * t + 1, std::move(edges));
}

auto empty_graph(int n) -> Graph
{
    require(n >= 1, "empty graph needs n >= 1");
    return Graph(n, {});
}

auto tree_graph(int n, std::vector<Edge> edges) -> Graph
{
    require(n >= 1, "tree needs n >= 1");
    Graph g(n, std::move(edges));
    require(is_tree(g), "edge list is not a tree");
    return g;
}

auto generate(const FamilySpec & spec) -> Graph
{
    return std::visit(overloaded{
                          [](const PathSpec & s) { return path_graph(s.n); },
                          [](const CycleSpec & s) { return cycle_graph(s.n); },
                          [](const CompleteSpec & s) { return complete_graph(s.n); },
                          [](const MultipartiteSpec & s) { return complete_multipartite(s.parts); },
                          [](const StarSpec & s) { return star_graph(s.leaves); },
                          [](const BistarSpec & s) { return bistar_graph(s.c, s.d); },
                          [](const FriendshipSpec & s) { return friendship_graph(s.t); },
                          [](const WheelSpec & s) { return wheel_graph(s.n); },
                          [](const BookSpec & s) { return book_c4(s.t); },
                          [](const EmptySpec & s) { return empty_graph(s.n); },
                          [](const TreeSpec & s) { return tree_graph(s.n, s.edges); },
                      },
                      spec);
}

auto family_name(const FamilySpec & spec) -> std::string
{
    auto list = [](const std::vector<int> & xs) {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += (i ? "," : "") + std::to_string(xs[i]);
        return out;
    };
    return std::visit(overloaded{
                          [](const PathSpec & s) { return "P" + std::to_string(s.n); },
                          [](const CycleSpec & s) { return "C" + std::to_string(s.n); },
                          [](const CompleteSpec & s) { return "K" + std::to_string(s.n); },
                          [&](const MultipartiteSpec & s) { return "K(" + list(s.parts) + ")"; },
                          [](const StarSpec & s) { return "K1," + std::to_string(s.leaves); },
                          [](const BistarSpec & s) { return "B" + std::to_string(s.c) + "," + std::to_string(s.d); },
                          [](const FriendshipSpec & s) { return "F" + std::to_string(s.t); },
                          [](const WheelSpec & s) { return "W" + std::to_string(s.n); },
                          [](const BookSpec & s) { return "C4^(" + std::to_string(s.t) + ")"; },
                          [](const EmptySpec & s) { return "E" + std::to_string(s.n); },
                          [](const TreeSpec & s) { return "T" + std::to_string(s.n); },
                      },
                      spec);
}

} // namespace lda
