#pragma once

#include <lda/graph.hpp>

#include <string>
#include <variant>
#include <vector>

namespace lda {

// Vertex layouts:
//   path       0-1-...-(n-1)
//   cycle      path plus (n-1, 0)
//   multipartite  parts in consecutive id blocks
//   star       centre 0, leaves 1..leaves
//   bistar     centres 0 and 1; leaves of 0 are 2..c+1, leaves of 1 follow
//   friendship centre 0, triangle i on (0, 2i+1, 2i+2)
//   wheel      rim 0..n-1 in cycle order, hub n
//   book_c4    0 = u, x_i = i, y_i = t+i, z_i = 2t+i; cycles u x_i z_i y_i
struct PathSpec { int n; };
struct CycleSpec { int n; };
struct CompleteSpec { int n; };
struct MultipartiteSpec { std::vector<int> parts; };
struct StarSpec { int leaves; };
struct BistarSpec { int c; int d; };
struct FriendshipSpec { int t; };
struct WheelSpec { int n; };
struct BookSpec { int t; };
struct EmptySpec { int n; };
struct TreeSpec { int n; std::vector<Edge> edges; };

using FamilySpec = std::variant<PathSpec, CycleSpec, CompleteSpec, MultipartiteSpec, StarSpec, BistarSpec,
                                FriendshipSpec, WheelSpec, BookSpec, EmptySpec, TreeSpec>;

auto generate(const FamilySpec & spec) -> Graph;

auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto complete_multipartite(const std::vector<int> & parts) -> Graph;
auto star_graph(int leaves) -> Graph;
auto bistar_graph(int c, int d) -> Graph;
auto friendship_graph(int t) -> Graph;
auto wheel_graph(int n) -> Graph;
auto book_c4(int t) -> Graph;
auto empty_graph(int n) -> Graph;
auto tree_graph(int n, std::vector<Edge> edges) -> Graph;

auto family_name(const FamilySpec & spec) -> std::string;

} // namespace lda
