#pragma once

// Small labelled simple graphs with bitset adjacency.
//
// Vertices are 0-based indices internally: vertex i carries the external
// label i+1. All text and JSON interfaces speak 1-based labels.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pendant_lab {

inline constexpr int kMaxOrder = 16;

using Vertex = int;
using VertexSet = std::uint32_t;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  // Normalizes so that u < v.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Index of edge {u,v}, u < v, in column-major order:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
inline constexpr int edge_index(Vertex u, Vertex v) { return v * (v - 1) / 2 + u; }
inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  // Bit edge_index(u, v) of `mask` selects edge {u,v}. Requires n <= 11.
  static Graph from_edge_mask(int n, std::uint64_t mask);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);
  static Graph complete_bipartite(int a, int b);

  int order() const { return n_; }
  int size() const;
  bool empty() const { return n_ == 0; }

  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  VertexSet vertex_set() const { return all_vertices(n_); }
  std::vector<Edge> edges() const;
  std::uint64_t edge_mask() const;

  // Induced subgraph on `s`, relabelled order-preservingly to 0..|s|-1.
  Graph induced(VertexSet s) const;
  // Vertex v of *this becomes perm[v] in the result.
  Graph permuted(std::span<const int> perm) const;
  // Vertices of `other` are appended after the vertices of *this.
  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph& other) const;

 private:
  friend Graph add_edge(const Graph&, Edge);
  friend Graph delete_edge(const Graph&, Edge);
  void set_edge(Vertex u, Vertex v, bool on);

  int n_ = 0;
  std::array<std::uint16_t, kMaxOrder> adj_{};
};

// Throws ContractError if the edge is already present / absent.
Graph add_edge(const Graph& g, Edge e);
Graph delete_edge(const Graph& g, Edge e);

// Connected vertex sets ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
VertexSet component_of(const Graph& g, Vertex v, VertexSet within);
bool is_connected(const Graph& g);
int kappa(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

// Bridges via lowpoint DFS.
std::vector<Edge> bridges(const Graph& g);

// Longest cycle length, 0 for a forest.
int circumference(const Graph& g);

// Edge-list text format: first line `n`, then one `u v` pair per line,
// 1-based. Blank lines and lines starting with '#' are ignored.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

}  // namespace pendant_lab
