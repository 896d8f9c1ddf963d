#pragma once

// Adjacency-list graphs of arbitrary order, produced by the forest and tree
// samplers (n up to a few thousand). Components small enough for the bitset
// representation are converted to Graph for shape identification.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pendant_lab/graph.hpp"

namespace pendant_lab {

class SparseGraph {
 public:
  SparseGraph() = default;
  explicit SparseGraph(int n) : adj_(static_cast<std::size_t>(n)) {}

  static SparseGraph from_graph(const Graph& g);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  // No duplicate check; callers build simple graphs.
  void add_edge(int u, int v);

  // Bitset form when order() <= kMaxOrder.
  std::optional<Graph> to_small() const;
  // Induced subgraph on `vertices` (at most kMaxOrder of them), relabelled in
  // the given order.
  Graph induced_small(std::span<const int> vertices) const;
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edges_ = 0;
};

struct ComponentLabels {
  std::vector<int> label;               // component id per vertex
  std::vector<std::vector<int>> parts;  // vertices of each component, ordered by smallest vertex
};

ComponentLabels components(const SparseGraph& g);

struct SparseBridge {
  int parent;     // endpoint nearer the DFS root
  int child;      // endpoint inside the DFS subtree cut off by the bridge
  int child_side; // vertices on the child side
  int component;  // component id
};

// Bridges by iterative lowpoint DFS.
std::vector<SparseBridge> bridges(const SparseGraph& g, const ComponentLabels& comps);

// Vertices reachable from `start` without using edge {start, blocked}.
std::vector<int> side_of_bridge(const SparseGraph& g, int start, int blocked);

}  // namespace pendant_lab
