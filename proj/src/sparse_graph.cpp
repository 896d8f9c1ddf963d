#include "pendant_lab/sparse_graph.hpp"

#include <algorithm>
#include <array>

#include "pendant_lab/error.hpp"

namespace pendant_lab {

SparseGraph SparseGraph::from_graph(const Graph& g) {
  SparseGraph s(g.order());
  for (const Edge& e : g.edges()) s.add_edge(e.u, e.v);
  return s;
}

void SparseGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= order() || v >= order()) {
    throw ContractError("bad edge for sparse graph");
  }
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  ++edges_;
}

std::optional<Graph> SparseGraph::to_small() const {
  if (order() > kMaxOrder) return std::nullopt;
  return Graph::from_edges(order(), edges());
}

Graph SparseGraph::induced_small(std::span<const int> vertices) const {
  if (vertices.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw CapExceeded("induced subgraph exceeds the small-graph cap");
  }
  Graph h(static_cast<int>(vertices.size()));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : neighbors(vertices[i])) {
      auto it = std::find(vertices.begin(), vertices.end(), w);
      if (it != vertices.end()) {
        auto j = static_cast<std::size_t>(it - vertices.begin());
        if (i < j) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph::from_edges(static_cast<int>(vertices.size()), es);
}

std::vector<Edge> SparseGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComponentLabels components(const SparseGraph& g) {
  ComponentLabels out;
  out.label.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (out.label[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.parts.size());
    out.parts.emplace_back();
    auto& part = out.parts.back();
    out.label[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (int w : g.neighbors(v)) {
        if (out.label[static_cast<std::size_t>(w)] < 0) {
          out.label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
  }
  return out;
}

std::vector<SparseBridge> bridges(const SparseGraph& g, const ComponentLabels& comps) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> sub(n, 1);
  std::vector<SparseBridge> out;
  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int clock = 0;
  for (std::size_t c = 0; c < comps.parts.size(); ++c) {
    const int root = comps.parts[c].front();
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        int w = nbrs[f.next++];
        if (w == f.parent) continue;
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          disc[wi] = low[wi] = clock++;
          stack.push_back({w, f.v, 0});
        } else {
          auto vi = static_cast<std::size_t>(f.v);
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (done.parent >= 0) {
        auto vi = static_cast<std::size_t>(done.v);
        auto pi = static_cast<std::size_t>(done.parent);
        low[pi] = std::min(low[pi], low[vi]);
        sub[pi] += sub[vi];
        if (low[vi] > disc[pi]) {
          out.push_back({done.parent, done.v, sub[vi], static_cast<int>(c)});
        }
      }
    }
  }
  return out;
}

std::vector<int> side_of_bridge(const SparseGraph& g, int start, int blocked) {
  std::vector<int> out{start};
  std::vector<int> stack{start};
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[static_cast<std::size_t>(start)] = 1;
  seen[static_cast<std::size_t>(blocked)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        out.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pendant_lab
