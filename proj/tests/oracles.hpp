#pragma once

// Brute-force reference implementations. Slow and obvious on purpose; none
// of them calls into the optimized code paths they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "pendant_lab/graph.hpp"

namespace oracle {

using pendant_lab::Graph;
using pendant_lab::Vertex;
using pendant_lab::VertexSet;

inline bool adj(const Graph& g, int u, int v) { return g.has_edge(u, v); }

inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.order(); ++v)
    for (int u = 0; u < v; ++u)
      if (adj(g, u, v)) out.emplace_back(u, v);
  return out;
}

// Components counted by repeated flood fill over an explicit edge list.
inline int component_count(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : edges) {
      const int m = std::min(label[u], label[v]);
      if (label[u] != m || label[v] != m) {
        label[u] = label[v] = m;
        changed = true;
      }
    }
  }
  std::set<int> distinct(label.begin(), label.end());
  return static_cast<int>(distinct.size());
}

inline bool connected_on(const Graph& g, VertexSet s) {
  if (s == 0) return false;
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v)
    if ((s >> v) & 1U) vs.push_back(v);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (adj(g, vs[i], vs[j])) edges.emplace_back(static_cast<int>(j), static_cast<int>(i));
  return component_count(static_cast<int>(vs.size()), edges) == 1;
}

// An edge is a bridge iff deleting it increases the component count.
inline std::vector<std::pair<int, int>> bridges_by_deletion(const Graph& g) {
  const auto edges = edge_list(g);
  const int base = component_count(g.order(), edges);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (component_count(g.order(), rest) == base + 1) out.push_back(edges[i]);
  }
  return out;
}

// Union-find scan: a graph is acyclic iff no edge closes a cycle.
inline bool acyclic(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (auto [u, v] : edge_list(g)) {
    const int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Number of permutations p with p(root) = root (when root >= 0) that map
// a onto b.
inline std::uint64_t isomorphisms(const Graph& a, const Graph& b, int root_a = -1, int root_b = -1) {
  if (a.order() != b.order() || a.size() != b.size()) return 0;
  const int n = a.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    if (root_a >= 0 && p[root_a] != root_b) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int u = 0; u < v && ok; ++u)
        if (adj(a, u, v) != adj(b, p[u], p[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline std::uint64_t aut(const Graph& g) { return isomorphisms(g, g); }
inline bool isomorphic(const Graph& a, const Graph& b) { return isomorphisms(a, b) > 0; }

inline Graph induced(const Graph& g, VertexSet s, int keep, int* keep_index) {
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v)
    if ((s >> v) & 1U) vs.push_back(v);
  Graph h(static_cast<int>(vs.size()));
  std::vector<pendant_lab::Edge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] == keep && keep_index) *keep_index = static_cast<int>(i);
    for (std::size_t j = 0; j < i; ++j)
      if (adj(g, vs[i], vs[j])) edges.emplace_back(static_cast<int>(j), static_cast<int>(i));
  }
  return Graph::from_edges(static_cast<int>(vs.size()), edges);
}

inline int crossing_edges(const Graph& g, VertexSet w, int* inner) {
  int count = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (!((w >> u) & 1U)) continue;
    for (int v = 0; v < g.order(); ++v) {
      if ((w >> v) & 1U) continue;
      if (adj(g, u, v)) {
        ++count;
        if (inner) *inner = u;
      }
    }
  }
  return count;
}

inline int edges_between(const Graph& g, VertexSet a, VertexSet b) {
  int count = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (((a >> u) & 1U) && ((b >> v) & 1U) && adj(g, u, v)) ++count;
  return count;
}

// pend(G, H rooted at r): subsets W inducing a copy of H, joined to the
// rest by exactly one edge whose inner end is the image of r.
inline int pend_rooted(const Graph& g, const Graph& h, int r) {
  int count = 0;
  const int n = g.order();
  for (VertexSet w = 1; w < (VertexSet{1} << n); ++w) {
    if (std::popcount(w) != h.order()) continue;
    int inner = -1;
    if (crossing_edges(g, w, &inner) != 1) continue;
    int idx = -1;
    const Graph sub = induced(g, w, inner, &idx);
    if (isomorphisms(h, sub, r, idx) > 0) ++count;
  }
  return count;
}

inline int pend_unrooted(const Graph& g, const Graph& h) {
  int count = 0;
  const int n = g.order();
  for (VertexSet w = 1; w < (VertexSet{1} << n); ++w) {
    if (std::popcount(w) != h.order()) continue;
    if (crossing_edges(g, w, nullptr) != 1) continue;
    if (isomorphic(induced(g, w, -1, nullptr), h)) ++count;
  }
  return count;
}

// vpend(G, K rooted at r): subsets W with a distinguished w* such that
// G[W] rooted at w* is a copy of K and W \ {w*} sends no edge outside W.
inline int vpend(const Graph& g, const Graph& k, int r) {
  int count = 0;
  const int n = g.order();
  for (VertexSet w = 1; w < (VertexSet{1} << n); ++w) {
    if (std::popcount(w) != k.order()) continue;
    for (int star = 0; star < n; ++star) {
      if (!((w >> star) & 1U)) continue;
      if (edges_between(g, w & ~(VertexSet{1} << star), ~w) != 0) continue;
      int idx = -1;
      const Graph sub = induced(g, w, star, &idx);
      if (isomorphisms(k, sub, r, idx) > 0) ++count;
    }
  }
  return count;
}

// Minor test by exhaustive branch-set assignment: every vertex of g goes to
// one of the vertices of m or is deleted.
inline bool has_minor(const Graph& g, const Graph& m) {
  const int n = g.order(), k = m.order();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<VertexSet> branch(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v)
      if (assign[v] > 0) branch[assign[v] - 1] |= VertexSet{1} << v;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = connected_on(g, branch[i]);
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < i && ok; ++j) {
        if (!adj(m, i, j)) continue;
        bool touch = false;
        for (int a = 0; a < n && !touch; ++a)
          for (int b = 0; b < n && !touch; ++b)
            if (((branch[i] >> a) & 1U) && ((branch[j] >> b) & 1U) && adj(g, a, b)) touch = true;
        ok = touch;
      }
    if (ok) return true;
    int pos = 0;
    while (pos < n && assign[pos] == k) assign[pos++] = 0;
    if (pos == n) return false;
    ++assign[pos];
  }
}

// Decodes every Pruefer sequence of length n-2 by the textbook O(n^2) rule
// and returns the set of resulting edge masks.
inline std::set<std::uint64_t> prufer_trees(int n) {
  std::set<std::uint64_t> out;
  if (n <= 2) {
    out.insert(n == 2 ? 1 : 0);
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[x];
    std::uint64_t mask = 0;
    auto add = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      mask |= std::uint64_t{1} << pendant_lab::edge_index(a, b);
    };
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      add(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) (a < 0 ? a : b) = v;
    add(a, b);
    out.insert(mask);
    int pos = 0;
    while (pos < n - 2 && seq[pos] == n - 1) seq[pos++] = 0;
    if (pos == n - 2) break;
    ++seq[pos];
  }
  return out;
}

}  // namespace oracle
