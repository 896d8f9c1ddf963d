#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "pendant_lab/classes.hpp"
#include "pendant_lab/error.hpp"

namespace pendant_lab {

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw ContractError("contract_edge: not an edge");
  std::vector<Edge> es;
  auto relabel = [&](Vertex x) { return x == v ? (u < v ? u : u - 1) : (x > v ? x - 1 : x); };
  for (const Edge& e : g.edges()) {
    Vertex a = relabel(e.u);
    Vertex b = relabel(e.v);
    if (a != b) es.emplace_back(a, b);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph::from_edges(g.order() - 1, es);
}

namespace {

bool extend_embedding(const Graph& g, const Graph& m, const std::vector<Vertex>& order,
                      std::size_t k, std::array<Vertex, kMaxOrder>& image, VertexSet used) {
  if (k == order.size()) return true;
  const Vertex x = order[k];
  const int need = m.degree(x);
  VertexSet candidates = g.vertex_set() & ~used;
  for (std::size_t i = 0; i < k; ++i) {
    if (m.has_edge(order[i], x)) candidates &= g.neighbors(image[order[i]]);
  }
  bool found = false;
  for_each_vertex(candidates, [&](Vertex y) {
    if (found || g.degree(y) < need) return;
    image[x] = y;
    found = extend_embedding(g, m, order, k + 1, image, used | bit(y));
  });
  return found;
}

int cyclomatic(const Graph& g) { return g.size() - g.order() + kappa(g); }

struct MinorTarget {
  Graph m;
  int min_degree = 0;
  int cyclomatic_number = 0;
  bool connected = false;
};

// Reductions that preserve the presence of the minor: isolated vertices
// when M has none, leaves when M has minimum degree >= 2, and suppression of
// degree-2 vertices when M has minimum degree >= 3.
Graph reduce(Graph g, const MinorTarget& t) {
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      const int d = g.degree(v);
      if ((d == 0 && t.min_degree >= 1) || (d == 1 && t.min_degree >= 2)) {
        g = g.induced(g.vertex_set() & ~bit(v));
        changed = true;
        break;
      }
      if (d == 2 && t.min_degree >= 3) {
        g = contract_edge(g, lowest(g.neighbors(v)), v);
        changed = true;
        break;
      }
    }
  }
  return g;
}

class MinorCache {
 public:
  std::optional<bool> find(const CanonicalForm& m, const CanonicalForm& g) {
    std::lock_guard lock(mu_);
    auto it = table_.find({m, g});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void put(const CanonicalForm& m, const CanonicalForm& g, bool value) {
    std::lock_guard lock(mu_);
    table_[{m, g}] = value;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<CanonicalForm, CanonicalForm>, bool> table_;
};

MinorCache& minor_cache() {
  static MinorCache cache;
  return cache;
}

bool minor_search(const Graph& input, const MinorTarget& t, const CanonicalForm& mform) {
  Graph g = reduce(input, t);
  if (g.order() < t.m.order() || g.size() < t.m.size()) return false;
  if (cyclomatic(g) < t.cyclomatic_number) return false;
  if (t.connected) {
    auto parts = components(g);
    if (parts.size() > 1) {
      for (VertexSet c : parts) {
        if (minor_search(g.induced(c), t, mform)) return true;
      }
      return false;
    }
  }
  const CanonicalForm gform = canonical_form(g);
  if (auto hit = minor_cache().find(mform, gform)) return *hit;
  bool result = contains_subgraph(g, t.m);
  if (!result && g.order() > t.m.order()) {
    for (Vertex v = 0; v < g.order() && !result; ++v) {
      result = minor_search(g.induced(g.vertex_set() & ~bit(v)), t, mform);
    }
  }
  if (!result) {
    for (const Edge& e : g.edges()) {
      if (minor_search(contract_edge(g, e.u, e.v), t, mform)) {
        result = true;
        break;
      }
    }
  }
  minor_cache().put(mform, gform, result);
  return result;
}

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& m) {
  if (m.order() > g.order() || m.size() > g.size()) return false;
  if (m.order() == 0) return true;
  // Place high-degree vertices first, keeping each next vertex adjacent to
  // the placed ones where possible.
  std::vector<Vertex> order;
  VertexSet placed = 0;
  while (popcount(placed) < m.order()) {
    Vertex best = -1;
    int best_key = -1;
    for_each_vertex(m.vertex_set() & ~placed, [&](Vertex v) {
      int key = popcount(m.neighbors(v) & placed) * 32 + m.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    });
    order.push_back(best);
    placed |= bit(best);
  }
  std::array<Vertex, kMaxOrder> image{};
  return extend_embedding(g, m, order, 0, image, 0);
}

bool has_minor(const Graph& g, const Graph& m) {
  if (m.order() == 0) return true;
  MinorTarget t;
  t.m = m;
  t.min_degree = m.order();
  for (Vertex v = 0; v < m.order(); ++v) t.min_degree = std::min(t.min_degree, m.degree(v));
  t.cyclomatic_number = cyclomatic(m);
  t.connected = is_connected(m);
  return minor_search(g, t, canonical_form(m));
}

}  // namespace pendant_lab
