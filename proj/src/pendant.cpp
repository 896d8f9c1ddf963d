#include "pendant_lab/pendant.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "pendant_lab/error.hpp"

namespace pendant_lab {

namespace {

Vertex local_index(VertexSet s, Vertex v) { return popcount(s & (bit(v) - 1)); }

}  // namespace

std::vector<PendantAppearance> pendant_appearances(const Graph& g) {
  std::vector<PendantAppearance> out;
  for (const Edge& e : bridges(g)) {
    const Graph cut = delete_edge(g, e);
    for (auto [inner, outer] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      PendantAppearance a;
      a.vertices = component_of(cut, inner, cut.vertex_set());
      a.inner = inner;
      a.outer = outer;
      a.shape = canonical_form(g.induced(a.vertices));
      out.push_back(a);
    }
  }
  return out;
}

std::vector<PendantAppearance> pend_rooted(const Graph& g, const RootedGraph& h) {
  const CanonicalForm target = canonical_form(h);
  const CanonicalForm unrooted = canonical_form(h.graph());
  std::vector<PendantAppearance> out;
  for (const auto& a : pendant_appearances(g)) {
    if (a.shape != unrooted) continue;
    const Graph sub = g.induced(a.vertices);
    if (canonicalize_rooted(sub, local_index(a.vertices, a.inner)).form == target) out.push_back(a);
  }
  return out;
}

std::vector<PendantAppearance> pend_unrooted_list(const Graph& g, const Graph& h) {
  if (!is_connected(h)) throw ContractError("pendant shapes must be connected");
  const CanonicalForm target = canonical_form(h);
  std::vector<PendantAppearance> out;
  for (const auto& a : pendant_appearances(g)) {
    if (a.shape == target) out.push_back(a);
  }
  return out;
}

std::uint64_t pend_unrooted(const Graph& g, const Graph& h) { return pend_unrooted_list(g, h).size(); }

std::uint64_t pend_total(const Graph& g) { return 2 * bridges(g).size(); }

void check_vertex_pendant_root(const RootedGraph& k) {
  if (k.order() < 2) throw ContractError("invalid root: K must have at least two vertices");
  const Graph rest = k.graph().induced(k.graph().vertex_set() & ~bit(k.root()));
  if (!is_connected(rest)) throw ContractError("invalid root: K - r is disconnected");
}

std::vector<VertexPendantAppearance> vpend(const Graph& g, const RootedGraph& k) {
  check_vertex_pendant_root(k);
  const int h = k.order() - 1;
  const CanonicalForm target = canonical_form(k);
  std::vector<VertexPendantAppearance> out;
  const VertexSet full = g.vertex_set();
  // S = W \ {w*}: connected, order h, with exactly one vertex outside S
  // adjacent to it.
  for (VertexSet s = 0;; s = (s - full) & full) {
    if (popcount(s) == h && component_of(g, lowest(s), s) == s) {
      VertexSet boundary = 0;
      for_each_vertex(s, [&](Vertex v) { boundary |= g.neighbors(v); });
      boundary &= ~s;
      if (popcount(boundary) == 1) {
        VertexPendantAppearance a;
        a.vertices = s | boundary;
        a.distinguished = lowest(boundary);
        a.shape = canonicalize_rooted(g.induced(a.vertices), local_index(a.vertices, a.distinguished)).form;
        if (a.shape == target) out.push_back(a);
      }
    }
    if (s == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootedGraph plus_root(const RootedGraph& h) {
  std::vector<Edge> es = h.graph().edges();
  const int n = h.order();
  es.emplace_back(h.root(), n);
  return RootedGraph(Graph::from_edges(n + 1, es), n);
}

Graph attach_pendant(const Graph& g, const RootedGraph& h, Vertex host,
                     std::span<const Vertex> labels) {
  const int n = g.order();
  const int k = h.order();
  if (host < 0 || host >= n) throw ContractError("host is not a vertex");
  if (static_cast<int>(labels.size()) != k) throw ContractError("label count differs from v(h)");
  if (n + k > kMaxOrder) throw CapExceeded("attach_pendant exceeds the vertex cap");
  VertexSet seen = 0;
  for (Vertex l : labels) {
    if (l < n || l >= n + k || (seen & bit(l)) != 0) {
      throw ContractError("label collision: labels must be the fresh vertices " +
                          std::to_string(n + 1) + ".." + std::to_string(n + k));
    }
    seen |= bit(l);
  }
  std::vector<Edge> es = g.edges();
  for (const Edge& e : h.graph().edges()) es.emplace_back(labels[e.u], labels[e.v]);
  es.emplace_back(host, labels[h.root()]);
  return Graph::from_edges(n + k, es);
}

Graph attach_pendant(const Graph& g, const RootedGraph& h, Vertex host) {
  std::vector<Vertex> labels(static_cast<std::size_t>(h.order()));
  std::iota(labels.begin(), labels.end(), g.order());
  return attach_pendant(g, h, host, labels);
}

Graph vertex_attach(const Graph& g, const RootedGraph& k, Vertex host) {
  const int n = g.order();
  if (host < 0 || host >= n) throw ContractError("host is not a vertex");
  if (n + k.order() - 1 > kMaxOrder) throw CapExceeded("vertex_attach exceeds the vertex cap");
  auto image = [&](Vertex v) {
    if (v == k.root()) return host;
    return n + (v < k.root() ? v : v - 1);
  };
  std::vector<Edge> es = g.edges();
  for (const Edge& e : k.graph().edges()) es.emplace_back(image(e.u), image(e.v));
  return Graph::from_edges(n + k.order() - 1, es);
}

bool is_valid_appearance(const Graph& g, const PendantAppearance& a) {
  const VertexSet v = g.vertex_set();
  if (a.vertices == 0 || (a.vertices & ~v) != 0) return false;
  if (a.inner < 0 || a.outer < 0 || a.inner >= g.order() || a.outer >= g.order()) return false;
  if ((a.vertices & bit(a.inner)) == 0 || (a.vertices & bit(a.outer)) != 0) return false;
  if (!g.has_edge(a.inner, a.outer)) return false;
  int crossing = 0;
  for_each_vertex(a.vertices, [&](Vertex w) { crossing += popcount(g.neighbors(w) & ~a.vertices); });
  if (crossing != 1) return false;
  if (component_of(g, a.inner, a.vertices) != a.vertices) return false;
  return canonical_form(g.induced(a.vertices)) == a.shape;
}

Graph detach_pendant(const Graph& g, const PendantAppearance& a) {
  if (!is_valid_appearance(g, a)) throw ContractError("stale pendant appearance");
  return g.induced(g.vertex_set() & ~a.vertices);
}

std::vector<PendantAppearance> kill_set(const Graph& g, const GraphClass& c, int h_star,
                                        const PendantAppearance& a) {
  const Graph rest = detach_pendant(g, a);
  auto in_c = [&](const Graph& big, const PendantAppearance& p) {
    return popcount(p.vertices) <= h_star && c.contains(big.induced(p.vertices));
  };
  // Map labels of g \ W back to labels of g.
  std::array<Vertex, kMaxOrder> back{};
  int k = 0;
  for_each_vertex(g.vertex_set() & ~a.vertices, [&](Vertex v) { back[k++] = v; });
  std::vector<PendantAppearance> survivors;
  for (const auto& p : pendant_appearances(rest)) {
    if (!in_c(rest, p)) continue;
    PendantAppearance q = p;
    q.vertices = 0;
    for_each_vertex(p.vertices, [&](Vertex v) { q.vertices |= bit(back[v]); });
    q.inner = back[p.inner];
    q.outer = back[p.outer];
    survivors.push_back(q);
  }
  std::sort(survivors.begin(), survivors.end());
  std::vector<PendantAppearance> out;
  for (const auto& p : pendant_appearances(g)) {
    if (in_c(g, p) && !std::binary_search(survivors.begin(), survivors.end(), p)) out.push_back(p);
  }
  return out;
}

bool near_disjoint(const VertexPendantAppearance& a, const VertexPendantAppearance& b) {
  const VertexSet common = a.vertices & b.vertices;
  if (common == 0) return true;
  return a.distinguished == b.distinguished && common == bit(a.distinguished);
}

namespace {

template <typename Match>
std::uint64_t count_sparse(const SparseGraph& g, int h, Match&& match) {
  const ComponentLabels comps = components(g);
  std::uint64_t count = 0;
  for (const SparseBridge& b : bridges(g, comps)) {
    const int comp_size = static_cast<int>(comps.parts[static_cast<std::size_t>(b.component)].size());
    if (b.child_side == h && match(side_of_bridge(g, b.child, b.parent), b.child)) ++count;
    if (comp_size - b.child_side == h && match(side_of_bridge(g, b.parent, b.child), b.parent)) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t pend_unrooted(const SparseGraph& g, const Graph& h) {
  if (!is_connected(h)) throw ContractError("pendant shapes must be connected");
  if (h.order() == 1) {
    // Pendant K1 appearances are exactly the degree-1 vertices.
    std::uint64_t leaves = 0;
    for (int v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1 ? 1 : 0;
    return leaves;
  }
  const CanonicalForm target = canonical_form(h);
  return count_sparse(g, h.order(), [&](const std::vector<int>& side, int) {
    return canonical_form(g.induced_small(side)) == target;
  });
}

std::uint64_t pend_rooted(const SparseGraph& g, const RootedGraph& h) {
  const CanonicalForm target = canonical_form(h);
  return count_sparse(g, h.order(), [&](const std::vector<int>& side, int inner) {
    auto pos = std::find(side.begin(), side.end(), inner) - side.begin();
    return canonicalize_rooted(g.induced_small(side), static_cast<Vertex>(pos)).form == target;
  });
}

}  // namespace pendant_lab
