#include "pendant_lab/graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

#include "pendant_lab/error.hpp"
#include "graph_io.hpp"

namespace pendant_lab {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw ContractError("vertex " + std::to_string(v + 1) + " out of range 1.." +
                        std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw CapExceeded("graph order " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxOrder));
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) throw ContractError("loops are not allowed");
    g.set_edge(e.u, e.v, true);
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.emplace_back(a, b);
  return from_edges(n, es);
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  if (n > 11) throw CapExceeded("edge masks are limited to 11 vertices");
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if ((mask >> edge_index(u, v)) & 1U) g.set_edge(u, v, true);
    }
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.adj_[v] = static_cast<std::uint16_t>(all_vertices(n) & ~bit(v));
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.set_edge(v - 1, v, true);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.set_edge(0, n - 1, true);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.set_edge(0, v, true);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) g.set_edge(u, v, true);
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::edge_mask() const {
  if (n_ > 11) throw CapExceeded("edge masks are limited to 11 vertices");
  std::uint64_t mask = 0;
  for (Vertex v = 1; v < n_; ++v) {
    for_each_vertex(adj_[v] & (bit(v) - 1),
                    [&](Vertex u) { mask |= std::uint64_t{1} << edge_index(u, v); });
  }
  return mask;
}

Graph Graph::induced(VertexSet s) const {
  s &= vertex_set();
  std::array<int, kMaxOrder> index{};
  int k = 0;
  for_each_vertex(s, [&](Vertex v) { index[v] = k++; });
  Graph h(k);
  for_each_vertex(s, [&](Vertex v) {
    std::uint16_t row = 0;
    for_each_vertex(adj_[v] & s, [&](Vertex u) { row |= static_cast<std::uint16_t>(1U << index[u]); });
    h.adj_[index[v]] = row;
  });
  return h;
}

Graph Graph::permuted(std::span<const int> perm) const {
  Graph h(n_);
  for (Vertex v = 0; v < n_; ++v) {
    std::uint16_t row = 0;
    for_each_vertex(adj_[v], [&](Vertex u) { row |= static_cast<std::uint16_t>(1U << perm[u]); });
    h.adj_[perm[v]] = row;
  }
  return h;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph h(n_ + other.n_);
  for (Vertex v = 0; v < n_; ++v) h.adj_[v] = adj_[v];
  for (Vertex v = 0; v < other.n_; ++v) {
    h.adj_[n_ + v] = static_cast<std::uint16_t>(other.adj_[v] << n_);
  }
  return h;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

void Graph::set_edge(Vertex u, Vertex v, bool on) {
  if (on) {
    adj_[u] |= static_cast<std::uint16_t>(bit(v));
    adj_[v] |= static_cast<std::uint16_t>(bit(u));
  } else {
    adj_[u] &= static_cast<std::uint16_t>(~bit(v));
    adj_[v] &= static_cast<std::uint16_t>(~bit(u));
  }
}

Graph add_edge(const Graph& g, Edge e) {
  check_vertex(g.order(), e.u);
  check_vertex(g.order(), e.v);
  if (e.u == e.v) throw ContractError("loops are not allowed");
  if (g.has_edge(e.u, e.v)) {
    throw ContractError("edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) +
                        " already present");
  }
  Graph h = g;
  h.set_edge(e.u, e.v, true);
  return h;
}

Graph delete_edge(const Graph& g, Edge e) {
  check_vertex(g.order(), e.u);
  check_vertex(g.order(), e.v);
  if (e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw ContractError("edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) +
                        " not present");
  }
  Graph h = g;
  h.set_edge(e.u, e.v, false);
  return h;
}

VertexSet component_of(const Graph& g, Vertex v, VertexSet within) {
  VertexSet seen = bit(v);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex u) { next |= g.neighbors(u); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertex_set();
  while (left != 0) {
    VertexSet c = component_of(g, lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return component_of(g, 0, g.vertex_set()) == g.vertex_set();
}

int kappa(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_forest(const Graph& g) { return g.size() == g.order() - kappa(g); }

bool is_tree(const Graph& g) { return g.order() > 0 && g.size() == g.order() - 1 && is_connected(g); }

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.order();
  std::array<int, kMaxOrder> disc{};
  std::array<int, kMaxOrder> low{};
  disc.fill(-1);
  int clock = 0;
  std::vector<Edge> out;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = clock++;
    for_each_vertex(g.neighbors(v), [&](Vertex w) {
      if (w == parent) return;
      if (disc[w] < 0) {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.emplace_back(v, w);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    });
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int circumference(const Graph& g) {
  const int n = g.order();
  int best = 0;
  // Each cycle is found from its smallest vertex s, walking through larger vertices only.
  std::function<void(Vertex, Vertex, VertexSet, int)> walk = [&](Vertex s, Vertex v, VertexSet used,
                                                                 int len) {
    if (len >= 3 && g.has_edge(v, s)) best = std::max(best, len);
    if (best == n) return;
    VertexSet allowed = g.neighbors(v) & ~used & ~(bit(s + 1) - 1);
    for_each_vertex(allowed, [&](Vertex w) { walk(s, w, used | bit(w), len + 1); });
  };
  for (Vertex s = 0; s + 2 < n && best < n - s; ++s) walk(s, s, bit(s), 1);
  return best;
}

namespace detail {

ParsedGraph parse_graph_text(std::istream& in) {
  std::string line;
  int n = -1;
  ParsedGraph out;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    auto fail = [&](const std::string& why) {
      throw ParseError("graph file line " + std::to_string(lineno) + ": " + why);
    };
    if (n < 0) {
      if (!(ls >> n) || n < 1) fail("expected vertex count n >= 1");
      if (n > kMaxOrder) {
        throw CapExceeded("graph order " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxOrder));
      }
      continue;
    }
    std::string head;
    ls >> head;
    if (head == "root") {
      int r = 0;
      if (!(ls >> r) || r < 1 || r > n) fail("bad root label");
      out.root = r - 1;
      continue;
    }
    int u = 0;
    int v = 0;
    try {
      u = std::stoi(head);
    } catch (const std::exception&) {
      fail("expected `u v`");
    }
    if (!(ls >> v)) fail("expected `u v`");
    if (u < 1 || v < 1 || u > n || v > n) fail("vertex label out of range");
    if (u == v) fail("loop");
    edges.emplace_back(u - 1, v - 1);
  }
  if (n < 0) throw ParseError("graph file is empty");
  out.graph = Graph::from_edges(n, edges);
  return out;
}

}  // namespace detail

Graph parse_graph(std::istream& in) { return detail::parse_graph_text(in).graph; }

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace pendant_lab
