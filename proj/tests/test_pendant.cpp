#include "doctest.h"
#include "oracles.hpp"
#include "pendant_lab/classes.hpp"
#include "pendant_lab/enumerate.hpp"
#include "pendant_lab/error.hpp"
#include "pendant_lab/pendant.hpp"

using namespace pendant_lab;

namespace {

// Connected rooted graphs of order <= max_order, one per root orbit.
std::vector<RootedGraph> rooted_shapes(int max_order) {
  std::vector<RootedGraph> out;
  for (int k = 1; k <= max_order; ++k)
    for (const Graph& h : unlabelled_connected_graphs(k))
      for (VertexSet o : root_orbits(h)) out.emplace_back(h, lowest(o));
  return out;
}

}  // namespace

TEST_CASE("pendant appearances in P4") {
  const Graph p4 = Graph::path(4);
  CHECK(pend_rooted(p4, RootedGraph(Graph(1), 0)).size() == 2);
  const auto end_p3 = pend_rooted(p4, RootedGraph(Graph::path(3), 0));
  REQUIRE(end_p3.size() == 2);
  std::vector<std::pair<VertexSet, std::pair<Vertex, Vertex>>> links;
  for (const auto& a : end_p3) links.push_back({a.vertices, {a.inner, a.outer}});
  std::sort(links.begin(), links.end());
  CHECK(links[0] == std::pair<VertexSet, std::pair<Vertex, Vertex>>{0b0111, {2, 3}});
  CHECK(links[1] == std::pair<VertexSet, std::pair<Vertex, Vertex>>{0b1110, {1, 0}});
  CHECK(pend_rooted(p4, RootedGraph(Graph::path(3), 1)).empty());
  CHECK(pend_unrooted(p4, Graph::path(3)) == 2);
  CHECK(pend_unrooted(p4, Graph(1)) == 2);
  CHECK(pend_unrooted(Graph::cycle(3), Graph(1)) == 0);
  CHECK(pend_total(p4) == 6);
  CHECK(pend_total(Graph::cycle(3)) == 0);
  for (int n = 1; n <= 8; ++n) CHECK(pend_total(Graph::path(n)) == static_cast<std::uint64_t>(2 * (n - 1)));
}

TEST_CASE("pend matches the subset-scan oracle") {
  const auto shapes = rooted_shapes(3);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : unlabelled_graphs(n)) {
      for (const auto& h : shapes) {
        REQUIRE(pend_rooted(g, h).size() ==
                static_cast<std::size_t>(oracle::pend_rooted(g, h.graph(), h.root())));
      }
      for (int k = 1; k <= 4; ++k)
        for (const Graph& h : unlabelled_connected_graphs(k))
          REQUIRE(pend_unrooted(g, h) == static_cast<std::uint64_t>(oracle::pend_unrooted(g, h)));
    }
  }
}

TEST_CASE("pend_total is the sum over shapes") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : unlabelled_graphs(n)) {
      std::uint64_t sum = 0;
      for (int k = 1; k < n; ++k)
        for (const Graph& h : unlabelled_connected_graphs(k)) sum += pend_unrooted(g, h);
      REQUIRE(sum == pend_total(g));
      REQUIRE(pend_total(g) <= static_cast<std::uint64_t>(2 * (n - 1)));
    }
  }
}

TEST_CASE("vertex-pendant appearances") {
  const RootedGraph k2_end(Graph::path(2), 0);
  const auto in_p3 = vpend(Graph::path(3), k2_end);
  REQUIRE(in_p3.size() == 2);
  for (const auto& a : in_p3) CHECK(a.distinguished == 1);
  CHECK(vpend(Graph::cycle(3), k2_end).empty());
  CHECK_THROWS_AS(vpend(Graph::path(3), RootedGraph(Graph::path(3), 1)), ContractError);
  CHECK_THROWS_AS(vpend(Graph::path(3), RootedGraph(Graph(1), 0)), ContractError);

  const auto shapes = rooted_shapes(4);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : unlabelled_graphs(n)) {
      for (const auto& k : shapes) {
        if (k.order() < 2) continue;
        const VertexSet rest = k.graph().vertex_set() & ~bit(k.root());
        if (!is_connected(k.graph().induced(rest))) continue;
        REQUIRE(vpend(g, k).size() == static_cast<std::size_t>(oracle::vpend(g, k.graph(), k.root())));
      }
    }
  }
}

TEST_CASE("plus_root") {
  const RootedGraph k1(Graph(1), 0);
  const RootedGraph k2 = plus_root(k1);
  CHECK(k2.order() == 2);
  CHECK(is_isomorphic(k2, RootedGraph(Graph::path(2), 0)));
  CHECK(is_isomorphic(plus_root(k2), RootedGraph(Graph::path(3), 0)));
  for (const auto& h : rooted_shapes(5)) REQUIRE(aut_rooted(plus_root(h)) == aut_rooted(h));
}

TEST_CASE("attach and detach") {
  const Graph p3 = attach_pendant(Graph::path(2), RootedGraph(Graph(1), 0), 1);
  CHECK(is_isomorphic(p3, Graph::path(3)));

  const Graph tri = Graph::cycle(3);
  const Graph g = attach_pendant(tri, RootedGraph(Graph::path(2), 0), 0);
  CHECK(g.order() == 5);
  CHECK(pend_total(g) == pend_total(tri) + 4);

  std::vector<Vertex> clash = {1, 3};
  CHECK_THROWS_AS(attach_pendant(tri, RootedGraph(Graph::path(2), 0), 0, clash), ContractError);

  const Graph p4 = Graph::path(4);
  for (const auto& a : pendant_appearances(p4)) {
    if (a.vertices == 0b0001) CHECK(detach_pendant(p4, a) == Graph::path(3));
    if (a.vertices == 0b0111) CHECK(detach_pendant(p4, a) == Graph(1));
  }
  PendantAppearance stale;
  stale.vertices = 0b0010;
  stale.inner = 1;
  stale.outer = 0;
  CHECK_THROWS_AS(detach_pendant(p4, stale), ContractError);

  const auto shapes = rooted_shapes(3);
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& base : unlabelled_graphs(n)) {
      for (const auto& h : shapes) {
        for (Vertex host = 0; host < n; ++host) {
          const Graph big = attach_pendant(base, h, host);
          bool found = false;
          for (const auto& a : pend_rooted(big, h)) {
            if (a.outer == host && a.vertices == (big.vertex_set() & ~base.vertex_set())) {
              REQUIRE(detach_pendant(big, a) == base);
              found = true;
            }
          }
          REQUIRE(found);
        }
      }
    }
  }
}

TEST_CASE("kill set") {
  // A path component on h*+1 vertices, cut at all-but-one end.
  const int h_star = 3;
  const GraphClass paths = builtin("paths:3");
  const Graph g = Graph::path(h_star + 1).disjoint_union(Graph::cycle(3));
  std::size_t best = 0;
  for (const auto& a : pendant_appearances(g)) {
    if (!paths.contains(g.induced(a.vertices))) continue;
    const auto q = kill_set(g, paths, h_star, a);
    CHECK(q.size() <= static_cast<std::size_t>(2 * h_star));
    best = std::max(best, q.size());
  }
  CHECK(best == static_cast<std::size_t>(2 * h_star));

  const GraphClass k1 = builtin("connected-upto:1");
  const Graph tail = attach_pendant(Graph::cycle(4), RootedGraph(Graph(1), 0), 0);
  for (const auto& a : pend_unrooted_list(tail, Graph(1))) CHECK(kill_set(tail, k1, 1, a).size() <= 2);
}

TEST_CASE("near-disjointness") {
  VertexPendantAppearance a{0b0011, 1, {}};
  VertexPendantAppearance b{0b0110, 1, {}};
  VertexPendantAppearance c{0b0110, 2, {}};
  VertexPendantAppearance d{0b1100, 3, {}};
  CHECK(near_disjoint(a, b));
  CHECK_FALSE(near_disjoint(a, c));
  CHECK(near_disjoint(a, d));
}

TEST_CASE("sparse pend counts agree with the bitset version") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : unlabelled_graphs(n)) {
      const SparseGraph s = SparseGraph::from_graph(g);
      for (int k = 1; k <= 3; ++k) {
        for (const Graph& h : unlabelled_connected_graphs(k)) {
          REQUIRE(pend_unrooted(s, h) == pend_unrooted(g, h));
          for (VertexSet o : root_orbits(h)) {
            const RootedGraph hr(h, lowest(o));
            REQUIRE(pend_rooted(s, hr) == pend_rooted(g, hr).size());
          }
        }
      }
    }
  }
}
