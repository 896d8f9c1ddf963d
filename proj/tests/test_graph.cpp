#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pendant_lab/classes.hpp"
#include "pendant_lab/decompose.hpp"
#include "pendant_lab/enumerate.hpp"
#include "pendant_lab/error.hpp"
#include "pendant_lab/graph.hpp"

using namespace pendant_lab;

namespace {

std::vector<std::pair<int, int>> as_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  for (auto e : edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

TEST_CASE("components") {
  CHECK(components(Graph::path(3)) == std::vector<VertexSet>{0b111});
  CHECK(components(Graph(3)) == std::vector<VertexSet>{0b001, 0b010, 0b100});
  CHECK(components(Graph::from_edges(4, {{0, 1}, {2, 3}})) == std::vector<VertexSet>{0b0011, 0b1100});
  CHECK_FALSE(is_connected(Graph(0)));
}

TEST_CASE("bridges on the worked examples") {
  CHECK(bridges(Graph::path(4)).size() == 3);
  CHECK(bridges(Graph::cycle(3)).empty());
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(bridges(g) == std::vector<Edge>{Edge(2, 3)});
}

TEST_CASE("bridges agree with the deletion oracle on all graphs up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labelled(n, 0, labelled_graph_count(n), [&](const Graph& g, std::uint64_t) {
      auto expected = oracle::bridges_by_deletion(g);
      std::sort(expected.begin(), expected.end());
      REQUIRE(as_pairs(bridges(g)) == expected);
    });
  }
}

TEST_CASE("bridge count is at most v-1 with equality exactly for trees") {
  for (int n = 1; n <= 7; ++n) {
    for_each_labelled(n, 0, labelled_graph_count(n), [&](const Graph& g, std::uint64_t) {
      const auto b = static_cast<int>(bridges(g).size());
      REQUIRE(b <= n - 1);
      REQUIRE((b == n - 1) == is_tree(g));
    });
  }
}

TEST_CASE("acyclicity agrees with the union-find scan") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labelled(n, 0, labelled_graph_count(n), [&](const Graph& g, std::uint64_t) {
      REQUIRE(is_forest(g) == oracle::acyclic(g));
      REQUIRE((circumference(g) == 0) == oracle::acyclic(g));
    });
  }
}

TEST_CASE("circumference") {
  CHECK(circumference(Graph::cycle(5)) == 5);
  CHECK(circumference(Graph::complete(5)) == 5);
  CHECK(circumference(Graph::path(5)) == 0);
  CHECK(circumference(Graph::complete_bipartite(2, 3)) == 4);
  CHECK(circumference(Graph::cycle(3).disjoint_union(Graph::cycle(4))) == 4);
}

TEST_CASE("add and delete edges") {
  const Graph p3 = Graph::path(3);
  CHECK(add_edge(p3, Edge(0, 2)) == Graph::cycle(3));
  CHECK(delete_edge(Graph::cycle(3), Edge(1, 2)).size() == 2);
  CHECK_THROWS_AS(add_edge(p3, Edge(0, 1)), ContractError);
  CHECK_THROWS_AS(delete_edge(p3, Edge(0, 2)), ContractError);
  for_each_labelled(5, 0, labelled_graph_count(5), [&](const Graph& g, std::uint64_t) {
    for (int v = 0; v < 5; ++v)
      for (int u = 0; u < v; ++u)
        if (!g.has_edge(u, v)) REQUIRE(delete_edge(add_edge(g, Edge(u, v)), Edge(u, v)) == g);
  });
}

TEST_CASE("edge masks round trip") {
  for_each_labelled(5, 0, labelled_graph_count(5), [&](const Graph& g, std::uint64_t mask) {
    REQUIRE(g.edge_mask() == mask);
  });
}

TEST_CASE("frag_decompose") {
  const Graph connected = Graph::cycle(4);
  const auto d0 = frag_decompose(connected);
  CHECK(d0.frag.empty());
  CHECK(d0.frag_order() == 0);

  const Graph g = Graph::path(3).disjoint_union(Graph::path(2));
  const auto d1 = frag_decompose(g);
  CHECK(d1.big_vertices == 0b00111);
  CHECK(d1.frag.parts == std::vector<CanonicalForm>{canonical_form(Graph::path(2))});
  CHECK(d1.frag_order() == 2);
  CHECK(d1.big.order() + d1.frag_order() == g.order());

  const Graph tie = Graph::from_edges(4, {{2, 3}, {0, 1}});
  const auto d2 = frag_decompose(tie);
  CHECK(d2.big_vertices == 0b0011);
  CHECK(d2.frag.parts.size() == 1);
  CHECK(frag_decompose(tie) == frag_decompose(tie));
}

TEST_CASE("frag_restricted, cross and kappa") {
  const GraphClass all = builtin("all");
  const GraphClass forests = builtin("forests");

  const Graph g = Graph::complete(4).disjoint_union(Graph::path(2)).disjoint_union(Graph::cycle(3));
  CHECK(frag_restricted(g, all) == frag_decompose(g).frag);
  const Fragment f = frag_restricted(g, forests);
  CHECK(f.parts == std::vector<CanonicalForm>{canonical_form(Graph::path(2))});
  CHECK(f.order == 2);
  CHECK(frag_restricted(Graph::cycle(5), forests).empty());

  CHECK(cross(Graph::cycle(4), all) == 0);
  CHECK(cross(Graph(2), all) == 1);
  const GraphClass k2 = GraphClass("K2", [](const Graph& h) { return h.order() == 2 && h.size() == 1; });
  CHECK(cross(Graph::from_edges(4, {{0, 1}, {2, 3}}), k2) == 4);

  CHECK(kappa_plus(Graph::path(4), forests) == 1);
  CHECK(kappa_plus(Graph::cycle(4), forests) == 1);
  const Graph h = Graph::cycle(3).disjoint_union(Graph::path(2)).disjoint_union(Graph::path(2));
  CHECK(kappa(h) == 3);
  CHECK(kappa_of(h, Graph::path(2)) == 2);
  CHECK(kappa_in(h, forests) == 2);
  CHECK(kappa_plus(h, forests) == 3);
}

TEST_CASE("parse and format") {
  const Graph g = parse_graph("# triangle with a tail\n4\n1 2\n2 3\n1 3\n\n3 4\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  CHECK(parse_graph(format_graph(g)) == g);
  CHECK_THROWS_AS(parse_graph("3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("17\n"), CapExceeded);
}
