#pragma once

// Fragment decomposition and component statistics.
//
// The fragment of G is what remains after deleting a largest component;
// among several largest components the one containing the smallest vertex
// is kept as `big`.

#include <compare>
#include <string>
#include <vector>

#include "pendant_lab/classes.hpp"
#include "pendant_lab/graph.hpp"
#include "pendant_lab/iso.hpp"
#include "pendant_lab/sparse_graph.hpp"

namespace pendant_lab {

// Unlabelled multiset of components: sorted canonical forms. Components of
// sampled graphs above kMaxOrder carry no shape and are only counted.
struct Fragment {
  std::vector<CanonicalForm> parts;
  int order = 0;
  int oversized_parts = 0;
  int oversized_order = 0;

  bool empty() const { return parts.empty() && oversized_parts == 0; }
  auto operator<=>(const Fragment&) const = default;
  // Parts joined by '+', "empty" for the empty graph.
  std::string describe() const;
};

struct FragDecomposition {
  Graph big;
  VertexSet big_vertices = 0;
  Fragment frag;

  int frag_order() const { return frag.order; }
  bool operator==(const FragDecomposition&) const = default;
};

FragDecomposition frag_decompose(const Graph& g);
// Frag(G, F) and frag(G, F): fragment components that lie in f.
Fragment frag_restricted(const Graph& g, const GraphClass& f);

// |Cross(G, F)|: non-edges joining distinct components, at least one of them
// in f.
std::uint64_t cross(const Graph& g, const GraphClass& f);

int kappa_of(const Graph& g, const Graph& h);
int kappa_in(const Graph& g, const GraphClass& f);
// kappa(G, F), plus one when some component of G is not in F.
int kappa_plus(const Graph& g, const GraphClass& f);

// Large-graph counterparts used on sampled graphs.
struct SparseStats {
  int order = 0;
  int components = 0;
  int big_order = 0;
  Fragment frag;  // unrestricted fragment
};
SparseStats sparse_stats(const SparseGraph& g);
Fragment frag_restricted(const SparseGraph& g, const GraphClass& f);
int kappa_plus(const SparseGraph& g, const GraphClass& f);

}  // namespace pendant_lab
