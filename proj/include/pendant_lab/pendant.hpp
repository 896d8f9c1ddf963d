#pragma once

// Pendant appearances (an induced copy of a connected graph joined to the
// rest by exactly one edge, the link) and vertex-pendant appearances (a
// copy of a rooted graph sharing only its root image with the rest), with
// the attach / detach surgery built on them.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "pendant_lab/classes.hpp"
#include "pendant_lab/graph.hpp"
#include "pendant_lab/iso.hpp"
#include "pendant_lab/sparse_graph.hpp"

namespace pendant_lab {

struct PendantAppearance {
  VertexSet vertices = 0;  // W
  Vertex inner = 0;        // link endpoint in W, the image of the root
  Vertex outer = 0;        // link endpoint outside W
  CanonicalForm shape;     // unrooted form of G[W]

  auto operator<=>(const PendantAppearance&) const = default;
};

struct VertexPendantAppearance {
  VertexSet vertices = 0;    // W, |W| = v(K)
  Vertex distinguished = 0;  // w*, the image of the root
  CanonicalForm shape;       // rooted form of G[W] at w*

  auto operator<=>(const VertexPendantAppearance&) const = default;
};

// Every pendant appearance of every connected graph: one per orientation of
// each bridge, ordered by (bridge, orientation).
std::vector<PendantAppearance> pendant_appearances(const Graph& g);

std::vector<PendantAppearance> pend_rooted(const Graph& g, const RootedGraph& h);
std::vector<PendantAppearance> pend_unrooted_list(const Graph& g, const Graph& h);
std::uint64_t pend_unrooted(const Graph& g, const Graph& h);
// 2 * |bridges(g)|.
std::uint64_t pend_total(const Graph& g);

// Throws ContractError("invalid root ...") unless K and K - r are connected
// and K has at least two vertices.
void check_vertex_pendant_root(const RootedGraph& k);
std::vector<VertexPendantAppearance> vpend(const Graph& g, const RootedGraph& k);

// Adds a new vertex adjacent to the root and makes it the root.
RootedGraph plus_root(const RootedGraph& h);

// Adds a copy of h whose vertex i gets label labels[i]; the labels must be
// exactly the fresh vertices g.order() .. g.order()+v(h)-1. The root is
// joined to `host` by the link edge.
Graph attach_pendant(const Graph& g, const RootedGraph& h, Vertex host,
                     std::span<const Vertex> labels);
Graph attach_pendant(const Graph& g, const RootedGraph& h, Vertex host);
// Identifies the root of a copy of k with `host`; the other vertices of k
// become g.order() .. g.order()+v(k)-2 in vertex order.
Graph vertex_attach(const Graph& g, const RootedGraph& k, Vertex host);

bool is_valid_appearance(const Graph& g, const PendantAppearance& a);
// Induced subgraph on V(g) \ W, relabelled order-preservingly. Throws
// ContractError for a stale appearance.
Graph detach_pendant(const Graph& g, const PendantAppearance& a);

// Appearances of members of c (orders <= h_star) present in g but not in
// g \ W, where W is the vertex set of `a`. Labels are those of g.
std::vector<PendantAppearance> kill_set(const Graph& g, const GraphClass& c, int h_star,
                                        const PendantAppearance& a);

// Disjoint, or sharing exactly the common distinguished vertex.
bool near_disjoint(const VertexPendantAppearance& a, const VertexPendantAppearance& b);

// Counts for large sampled graphs. h must be connected with at most
// kMaxOrder vertices.
std::uint64_t pend_unrooted(const SparseGraph& g, const Graph& h);
std::uint64_t pend_rooted(const SparseGraph& g, const RootedGraph& h);

}  // namespace pendant_lab
