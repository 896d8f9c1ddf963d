#pragma once

// Canonical forms, isomorphism and automorphism counting.
//
// The canonical string of a graph under a vertex ordering (v_0, ..., v_{n-1})
// is the concatenation of columns 1..n-1, where column k lists the bits
// adj(v_0, v_k), ..., adj(v_{k-1}, v_k). The canonical form is the
// lexicographically maximal string over all orderings; for a rooted graph
// the maximum is taken over orderings with the root first.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pendant_lab/graph.hpp"

namespace pendant_lab {

struct CanonicalForm {
  std::uint8_t n = 0;
  bool rooted = false;
  // String bits, first string bit is the most significant bit of words[0].
  std::array<std::uint64_t, 2> words{};

  auto operator<=>(const CanonicalForm&) const = default;

  // "<n>:<hex>" or "<n>r:<hex>" for rooted forms; hex has ceil(C(n,2)/4)
  // digits (at least one).
  std::string to_hex() const;
  static CanonicalForm from_hex(const std::string& text);

  // The graph read off the canonical string (root, if any, is vertex 0).
  Graph to_graph() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept;
};

class RootedGraph {
 public:
  // Throws ContractError unless `graph` is connected and `root` is a vertex.
  RootedGraph(Graph graph, Vertex root);

  const Graph& graph() const { return graph_; }
  Vertex root() const { return root_; }
  int order() const { return graph_.order(); }

 private:
  Graph graph_;
  Vertex root_;
};

RootedGraph parse_rooted_graph(const std::string& text);
std::string format_rooted_graph(const RootedGraph& h);

struct CanonicalResult {
  CanonicalForm form;
  // Number of orderings attaining the maximum: aut(g), or the order of the
  // root stabilizer for the rooted variant.
  std::uint64_t automorphisms = 0;
  // One ordering attaining the maximum: labelling[i] is the vertex placed at
  // position i.
  std::vector<Vertex> labelling;
};

CanonicalResult canonicalize(const Graph& g);
CanonicalResult canonicalize_rooted(const Graph& g, Vertex root);

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const RootedGraph& h);
bool is_isomorphic(const Graph& a, const Graph& b);
bool is_isomorphic(const RootedGraph& a, const RootedGraph& b);

std::uint64_t aut(const Graph& g);
std::uint64_t aut_rooted(const RootedGraph& h);

// Orbits of Aut(h) on V(h), each orbit as a vertex set, ordered by smallest
// vertex.
std::vector<VertexSet> root_orbits(const Graph& h);

}  // namespace pendant_lab
