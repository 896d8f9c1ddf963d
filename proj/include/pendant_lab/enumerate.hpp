#pragma once

// Labelled and unlabelled enumeration of small graphs.

#include <cstdint>
#include <vector>

#include "pendant_lab/graph.hpp"

namespace pendant_lab {

inline constexpr int kUnlabelledCap = 8;

// Canonically labelled representatives of every graph of order n (one per
// isomorphism class), sorted by canonical form. Generated by adding a vertex
// to every representative of order n-1 and deduplicating. Cached.
const std::vector<Graph>& unlabelled_graphs(int n);
const std::vector<Graph>& unlabelled_connected_graphs(int n);

inline std::uint64_t labelled_graph_count(int n) {
  return std::uint64_t{1} << pair_count(n);
}

// Calls f(Graph) for every labelled graph on n vertices in ascending
// edge-mask order over the half-open mask range [first, last).
template <typename F>
void for_each_labelled(int n, std::uint64_t first, std::uint64_t last, F&& f) {
  for (std::uint64_t mask = first; mask < last; ++mask) f(Graph::from_edge_mask(n, mask), mask);
}

}  // namespace pendant_lab
