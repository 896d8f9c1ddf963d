#pragma once

// Exact uniform samplers for R_n drawn from a class.
//
// All entry points taking (seed, index) draw from Rng::for_draw(seed, index),
// so draw i is reproducible independently of how draws are scheduled.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pendant_lab/classes.hpp"
#include "pendant_lab/graph.hpp"
#include "pendant_lab/random.hpp"
#include "pendant_lab/sparse_graph.hpp"

namespace pendant_lab {

inline constexpr int kForestCap = 2000;

// Uniform labelled tree on n vertices via a uniform Pruefer sequence.
SparseGraph uniform_tree(int n, Rng& rng);
SparseGraph uniform_tree(int n, std::uint64_t seed, std::uint64_t index = 0);

// Uniform labelled forest: the order k of the component of a distinguished
// vertex is drawn with probability C(m-1,k-1) k^(k-2) F_{m-k} / F_m, that
// component is a uniform tree on k uniformly chosen vertices, and the rest is
// sampled recursively.
SparseGraph uniform_forest(int n, Rng& rng);
SparseGraph uniform_forest(int n, std::uint64_t seed, std::uint64_t index = 0);

// Edge masks of all labelled members of c on n vertices, ascending. Cached
// per (class name, n).
const std::vector<std::uint64_t>& labelled_members(const GraphClass& c, int n);

// Uniform over A_n by a uniform index into the ascending edge-mask
// enumeration of its members. Throws ContractError when A_n is empty.
Graph uniform_enumerative(const GraphClass& c, int n, Rng& rng);
Graph uniform_enumerative(const GraphClass& c, int n, std::uint64_t seed, std::uint64_t index = 0);

// Draw i of R_n for class c: forests and trees use the decomposition
// samplers at any n <= kForestCap; other classes enumerate (n <= census cap).
using DrawFn = std::function<SparseGraph(std::uint64_t seed, std::uint64_t index)>;
DrawFn make_sampler(const GraphClass& c, int n);

}  // namespace pendant_lab
