#pragma once

// Graph classes: membership predicates closed under isomorphism, the
// excluded-minor engine, and exhaustive checkers for the structural
// hypotheses (bridge-addable, bridge-stable, attachable, ...).

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pendant_lab/graph.hpp"
#include "pendant_lab/iso.hpp"
#include "pendant_lab/sparse_graph.hpp"

namespace pendant_lab {

struct ClassFlags {
  bool bridge_addable = false;
  // G is in the class iff every component of G is.
  bool decomposable = false;
  bool connected_only = false;
};

class GraphClass {
 public:
  using Predicate = std::function<bool(const Graph&)>;
  using LargePredicate = std::function<bool(const SparseGraph&)>;

  GraphClass(std::string name, Predicate contains, ClassFlags flags = {},
             LargePredicate contains_large = {});

  const std::string& name() const { return name_; }
  const ClassFlags& flags() const { return flags_; }

  bool contains(const Graph& g) const { return contains_(g); }
  // Graphs above kMaxOrder need a large-graph predicate; CapExceeded otherwise.
  bool contains(const SparseGraph& g) const;
  bool decides_large() const { return static_cast<bool>(contains_large_); }

  // Known radius of convergence of the class's exponential generating
  // function, when the library knows one.
  std::optional<double> rho;

 private:
  std::string name_;
  Predicate contains_;
  LargePredicate contains_large_;
  ClassFlags flags_;
};

// Wraps the predicate with a cache keyed by canonical form.
GraphClass memoized(GraphClass c);

struct MinorSpec {
  std::vector<Graph> excluded;
};

// True iff `m` is a minor of `g`.
bool has_minor(const Graph& g, const Graph& m);
// Contract edge {u, v}: v is merged into u and removed.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);
// Some injective map V(m) -> V(g) sends edges to edges.
bool contains_subgraph(const Graph& g, const Graph& m);

GraphClass minor_closed_class(const MinorSpec& spec, std::string name = {});

// Cycle-length cap t(n) evaluated at the order of the tested graph.
struct CycleCap {
  enum class Kind { Constant, Sqrt, Log, Infinite } kind = Kind::Infinite;
  int value = 0;
  int at(int n) const;
  std::string describe() const;
};
GraphClass cycle_capped(const GraphClass& base, CycleCap t);

// Names: all, edgeless, connected, forests, trees, planar, connected-planar,
// series-parallel, outerplanar, parity-mixed, even-planar, connected-even,
// paths:<h>, connected-upto:<h>, minor-closed:<M1>+<M2>...,
// cycle-capped:<base>:<t> with t an integer, `sqrt`, `log` or `inf`.
// Excluded minors are written K<n>, K<a>,<b>, C<n> or P<n>.
GraphClass builtin(const std::string& name);
std::vector<std::string> builtin_names();
Graph named_graph(const std::string& name);

// Outcome of an exhaustive structural check.
struct CheckResult {
  bool ok = true;
  std::string property;
  std::string class_name;
  int n_max = 0;
  std::uint64_t instances = 0;
  // Counterexample in edge-list form plus a description of the violated
  // implication.
  std::optional<Graph> witness;
  std::string detail;
};

CheckResult check_bridge_addable(const GraphClass& c, int n_max);
CheckResult check_bridge_deletable(const GraphClass& c, const Graph& h, int n_max);
CheckResult check_bridge_addable_in(const GraphClass& c, const Graph& h, int n_max);
CheckResult check_bridge_stable(const GraphClass& c, int n_max);
CheckResult check_attachable(const GraphClass& c, const RootedGraph& h, int n_max);
CheckResult check_detachable(const GraphClass& c, const RootedGraph& h, int n_max);
// Relabels every graph of order <= n_max `relabellings` times with a seeded
// shuffle and checks membership is unchanged.
CheckResult check_isomorphism_invariant(const GraphClass& c, int n_max, int relabellings,
                                        std::uint64_t seed);

}  // namespace pendant_lab
