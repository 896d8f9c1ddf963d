#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pendant_lab/boltzmann.hpp"
#include "pendant_lab/census.hpp"
#include "pendant_lab/parallel.hpp"
#include "pendant_lab/cli.hpp"
#include "pendant_lab/error.hpp"
#include "pendant_lab/pendant.hpp"
#include "pendant_lab/sampler.hpp"
#include "pendant_lab/verify.hpp"

namespace py = pybind11;
using namespace pendant_lab;

namespace {

// Graphs cross the boundary as (n, [(u, v), ...]) with 1-based labels.
using EdgeList = std::vector<std::pair<int, int>>;

Graph to_graph(int n, const EdgeList& edges) {
  if (n < 0 || n > kMaxOrder) throw CapExceeded("graphs are limited to " + std::to_string(kMaxOrder) + " vertices");
  std::vector<Edge> es;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n || u == v) throw ContractError("bad edge");
    es.emplace_back(u - 1, v - 1);
  }
  return Graph::from_edges(n, es);
}

// Host graphs of any order, as produced by the samplers.
SparseGraph to_sparse(int n, const EdgeList& edges) {
  if (n < 0) throw ContractError("negative order");
  SparseGraph g(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (!seen.insert(std::minmax(u, v)).second) throw ContractError("repeated edge");
    if (u < 1 || v < 1 || u > n || v > n || u == v) throw ContractError("bad edge");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

py::tuple from_sparse(const SparseGraph& g) {
  EdgeList edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u + 1, e.v + 1);
  return py::make_tuple(g.order(), edges);
}

py::object big(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.str()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pendant appearances, fragments and Boltzmann Poisson limits of random graph classes";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UnknownClass>(m, "UnknownClass", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.attr("MAX_ORDER") = kMaxOrder;

  m.def("parse_graph", [](const std::string& text) {
    const Graph g = parse_graph(text);
    return from_sparse(SparseGraph::from_graph(g));
  });
  m.def("format_graph", [](int n, const EdgeList& e) { return format_graph(to_graph(n, e)); });
  m.def("named_graph", [](const std::string& name) { return from_sparse(SparseGraph::from_graph(named_graph(name))); });

  m.def("canonical_form", [](int n, const EdgeList& e) { return canonical_form(to_graph(n, e)).to_hex(); });
  m.def("aut", [](int n, const EdgeList& e) { return aut(to_graph(n, e)); });
  m.def("is_isomorphic", [](int n1, const EdgeList& e1, int n2, const EdgeList& e2) {
    return is_isomorphic(to_graph(n1, e1), to_graph(n2, e2));
  });
  m.def("bridges", [](int n, const EdgeList& e) {
    const SparseGraph g = to_sparse(n, e);
    EdgeList out;
    for (const auto& b : bridges(g, components(g))) out.emplace_back(std::minmax(b.parent + 1, b.child + 1));
    std::sort(out.begin(), out.end());
    return out;
  });
  m.def("frag_order", [](int n, const EdgeList& e) { return sparse_stats(to_sparse(n, e)).frag.order; });

  m.def("pend", [](int n, const EdgeList& e, int hn, const EdgeList& he) {
    return pend_unrooted(to_sparse(n, e), to_graph(hn, he));
  }, "pend(G, H) for connected H.");
  m.def("pend_rooted", [](int n, const EdgeList& e, int hn, const EdgeList& he, int root) {
    return pend_rooted(to_sparse(n, e), RootedGraph(to_graph(hn, he), root - 1));
  });
  m.def("pend_total", [](int n, const EdgeList& e) { return pend_total(to_graph(n, e)); });
  m.def("vpend", [](int n, const EdgeList& e, int kn, const EdgeList& ke, int root) {
    return vpend(to_graph(n, e), RootedGraph(to_graph(kn, ke), root - 1)).size();
  });

  m.def("census", [](const std::string& cls, int n, int threads) {
    const auto r = count_labelled(builtin(cls), n, {.shapes = false, .threads = resolve_threads(threads)});
    return py::make_tuple(big(r.labelled_count), big(r.connected_count));
  }, py::arg("cls"), py::arg("n"), py::arg("threads") = 1,
     "(labelled, connected) member counts of a class on n vertices.");
  m.def("forest_count", [](int n) { return big(forest_count_exact(n)); });

  m.def("sample", [](const std::string& cls, int n, std::uint64_t seed, std::uint64_t index) {
    return from_sparse(make_sampler(builtin(cls), n)(seed, index));
  }, py::arg("cls"), py::arg("n"), py::arg("seed") = kDefaultSeed, py::arg("index") = 0);

  m.def("bp_sample_trees", [](std::uint64_t seed, std::uint64_t index, int cutoff) {
    static std::map<int, BoltzmannSpec> specs;
    auto it = specs.find(cutoff);
    if (it == specs.end()) it = specs.emplace(cutoff, make_tree_bp_spec(std::exp(-1.0), 6, cutoff)).first;
    const Fragment x = bp_sample(it->second, seed, index);
    std::vector<std::string> parts;
    for (const auto& p : x.parts) parts.push_back(p.to_hex());
    return py::make_tuple(x.order, parts, x.oversized_parts);
  }, py::arg("seed") = kDefaultSeed, py::arg("index") = 0, py::arg("cutoff") = 10000,
     "One draw of BP(trees, 1/e): (order, component forms, oversized components).");

  m.def("lemma_suite_json", [](int cap, int wide) {
    return suite_exhaustive_lemmas({.order_cap = cap, .wide_cap = wide}).to_json().dump();
  }, py::arg("cap") = 6, py::arg("wide_cap") = 7);
  m.def("forest_connectivity_json", [](int n, std::uint64_t samples, std::uint64_t seed) {
    return test_forest_connectivity(n, {.samples = samples, .seed = seed}).to_json().dump();
  }, py::arg("n"), py::arg("samples") = 0, py::arg("seed") = kDefaultSeed);

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, "Run the command line with the given arguments: (exit code, stdout, stderr).");
}
