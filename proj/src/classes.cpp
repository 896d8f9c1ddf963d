#include "pendant_lab/classes.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

#include "pendant_lab/decompose.hpp"
#include "pendant_lab/enumerate.hpp"
#include "pendant_lab/error.hpp"
#include "pendant_lab/pendant.hpp"
#include "pendant_lab/random.hpp"

namespace pendant_lab {

GraphClass::GraphClass(std::string name, Predicate contains, ClassFlags flags,
                       LargePredicate contains_large)
    : name_(std::move(name)),
      contains_(std::move(contains)),
      contains_large_(std::move(contains_large)),
      flags_(flags) {}

bool GraphClass::contains(const SparseGraph& g) const {
  if (contains_large_) return contains_large_(g);
  if (auto small = g.to_small()) return contains_(*small);
  throw CapExceeded("class " + name_ + " cannot decide graphs above " + std::to_string(kMaxOrder) +
                    " vertices");
}

GraphClass memoized(GraphClass c) {
  struct Cache {
    std::mutex mu;
    std::unordered_map<CanonicalForm, bool, CanonicalFormHash> table;
  };
  auto cache = std::make_shared<Cache>();
  auto inner = c;
  GraphClass out(
      c.name(),
      [cache, inner](const Graph& g) {
        const CanonicalForm key = canonical_form(g);
        {
          std::lock_guard lock(cache->mu);
          auto it = cache->table.find(key);
          if (it != cache->table.end()) return it->second;
        }
        const bool value = inner.contains(g);
        std::lock_guard lock(cache->mu);
        cache->table.emplace(key, value);
        return value;
      },
      c.flags(),
      c.decides_large() ? GraphClass::LargePredicate([inner](const SparseGraph& g) { return inner.contains(g); })
                        : GraphClass::LargePredicate{});
  out.rho = c.rho;
  return out;
}

namespace {

bool two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_connected(g.induced(g.vertex_set() & ~bit(v)))) return false;
  }
  return true;
}

int cyclomatic(const Graph& g) { return g.size() - g.order() + kappa(g); }

}  // namespace

GraphClass minor_closed_class(const MinorSpec& spec, std::string name) {
  if (spec.excluded.empty()) throw ContractError("minor spec needs at least one excluded minor");
  ClassFlags flags;
  flags.bridge_addable = true;
  flags.decomposable = true;
  int min_cyclomatic = 1 << 20;
  int min_order = kMaxOrder + 1;
  for (const Graph& m : spec.excluded) {
    if (m.order() < 1) throw ContractError("excluded minors need at least one vertex");
    flags.bridge_addable = flags.bridge_addable && two_connected(m);
    flags.decomposable = flags.decomposable && is_connected(m);
    min_cyclomatic = std::min(min_cyclomatic, cyclomatic(m));
    min_order = std::min(min_order, m.order());
  }
  if (name.empty()) name = "minor-closed";
  auto excluded = spec.excluded;
  GraphClass c(
      name,
      [excluded, min_cyclomatic, min_order](const Graph& g) {
        // Minors never raise the order or the cyclomatic number.
        if (g.order() < min_order || cyclomatic(g) < min_cyclomatic) return true;
        for (const Graph& m : excluded) {
          if (has_minor(g, m)) return false;
        }
        return true;
      },
      flags);
  return memoized(c);
}

int CycleCap::at(int n) const {
  switch (kind) {
    case Kind::Constant:
      return value;
    case Kind::Sqrt:
      return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    case Kind::Log:
      return std::max(3, static_cast<int>(std::ceil(std::log(static_cast<double>(std::max(n, 1))))));
    case Kind::Infinite:
      break;
  }
  return 1 << 30;
}

std::string CycleCap::describe() const {
  switch (kind) {
    case Kind::Constant:
      return std::to_string(value);
    case Kind::Sqrt:
      return "sqrt";
    case Kind::Log:
      return "log";
    case Kind::Infinite:
      break;
  }
  return "inf";
}

GraphClass cycle_capped(const GraphClass& base, CycleCap t) {
  ClassFlags flags = base.flags();
  // The cap depends on the total order, so membership is not componentwise.
  flags.decomposable = flags.decomposable && t.kind == CycleCap::Kind::Infinite;
  GraphClass c(
      "cycle-capped:" + base.name() + ":" + t.describe(),
      [base, t](const Graph& g) { return base.contains(g) && circumference(g) <= t.at(g.order()); }, flags);
  c.rho = base.rho;
  return c;
}

Graph named_graph(const std::string& name) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UnknownClass("bad graph name: " + name);
    }
  };
  if (name.size() < 2) throw UnknownClass("bad graph name: " + name);
  const char kind = name[0];
  const std::string rest = name.substr(1);
  switch (kind) {
    case 'K': {
      auto comma = rest.find(',');
      if (comma != std::string::npos) {
        return Graph::complete_bipartite(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
      }
      return Graph::complete(number(rest));
    }
    case 'C':
      return Graph::cycle(number(rest));
    case 'P':
      return Graph::path(number(rest));
    case 'S':
      return Graph::star(number(rest));
    case 'W': {
      const int rim = number(rest);
      Graph g = Graph::cycle(rim).disjoint_union(Graph(1));
      for (Vertex v = 0; v < rim; ++v) g = add_edge(g, Edge(v, rim));
      return g;
    }
    default:
      throw UnknownClass("bad graph name: " + name);
  }
}

namespace {

bool is_planar(const Graph& g);

const GraphClass& planar_class() {
  static const GraphClass c = [] {
    GraphClass p = minor_closed_class({{Graph::complete(5), Graph::complete_bipartite(3, 3)}}, "planar");
    GraphClass out(
        "planar",
        [p](const Graph& g) {
          // Euler bound, a necessary condition.
          if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
          return p.contains(g);
        },
        p.flags());
    out.rho = 1.0 / 27.2269;
    return out;
  }();
  return c;
}

bool is_planar(const Graph& g) { return planar_class().contains(g); }

GraphClass all_class() {
  ClassFlags f;
  f.bridge_addable = true;
  f.decomposable = true;
  return GraphClass("all", [](const Graph&) { return true; }, f, [](const SparseGraph&) { return true; });
}

GraphClass forests_class() {
  ClassFlags f;
  f.bridge_addable = true;
  f.decomposable = true;
  GraphClass c(
      "forests", [](const Graph& g) { return is_forest(g); }, f,
      [](const SparseGraph& g) {
        return g.size() + components(g).parts.size() == static_cast<std::size_t>(g.order());
      });
  c.rho = std::exp(-1.0);
  return c;
}

GraphClass trees_class() {
  ClassFlags f;
  f.bridge_addable = true;  // vacuous: no member has two components
  f.connected_only = true;
  GraphClass c(
      "trees", [](const Graph& g) { return is_tree(g); }, f,
      [](const SparseGraph& g) {
        return g.order() > 0 && g.size() + 1 == static_cast<std::size_t>(g.order()) &&
               components(g).parts.size() == 1;
      });
  c.rho = std::exp(-1.0);
  return c;
}

int parse_positive(const std::string& s, const std::string& full) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw UnknownClass("bad class parameter in: " + full);
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"all",          "edgeless",        "connected",     "forests",        "trees",
          "planar",       "connected-planar", "series-parallel", "outerplanar", "parity-mixed",
          "even-planar",  "connected-even",  "paths:<h>",     "connected-upto:<h>",
          "minor-closed:<M1>+<M2>...",        "cycle-capped:<base>:<t>"};
}

GraphClass builtin(const std::string& name) {
  if (name == "all") return all_class();
  if (name == "forests") return forests_class();
  if (name == "trees") return trees_class();
  if (name == "edgeless") {
    ClassFlags f;
    f.decomposable = true;
    return GraphClass("edgeless", [](const Graph& g) { return g.size() == 0; }, f,
                      [](const SparseGraph& g) { return g.size() == 0; });
  }
  if (name == "connected") {
    ClassFlags f;
    f.bridge_addable = true;
    f.connected_only = true;
    return GraphClass("connected", [](const Graph& g) { return is_connected(g); }, f,
                      [](const SparseGraph& g) { return components(g).parts.size() == 1; });
  }
  if (name == "planar") return planar_class();
  if (name == "connected-planar") {
    ClassFlags f;
    f.bridge_addable = true;
    f.connected_only = true;
    GraphClass c("connected-planar", [](const Graph& g) { return is_connected(g) && is_planar(g); }, f);
    c.rho = planar_class().rho;
    return c;
  }
  if (name == "series-parallel") return minor_closed_class({{Graph::complete(4)}}, "series-parallel");
  if (name == "outerplanar") {
    return minor_closed_class({{Graph::complete(4), Graph::complete_bipartite(2, 3)}}, "outerplanar");
  }
  if (name == "parity-mixed") {
    // Even order: planar. Odd order: unrestricted.
    ClassFlags f;
    f.bridge_addable = true;
    return GraphClass("parity-mixed",
                      [](const Graph& g) { return g.order() % 2 == 1 || is_planar(g); }, f);
  }
  if (name == "even-planar") {
    ClassFlags f;
    f.bridge_addable = true;
    f.decomposable = true;
    return GraphClass(
        "even-planar",
        [](const Graph& g) {
          for (VertexSet c : components(g)) {
            if (popcount(c) % 2 != 0) return false;
          }
          return is_planar(g);
        },
        f);
  }
  if (name == "connected-even") {
    ClassFlags f;
    f.bridge_addable = true;
    f.connected_only = true;
    return GraphClass("connected-even",
                      [](const Graph& g) { return g.order() % 2 == 0 && is_connected(g); }, f);
  }
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string tail = colon == std::string::npos ? std::string{} : name.substr(colon + 1);
  if (head == "paths" && !tail.empty()) {
    const int h = parse_positive(tail, name);
    ClassFlags f;
    f.connected_only = true;
    return GraphClass(name, [h](const Graph& g) {
      if (g.order() < 1 || g.order() > h || !is_tree(g)) return false;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) return false;
      }
      return true;
    }, f);
  }
  if (head == "connected-upto" && !tail.empty()) {
    const int h = parse_positive(tail, name);
    ClassFlags f;
    f.connected_only = true;
    return GraphClass(name, [h](const Graph& g) { return g.order() <= h && is_connected(g); }, f);
  }
  if (head == "minor-closed" && !tail.empty()) {
    MinorSpec spec;
    std::size_t start = 0;
    while (start <= tail.size()) {
      auto plus = tail.find('+', start);
      spec.excluded.push_back(named_graph(tail.substr(start, plus - start)));
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    return minor_closed_class(spec, name);
  }
  if (head == "cycle-capped" && !tail.empty()) {
    const auto last = tail.rfind(':');
    if (last == std::string::npos) throw UnknownClass("cycle-capped needs <base>:<t>: " + name);
    const std::string t_text = tail.substr(last + 1);
    CycleCap t;
    if (t_text == "inf") {
      t.kind = CycleCap::Kind::Infinite;
    } else if (t_text == "sqrt") {
      t.kind = CycleCap::Kind::Sqrt;
    } else if (t_text == "log") {
      t.kind = CycleCap::Kind::Log;
    } else {
      t.kind = CycleCap::Kind::Constant;
      t.value = parse_positive(t_text, name);
    }
    return cycle_capped(builtin(tail.substr(0, last)), t);
  }
  throw UnknownClass("unknown class: " + name);
}

// Exhaustive checks range over one representative per isomorphism class;
// every property involved is isomorphism-invariant.

namespace {

std::string edge_text(Vertex u, Vertex v) { return std::to_string(u + 1) + "-" + std::to_string(v + 1); }

CheckResult start(const std::string& property, const GraphClass& c, int n_max) {
  if (n_max > kUnlabelledCap) throw CapExceeded("n_max above enumeration cap " + std::to_string(kUnlabelledCap));
  CheckResult r;
  r.property = property;
  r.class_name = c.name();
  r.n_max = n_max;
  return r;
}

void fail(CheckResult& r, const Graph& g, std::string detail) {
  r.ok = false;
  r.witness = g;
  r.detail = std::move(detail);
}

}  // namespace

CheckResult check_bridge_addable(const GraphClass& c, int n_max) {
  CheckResult r = start("bridge-addable", c, n_max);
  for (int n = 2; n <= n_max && r.ok; ++n) {
    for (const Graph& g : unlabelled_graphs(n)) {
      if (!c.contains(g)) continue;
      const auto parts = components(g);
      for (std::size_t i = 0; i < parts.size() && r.ok; ++i) {
        for (std::size_t j = i + 1; j < parts.size() && r.ok; ++j) {
          for_each_vertex(parts[i], [&](Vertex u) {
            for_each_vertex(parts[j], [&](Vertex v) {
              if (!r.ok) return;
              ++r.instances;
              if (!c.contains(add_edge(g, Edge(u, v)))) fail(r, g, "G + " + edge_text(u, v) + " leaves the class");
            });
          });
        }
      }
      if (!r.ok) break;
    }
  }
  return r;
}

CheckResult check_bridge_deletable(const GraphClass& c, const Graph& h, int n_max) {
  CheckResult r = start("bridge-deletable", c, n_max);
  const CanonicalForm target = canonical_form(h);
  for (int n = 2; n <= n_max && r.ok; ++n) {
    for (const Graph& g : unlabelled_graphs(n)) {
      if (!c.contains(g)) continue;
      for (const Edge& e : bridges(g)) {
        const Graph cut = delete_edge(g, e);
        const VertexSet side_u = component_of(cut, e.u, cut.vertex_set());
        const VertexSet side_v = component_of(cut, e.v, cut.vertex_set());
        const bool copy = canonical_form(cut.induced(side_u)) == target ||
                          canonical_form(cut.induced(side_v)) == target;
        if (!copy) continue;
        ++r.instances;
        if (!c.contains(cut)) {
          fail(r, g, "G - " + edge_text(e.u, e.v) + " leaves the class");
          break;
        }
      }
      if (!r.ok) break;
    }
  }
  return r;
}

CheckResult check_bridge_addable_in(const GraphClass& c, const Graph& h, int n_max) {
  CheckResult r = start("bridge-addable-in", c, n_max);
  const CanonicalForm target = canonical_form(h);
  for (int n = h.order() + 1; n <= n_max && r.ok; ++n) {
    for (const Graph& g : unlabelled_graphs(n)) {
      if (!c.contains(g)) continue;
      for (VertexSet comp : components(g)) {
        if (popcount(comp) != h.order() || canonical_form(g.induced(comp)) != target) continue;
        const VertexSet outside = g.vertex_set() & ~comp;
        for_each_vertex(comp, [&](Vertex u) {
          for_each_vertex(outside, [&](Vertex v) {
            if (!r.ok) return;
            ++r.instances;
            if (!c.contains(add_edge(g, Edge(u, v)))) fail(r, g, "G + " + edge_text(u, v) + " leaves the class");
          });
        });
        if (!r.ok) break;
      }
      if (!r.ok) break;
    }
  }
  return r;
}

CheckResult check_bridge_stable(const GraphClass& c, int n_max) {
  CheckResult r = start("bridge-stable", c, n_max);
  for (int a = 1; a < n_max && r.ok; ++a) {
    for (int b = 1; a + b <= n_max && r.ok; ++b) {
      for (const Graph& g1 : unlabelled_graphs(a)) {
        const bool in1 = c.contains(g1);
        for (const Graph& g2 : unlabelled_graphs(b)) {
          const bool in2 = c.contains(g2);
          if (!in1 && !in2) continue;
          const Graph joined = g1.disjoint_union(g2);
          for (Vertex u = 0; u < a && r.ok; ++u) {
            for (Vertex v = a; v < a + b && r.ok; ++v) {
              ++r.instances;
              const bool in = c.contains(add_edge(joined, Edge(u, v)));
              if (in1 && in2 && !in) {
                fail(r, add_edge(joined, Edge(u, v)), "clause (a): bridge " + edge_text(u, v) + " joins two members into a non-member");
              } else if (in1 != in2 && in) {
                fail(r, add_edge(joined, Edge(u, v)), "clause (b): bridge " + edge_text(u, v) + " joins a member and a non-member into a member");
              }
            }
          }
          if (!r.ok) break;
        }
        if (!r.ok) break;
      }
    }
  }
  return r;
}

CheckResult check_attachable(const GraphClass& c, const RootedGraph& h, int n_max) {
  CheckResult r = start("attachable", c, n_max);
  for (int n = 1; n + h.order() <= n_max && r.ok; ++n) {
    for (const Graph& rest : unlabelled_graphs(n)) {
      if (!c.contains(rest)) continue;
      for (Vertex host = 0; host < n; ++host) {
        ++r.instances;
        const Graph g = attach_pendant(rest, h, host);
        if (!c.contains(g)) {
          fail(r, g, "attaching at vertex " + std::to_string(host + 1) + " leaves the class");
          break;
        }
      }
      if (!r.ok) break;
    }
  }
  return r;
}

CheckResult check_detachable(const GraphClass& c, const RootedGraph& h, int n_max) {
  CheckResult r = start("detachable", c, n_max);
  for (int n = h.order() + 1; n <= n_max && r.ok; ++n) {
    for (const Graph& g : unlabelled_graphs(n)) {
      if (!c.contains(g)) continue;
      for (const auto& a : pend_rooted(g, h)) {
        ++r.instances;
        if (!c.contains(detach_pendant(g, a))) {
          fail(r, g, "detaching the appearance linked by " + edge_text(a.inner, a.outer) + " leaves the class");
          break;
        }
      }
      if (!r.ok) break;
    }
  }
  return r;
}

CheckResult check_isomorphism_invariant(const GraphClass& c, int n_max, int relabellings,
                                        std::uint64_t seed) {
  CheckResult r = start("isomorphism-invariant", c, n_max);
  Rng rng(seed);
  for (int n = 1; n <= n_max && r.ok; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const Graph& g : unlabelled_graphs(n)) {
      const bool expected = c.contains(g);
      for (int i = 0; i < relabellings; ++i) {
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
        rng.shuffle(perm);
        ++r.instances;
        if (c.contains(g.permuted(perm)) != expected) {
          fail(r, g, "membership changes under relabelling");
          break;
        }
      }
      if (!r.ok) break;
    }
  }
  return r;
}

}  // namespace pendant_lab
