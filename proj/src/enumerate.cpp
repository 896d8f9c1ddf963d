#include "pendant_lab/enumerate.hpp"

#include <map>
#include <mutex>
#include <set>

#include "pendant_lab/error.hpp"
#include "pendant_lab/iso.hpp"

namespace pendant_lab {

namespace {

struct UnlabelledCache {
  std::mutex mu;
  std::map<int, std::vector<Graph>> all;
  std::map<int, std::vector<Graph>> connected;
};

UnlabelledCache& cache() {
  static UnlabelledCache c;
  return c;
}

std::vector<Graph> generate(int n, const std::vector<Graph>& smaller) {
  if (n == 0) return {Graph(0)};
  std::set<CanonicalForm> forms;
  for (const Graph& h : smaller) {
    const VertexSet full = h.vertex_set();
    for (VertexSet s = 0;; s = (s - full) & full) {
      std::vector<Edge> es = h.edges();
      for_each_vertex(s, [&](Vertex v) { es.emplace_back(v, n - 1); });
      forms.insert(canonical_form(Graph::from_edges(n, es)));
      if (s == full) break;
    }
  }
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.to_graph());
  return out;
}

const std::vector<Graph>& all_locked(UnlabelledCache& c, int n) {
  auto it = c.all.find(n);
  if (it != c.all.end()) return it->second;
  std::vector<Graph> smaller = n > 0 ? all_locked(c, n - 1) : std::vector<Graph>{};
  return c.all.emplace(n, generate(n, smaller)).first->second;
}

}  // namespace

const std::vector<Graph>& unlabelled_graphs(int n) {
  if (n < 0 || n > kUnlabelledCap) {
    throw CapExceeded("unlabelled enumeration is capped at order " + std::to_string(kUnlabelledCap));
  }
  auto& c = cache();
  std::lock_guard lock(c.mu);
  return all_locked(c, n);
}

const std::vector<Graph>& unlabelled_connected_graphs(int n) {
  const auto& all = unlabelled_graphs(n);
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto it = c.connected.find(n);
  if (it != c.connected.end()) return it->second;
  std::vector<Graph> out;
  for (const Graph& g : all) {
    if (is_connected(g)) out.push_back(g);
  }
  return c.connected.emplace(n, std::move(out)).first->second;
}

}  // namespace pendant_lab
