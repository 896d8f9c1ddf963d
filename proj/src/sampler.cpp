#include "pendant_lab/sampler.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include "pendant_lab/census.hpp"
#include "pendant_lab/enumerate.hpp"
#include "pendant_lab/error.hpp"

namespace pendant_lab {

namespace {

// Tree on labels[0..k) decoded from a uniform Pruefer sequence.
void add_uniform_tree(SparseGraph& g, std::span<const int> labels, Rng& rng) {
  const int k = static_cast<int>(labels.size());
  if (k <= 1) return;
  if (k == 2) {
    g.add_edge(labels[0], labels[1]);
    return;
  }
  std::vector<int> code(static_cast<std::size_t>(k - 2));
  for (int& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
  std::vector<int> degree(static_cast<std::size_t>(k), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < k; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    g.add_edge(labels[static_cast<std::size_t>(leaf)], labels[static_cast<std::size_t>(c)]);
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  g.add_edge(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
}

// cumulative[m][k-1] = P(component of the distinguished vertex has order
// <= k) among forests on m vertices, built from log-space terms.
class ForestTable {
 public:
  const std::vector<double>& row(int m) {
    std::lock_guard lock(mu_);
    if (m >= static_cast<int>(rows_.size())) extend(m);
    return rows_[static_cast<std::size_t>(m)];
  }

 private:
  void extend(int m) {
    const int start = static_cast<int>(rows_.size());
    for (int j = static_cast<int>(log_forest_.size()); j <= m; ++j) {
      log_forest_.push_back(log_big(forest_count_exact(j)));
    }
    rows_.resize(static_cast<std::size_t>(m + 1));
    for (int r = std::max(start, 1); r <= m; ++r) {
      std::vector<double> cum(static_cast<std::size_t>(r));
      double acc = 0.0;
      for (int k = 1; k <= r; ++k) {
        const double log_binom = std::lgamma(r) - std::lgamma(k) - std::lgamma(r - k + 1.0);
        const double log_trees = k <= 2 ? 0.0 : (k - 2) * std::log(static_cast<double>(k));
        acc += std::exp(log_binom + log_trees + log_forest_[static_cast<std::size_t>(r - k)] -
                        log_forest_[static_cast<std::size_t>(r)]);
        cum[static_cast<std::size_t>(k - 1)] = acc;
      }
      rows_[static_cast<std::size_t>(r)] = std::move(cum);
    }
  }

  std::mutex mu_;
  std::vector<double> log_forest_;
  std::vector<std::vector<double>> rows_;
};

ForestTable& forest_table() {
  static ForestTable t;
  return t;
}

}  // namespace

SparseGraph uniform_tree(int n, Rng& rng) {
  if (n < 1) throw ContractError("uniform_tree needs n >= 1");
  SparseGraph g(n);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v;
  add_uniform_tree(g, labels, rng);
  return g;
}

SparseGraph uniform_tree(int n, std::uint64_t seed, std::uint64_t index) {
  Rng rng = Rng::for_draw(seed, index);
  return uniform_tree(n, rng);
}

SparseGraph uniform_forest(int n, Rng& rng) {
  if (n < 0 || n > kForestCap) throw CapExceeded("uniform_forest supports n <= " + std::to_string(kForestCap));
  SparseGraph g(n);
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = v;
  std::size_t offset = 0;
  while (offset < remaining.size()) {
    const int m = static_cast<int>(remaining.size() - offset);
    const int k = static_cast<int>(rng.pick_cumulative(forest_table().row(m))) + 1;
    // remaining[offset] is the distinguished vertex; choose k-1 companions.
    for (int i = 1; i < k; ++i) {
      const auto pos = offset + static_cast<std::size_t>(i);
      const auto pick = pos + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(remaining.size() - pos)));
      std::swap(remaining[pos], remaining[pick]);
    }
    add_uniform_tree(g, std::span<const int>(remaining).subspan(offset, static_cast<std::size_t>(k)), rng);
    offset += static_cast<std::size_t>(k);
  }
  return g;
}

SparseGraph uniform_forest(int n, std::uint64_t seed, std::uint64_t index) {
  Rng rng = Rng::for_draw(seed, index);
  return uniform_forest(n, rng);
}

const std::vector<std::uint64_t>& labelled_members(const GraphClass& c, int n) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<std::uint64_t>> cache;
  if (n < 1 || n > kCensusCap) {
    throw CapExceeded("enumerative sampling supports 1 <= n <= " + std::to_string(kCensusCap));
  }
  std::lock_guard lock(mu);
  auto key = std::make_pair(c.name(), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> members;
  for_each_labelled(n, 0, labelled_graph_count(n), [&](const Graph& g, std::uint64_t mask) {
    if (c.contains(g)) members.push_back(mask);
  });
  return cache.emplace(key, std::move(members)).first->second;
}

Graph uniform_enumerative(const GraphClass& c, int n, Rng& rng) {
  const auto& members = labelled_members(c, n);
  if (members.empty()) throw ContractError("class " + c.name() + " has no members of order " + std::to_string(n));
  return Graph::from_edge_mask(n, members[static_cast<std::size_t>(rng.below(members.size()))]);
}

Graph uniform_enumerative(const GraphClass& c, int n, std::uint64_t seed, std::uint64_t index) {
  Rng rng = Rng::for_draw(seed, index);
  return uniform_enumerative(c, n, rng);
}

DrawFn make_sampler(const GraphClass& c, int n) {
  if (c.name() == "forests") {
    forest_table().row(n);
    return [n](std::uint64_t seed, std::uint64_t index) { return uniform_forest(n, seed, index); };
  }
  if (c.name() == "trees") {
    return [n](std::uint64_t seed, std::uint64_t index) { return uniform_tree(n, seed, index); };
  }
  const auto& members = labelled_members(c, n);
  if (members.empty()) throw ContractError("class " + c.name() + " has no members of order " + std::to_string(n));
  return [&members, n](std::uint64_t seed, std::uint64_t index) {
    Rng rng = Rng::for_draw(seed, index);
    return SparseGraph::from_graph(Graph::from_edge_mask(n, members[static_cast<std::size_t>(rng.below(members.size()))]));
  };
}

}  // namespace pendant_lab
