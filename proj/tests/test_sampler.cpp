#include <cmath>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "pendant_lab/census.hpp"
#include "pendant_lab/enumerate.hpp"
#include "pendant_lab/error.hpp"
#include "pendant_lab/random.hpp"
#include "pendant_lab/sampler.hpp"

using namespace pendant_lab;

namespace {

std::uint64_t mask_of(const SparseGraph& g) { return g.to_small()->edge_mask(); }

// Largest |observed - expected| in units of the binomial standard deviation.
double max_z(const std::map<std::uint64_t, int>& counts, std::size_t cells, int draws) {
  const double p = 1.0 / static_cast<double>(cells);
  const double sd = std::sqrt(draws * p * (1 - p));
  double worst = 0.0;
  for (const auto& [k, c] : counts) worst = std::max(worst, std::abs(c - draws * p) / sd);
  return worst;
}

}  // namespace

TEST_CASE("random streams are fixed") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  Rng a = Rng::for_draw(42, 3);
  Rng b = Rng::for_draw(42, 3);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.below(7) < 7);
  }
}

TEST_CASE("poisson variates have the right mean") {
  Rng rng(5);
  for (double mean : {0.05, 0.36788, 2.5}) {
    double sum = 0;
    const int draws = 200000;
    for (int i = 0; i < draws; ++i) sum += rng.poisson(mean);
    CHECK(std::abs(sum / draws - mean) < 4 * std::sqrt(mean / draws));
  }
  CHECK(rng.poisson(0.0) == 0);
}

TEST_CASE("uniform_enumerative over all graphs on 3 vertices") {
  const GraphClass all = builtin("all");
  std::map<std::uint64_t, int> counts;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[uniform_enumerative(all, 3, 99, static_cast<std::uint64_t>(i)).edge_mask()];
  CHECK(counts.size() == 8);
  CHECK(max_z(counts, 8, draws) < 4.0);
}

TEST_CASE("uniform_enumerative over forests on 4 vertices") {
  const GraphClass forests = builtin("forests");
  std::map<std::uint64_t, int> counts;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[uniform_enumerative(forests, 4, 5, static_cast<std::uint64_t>(i)).edge_mask()];
  REQUIRE(counts.size() == 38);
  double chi2 = 0;
  const double e = draws / 38.0;
  for (const auto& [k, c] : counts) chi2 += (c - e) * (c - e) / e;
  // 37 degrees of freedom; the 0.999 quantile is about 69.
  CHECK(chi2 < 69.0);
  CHECK(uniform_enumerative(builtin("trees"), 2, 1).edge_mask() == 1);
  CHECK_THROWS_AS(uniform_enumerative(builtin("connected-even"), 3, 1), ContractError);
}

TEST_CASE("uniform_tree") {
  CHECK(uniform_tree(1, 3).order() == 1);
  CHECK(uniform_tree(2, 3).size() == 1);
  std::map<std::uint64_t, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[mask_of(uniform_tree(3, 8, static_cast<std::uint64_t>(i)))];
  CHECK(counts.size() == 3);
  CHECK(max_z(counts, 3, draws) < 4.0);

  // Leaf-count law on 5 vertices against all 125 labelled trees.
  std::map<int, double> exact;
  const auto trees = oracle::prufer_trees(5);
  for (std::uint64_t m : trees) {
    const Graph g = Graph::from_edge_mask(5, m);
    int leaves = 0;
    for (int v = 0; v < 5; ++v) leaves += g.degree(v) == 1;
    exact[leaves] += 1.0 / static_cast<double>(trees.size());
  }
  std::map<int, int> seen;
  const int n5 = 100000;
  for (int i = 0; i < n5; ++i) {
    const SparseGraph t = uniform_tree(5, 17, static_cast<std::uint64_t>(i));
    int leaves = 0;
    for (int v = 0; v < 5; ++v) leaves += t.degree(v) == 1;
    ++seen[leaves];
  }
  for (const auto& [k, p] : exact) {
    const double sd = std::sqrt(p * (1 - p) / n5);
    CHECK(std::abs(seen[k] / static_cast<double>(n5) - p) < 4 * sd);
  }

  const SparseGraph big = uniform_tree(1500, 2);
  CHECK(big.size() == 1499);
  CHECK(components(big).parts.size() == 1);
}

TEST_CASE("uniform_forest connectivity") {
  struct Case {
    int n;
    double p;
  };
  for (Case c : {Case{2, 0.5}, Case{4, 16.0 / 38.0}, Case{6, 1296.0 / 2932.0}}) {
    const int draws = 100000;
    int connected = 0;
    for (int i = 0; i < draws; ++i) connected += components(uniform_forest(c.n, 11, static_cast<std::uint64_t>(i))).parts.size() == 1;
    const double sd = std::sqrt(c.p * (1 - c.p) / draws);
    CHECK(std::abs(connected / static_cast<double>(draws) - c.p) < 3 * sd);
  }
}

TEST_CASE("uniform_forest matches the enumerative sampler") {
  for (int n : {3, 5, 7}) {
    const int draws = 100000;
    std::map<std::uint64_t, int> a;
    std::map<std::uint64_t, int> b;
    const GraphClass forests = builtin("forests");
    for (int i = 0; i < draws; ++i) {
      ++a[mask_of(uniform_forest(n, 21, static_cast<std::uint64_t>(i)))];
      ++b[uniform_enumerative(forests, n, 22, static_cast<std::uint64_t>(i)).edge_mask()];
    }
    // Compare the laws of the component-size profile, which has few cells.
    auto profile = [&](std::uint64_t mask) {
      std::vector<int> sizes;
      for (VertexSet s : pendant_lab::components(Graph::from_edge_mask(n, mask))) sizes.push_back(popcount(s));
      std::sort(sizes.begin(), sizes.end());
      return sizes;
    };
    std::map<std::vector<int>, double> pa;
    std::map<std::vector<int>, double> pb;
    for (const auto& [m, c] : a) pa[profile(m)] += c / static_cast<double>(draws);
    for (const auto& [m, c] : b) pb[profile(m)] += c / static_cast<double>(draws);
    double tv = 0;
    for (const auto& [k, p] : pa) tv += std::abs(p - pb[k]);
    for (const auto& [k, p] : pb)
      if (!pa.count(k)) tv += p;
    CHECK(tv / 2 <= 0.02);
    for (const auto& [m, c] : a) REQUIRE(oracle::acyclic(Graph::from_edge_mask(n, m)));
  }
  CHECK_THROWS_AS(uniform_forest(2001, 1), CapExceeded);
}

TEST_CASE("samplers are reproducible") {
  const auto draw = make_sampler(builtin("forests"), 300);
  CHECK(draw(7, 12).edges() == draw(7, 12).edges());
  CHECK(draw(7, 12).edges() != draw(7, 13).edges());
  const auto planar = make_sampler(builtin("planar"), 5);
  CHECK(planar(1, 1).edges() == planar(1, 1).edges());
}
