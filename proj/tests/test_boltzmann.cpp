#include <cmath>
#include <map>

#include "doctest.h"
#include "pendant_lab/boltzmann.hpp"
#include "pendant_lab/census.hpp"
#include "pendant_lab/pendant.hpp"

using namespace pendant_lab;

namespace {

const double kRho = std::exp(-1.0);

}  // namespace

TEST_CASE("mu and alpha") {
  CHECK(alpha_rooted(RootedGraph(Graph(1), 0), kRho) == doctest::Approx(0.36788).epsilon(1e-4));
  CHECK(alpha_unrooted(Graph::path(2), kRho) == doctest::Approx(0.13534).epsilon(1e-4));
  CHECK(alpha_rooted(RootedGraph(Graph::path(3), 0), kRho) == doctest::Approx(0.04979).epsilon(1e-3));
  CHECK(mu(2, 2, kRho) == doctest::Approx(std::exp(-2.0) / 2));
}

TEST_CASE("alpha orbit sums") {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& e : list_unlabelled_connected(builtin("connected"), k)) {
      const Graph h = e.graph();
      double sum = 0;
      for (VertexSet o : root_orbits(h)) sum += alpha_rooted(RootedGraph(h, lowest(o)), kRho);
      REQUIRE(sum == doctest::Approx(alpha_unrooted(h, kRho)).epsilon(1e-12));
    }
  }
}

TEST_CASE("tree specs") {
  const auto spec = make_tree_bp_spec(kRho, 8, 60);
  CHECK(spec.shapes.size() == 48);
  CHECK(std::abs(spec.sigma - 0.5) < 1e-3);
  REQUIRE(spec.tail_bound.has_value());
  CHECK(0.5 - spec.sigma <= *spec.tail_bound);
  const auto m = spec.order_mass();
  for (int k = 1; k <= 60; ++k) {
    const double expected = std::exp((k - 2) * std::log(k) - k - std::lgamma(k + 1.0));
    REQUIRE(m[static_cast<std::size_t>(k)] == doctest::Approx(expected).epsilon(1e-9));
  }
  const auto plain = make_bp_spec(list_unlabelled_connected(builtin("trees"), 6), kRho, "trees");
  CHECK_FALSE(plain.tail_bound.has_value());
  CHECK(plain.tail_note.find("uncertified") == 0);
}

TEST_CASE("order distribution matches the forest-count closed form") {
  const auto spec = make_tree_bp_spec(kRho, 8, 2000);
  const auto p = bp_order_distribution(spec, 12);
  for (int k = 0; k <= 12; ++k) {
    const double closed = std::exp(-spec.sigma + log_big(forest_count_exact(k)) - k - std::lgamma(k + 1.0));
    REQUIRE(p[static_cast<std::size_t>(k)] == doctest::Approx(closed).epsilon(1e-9));
  }
  CHECK(p[0] == doctest::Approx(std::exp(-0.5)).epsilon(1e-4));
  CHECK(p[1] == doctest::Approx(std::exp(-0.5) * kRho).epsilon(1e-4));
}

TEST_CASE("probability of single fragments") {
  const auto spec = make_tree_bp_spec(kRho, 8, 60);
  Fragment empty;
  CHECK(bp_probability(spec, empty) == doctest::Approx(std::exp(-spec.sigma)));
  Fragment k1;
  k1.parts = {canonical_form(Graph(1))};
  k1.order = 1;
  CHECK(bp_probability(spec, k1) == doctest::Approx(0.2231).epsilon(1e-3));
  Fragment tri;
  tri.parts = {canonical_form(Graph::cycle(3))};
  tri.order = 3;
  CHECK(bp_probability(spec, tri) == 0.0);
  Fragment two;
  two.parts = {canonical_form(Graph(1)), canonical_form(Graph(1))};
  two.order = 2;
  CHECK(bp_probability(spec, two) == doctest::Approx(std::exp(-spec.sigma) * kRho * kRho / 2));
}

TEST_CASE("bp samples follow the product law") {
  const auto spec = make_tree_bp_spec(kRho, 8, 60);
  const int draws = 200000;
  std::map<CanonicalForm, double> counts;
  int empty = 0;
  for (int i = 0; i < draws; ++i) {
    const Fragment f = bp_sample(spec, 3, static_cast<std::uint64_t>(i));
    empty += f.empty();
    for (const auto& p : f.parts) counts[p] += 1;
  }
  const double pe = std::exp(-spec.sigma);
  CHECK(std::abs(empty / static_cast<double>(draws) - pe) < 4 * std::sqrt(pe * (1 - pe) / draws));
  for (const auto& s : spec.shapes) {
    const double mean = counts[s.form] / draws;
    CHECK(std::abs(mean - s.mu) < 4 * std::sqrt(s.mu / draws) + 1e-12);
  }
  CHECK(bp_sample(spec, 9, 4) == bp_sample(spec, 9, 4));
}
