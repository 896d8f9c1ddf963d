#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "pendant_lab/census.hpp"
#include "pendant_lab/enumerate.hpp"
#include "pendant_lab/error.hpp"

using namespace pendant_lab;

namespace {

nlohmann::json fixture() {
  std::ifstream in(std::string(PENDANT_LAB_FIXTURES) + "/forest_counts.json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("fixture agrees with the acyclicity scan") {
  const auto fx = fixture();
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < labelled_graph_count(n); ++m) count += oracle::acyclic(Graph::from_edge_mask(n, m));
    CHECK(count == fx["forests"][n - 1].get<std::uint64_t>());
  }
}

TEST_CASE("labelled census of forests and trees") {
  const auto fx = fixture();
  for (int n = 1; n <= 7; ++n) {
    const auto rec = count_labelled(builtin("forests"), n);
    CHECK(rec.labelled_count == fx["forests"][n - 1].get<std::uint64_t>());
    CHECK(rec.connected_count == fx["trees"][n - 1].get<std::uint64_t>());
    const auto trees = count_labelled(builtin("trees"), n, {.shapes = false});
    CHECK(trees.labelled_count == BigInt(oracle::prufer_trees(n).size()));
    CHECK(trees.labelled_count == tree_count_exact(n));
    CHECK(forest_count_exact(n) == rec.labelled_count);
  }
  CHECK(count_labelled(builtin("all"), 4).labelled_count == 64);
}

TEST_CASE("tallies sum to the labelled count and respect k!/aut") {
  for (const char* name : {"forests", "planar", "series-parallel", "outerplanar", "all"}) {
    const GraphClass c = builtin(name);
    for (int n = 1; n <= 6; ++n) {
      const auto rec = count_labelled(c, n);
      BigInt sum = 0;
      for (const auto& [form, t] : rec.tallies) {
        sum += t;
        REQUIRE(BigInt(t) * aut(form.to_graph()) == factorial(n));
      }
      REQUIRE(sum == rec.labelled_count);
      REQUIRE(rec.connected_count <= rec.labelled_count);

      BigInt from_list = 0;
      for (const auto& e : list_unlabelled_connected(c, n)) {
        if (e.order == n) from_list += factorial(n) / e.aut;
      }
      REQUIRE(from_list == rec.connected_count);
    }
  }
}

TEST_CASE("thread count does not change the census") {
  const auto one = count_labelled(builtin("planar"), 6, {.threads = 1});
  const auto four = count_labelled(builtin("planar"), 6, {.threads = 4});
  CHECK(one.to_json() == four.to_json());
}

TEST_CASE("census cap") {
  CHECK_THROWS_AS(count_labelled(builtin("all"), 9), CapExceeded);
  CHECK_THROWS_AS(list_unlabelled_connected(builtin("all"), 9), CapExceeded);
}

TEST_CASE("unlabelled tree census") {
  const auto three = list_unlabelled_connected(builtin("trees"), 3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].graph() == Graph(1));
  CHECK(is_isomorphic(three[1].graph(), Graph::path(2)));
  CHECK(is_isomorphic(three[2].graph(), Graph::path(3)));
  const auto four = list_unlabelled_connected(builtin("trees"), 4);
  REQUIRE(four.size() == 5);
  CHECK(four[3].order == 4);
  CHECK(four[4].order == 4);
  std::vector<std::uint64_t> auts = {four[3].aut, four[4].aut};
  std::sort(auts.begin(), auts.end());
  CHECK(auts == std::vector<std::uint64_t>{2, 6});
}

TEST_CASE("forest counts and the connectivity ratio") {
  CHECK(forest_count_exact(0) == 1);
  CHECK(forest_count_exact(3) == 7);
  CHECK(forest_count_exact(6) == 2932);
  // The ratio F_n / n^(n-2) peaks at n = 4 and then decreases toward e^(1/2).
  auto ratio = [](int n) { return std::exp(log_big(forest_count_exact(n)) - log_big(tree_count_exact(n))); };
  CHECK(ratio(4) == doctest::Approx(38.0 / 16.0));
  CHECK(ratio(3) < ratio(4));
  double previous = ratio(4);
  for (int n = 5; n <= 1000; n += n < 50 ? 1 : 95) {
    const double r = ratio(n);
    REQUIRE(r < previous);
    REQUIRE(r > std::exp(0.5));
    previous = r;
  }
  CHECK(previous - std::exp(0.5) < 0.01);
  CHECK_THROWS_AS(forest_count_exact(2001), CapExceeded);
}

TEST_CASE("sigma_k partial sums") {
  const double rho = std::exp(-1.0);
  const auto trees = list_unlabelled_connected(builtin("trees"), 8);
  CHECK(sigma_k(trees, rho, prefix_through_order(trees, 1)) == doctest::Approx(0.36788).epsilon(1e-4));
  CHECK(sigma_k(trees, rho, prefix_through_order(trees, 2)) == doctest::Approx(0.43555).epsilon(1e-4));
  double last = 0.0;
  for (std::size_t k = 0; k <= trees.size(); ++k) {
    const double s = sigma_k(trees, rho, k);
    CHECK(s >= last);
    CHECK(s <= 0.5);
    last = s;
  }
}

TEST_CASE("growth sequences") {
  const auto forests = growth_sequence(builtin("forests"), 7);
  REQUIRE(forests.size() == 7);
  for (double x : forests) CHECK(x < std::exp(1.0));
  const auto edgeless = growth_sequence(builtin("edgeless"), 6);
  for (std::size_t i = 1; i < edgeless.size(); ++i) CHECK(edgeless[i] < edgeless[i - 1]);
}

TEST_CASE("census store round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "pendant_lab_store_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CensusStore store(dir / "census.jsonl");
  CHECK_FALSE(store.find("forests", 4).has_value());
  const auto rec = count_labelled(builtin("forests"), 4);
  store.append(rec);
  const auto back = store.find("forests", 4);
  REQUIRE(back.has_value());
  CHECK(back->labelled_count == 38);
  CHECK(back->tallies == rec.tallies);
  std::filesystem::remove_all(dir);
}
