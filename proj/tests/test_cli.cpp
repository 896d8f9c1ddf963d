#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "pendant_lab/cli.hpp"
#include "pendant_lab/iso.hpp"

using namespace pendant_lab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Compares against tests/golden/<name>; PENDANT_LAB_UPDATE_GOLDENS rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path p = fs::path(PENDANT_LAB_GOLDEN) / name;
  if (std::getenv("PENDANT_LAB_UPDATE_GOLDENS")) {
    std::ofstream(p, std::ios::binary) << actual;
  }
  REQUIRE_MESSAGE(fs::exists(p), p.string());
  CHECK_MESSAGE(slurp(p) == actual, "golden mismatch: " << name);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pendant_lab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("help text") {
  const auto top = run_cli({"--help"});
  CHECK(top.code == 0);
  check_golden("help.txt", top.out);
  for (const char* sub : {"census", "sample", "bp-sample", "pend", "class-check", "verify", "plot"}) {
    const auto r = run_cli({sub, "--help"});
    CHECK(r.code == 0);
    check_golden(std::string("help_") + sub + ".txt", r.out);
  }
}

TEST_CASE("documented examples") {
  const auto census = run_cli({"census", "--class", "forests", "--n", "5"});
  CHECK(census.code == 0);
  CHECK(census.out == "291\n");

  const auto lemmas = run_cli({"verify", "--suite", "exhaustive-lemmas", "--cap", "6"});
  CHECK(lemmas.code == 0);
  CHECK(lemmas.out.rfind("exhaustive-lemmas: pass", 0) == 0);

  const auto single = run_cli({"sample", "--class", "trees", "--n", "1"});
  CHECK(single.code == 0);
  CHECK(single.out == "1\n");
}

TEST_CASE("census ranges and formats") {
  const auto csv = run_cli({"census", "--class", "trees", "--n", "1..5", "--format", "csv"});
  CHECK(csv.out == "class,n,labelled,connected\ntrees,1,1,1\ntrees,2,1,1\ntrees,3,3,3\ntrees,4,16,16\ntrees,5,125,125\n");
  const auto json = run_cli({"census", "--class", "forests", "--n", "4", "--format", "json", "--shapes"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["schema"] == "pendant-lab/census/1");
  CHECK(j["labelled_count"] == "38");
  std::uint64_t total = 0;
  for (const auto& [hex, count] : j["tallies"].items()) total += count.get<std::uint64_t>();
  CHECK(total == 38);
}

TEST_CASE("census store") {
  const fs::path dir = scratch("store");
  fs::remove_all(dir);
  setenv("PENDANT_LAB_STORE", dir.c_str(), 1);
  CHECK(run_cli({"census", "--class", "forests", "--n", "5"}).out == "291\n");
  CHECK(run_cli({"census", "--class", "forests", "--n", "5"}).out == "291\n");
  unsetenv("PENDANT_LAB_STORE");
  const std::string stored = slurp(dir / "census.jsonl");
  CHECK(std::count(stored.begin(), stored.end(), '\n') == 1);
}

TEST_CASE("errors exit 2 with distinct messages") {
  const auto unknown = run_cli({"census", "--class", "nonsense", "--n", "3"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown class") != std::string::npos);

  const auto cap = run_cli({"census", "--class", "forests", "--n", "12"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("cap exceeded") != std::string::npos);

  const fs::path bad = scratch("bad.txt");
  std::ofstream(bad) << "3\n1 7\n";
  const fs::path h = scratch("k1.txt");
  std::ofstream(h) << "1\nroot 1\n";
  const auto malformed = run_cli({"pend", bad.string(), h.string()});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("malformed input") != std::string::npos);

  const auto missing = run_cli({"plot", scratch("absent.json").string()});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("missing input") != std::string::npos);

  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"census", "--bogus"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "no-such-suite"}).code == 2);
}

TEST_CASE("same argv gives identical output") {
  const std::vector<std::string> a = {"sample", "--class", "forests", "--n", "200", "--count", "50",
                                      "--stats", "frag,components,pend:K1,frag-shape", "--format", "csv",
                                      "--seed", "42", "--threads", "1"};
  std::vector<std::string> b = a;
  b.back() = "2";
  const auto first = run_cli(a);
  CHECK(first.code == 0);
  CHECK(first.out == run_cli(a).out);
  CHECK(first.out == run_cli(b).out);
  CHECK(std::count(first.out.begin(), first.out.end(), '\n') == 51);

  const auto kappa = run_cli({"sample", "--class", "forests", "--n", "1000", "--count", "20", "--seed", "42",
                              "--stats", "frag,kappa,pend:K1,components", "--format", "csv"});
  CHECK(kappa.code == 0);
  std::istringstream rows(kappa.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "index,frag,kappa,pend:K1,components");
  while (std::getline(rows, line)) {
    const auto last = line.rfind(',');
    const auto prev = line.rfind(',', last - 1);
    const auto kfield = line.substr(0, prev);
    CHECK(kfield.substr(kfield.rfind(',') + 1) == line.substr(last + 1));
  }

  const std::vector<std::string> v = {"verify", "--suite", "mean-frag", "--n", "80", "--samples", "300",
                                      "--format", "json"};
  CHECK(run_cli(v).out == run_cli(v).out);

  const std::vector<std::string> bp = {"bp-sample", "--count", "20", "--format", "json", "--seed", "3"};
  const auto r = run_cli(bp);
  CHECK(r.code == 0);
  CHECK(r.out == run_cli(bp).out);
}

TEST_CASE("verify exit status") {
  const auto tight = run_cli({"verify", "--suite", "pend-concentration", "--n", "100", "--samples", "200",
                              "--epsilon", "0.001"});
  CHECK(tight.code == 1);
  const auto degenerate = run_cli({"verify", "--suite", "pend-concentration", "--n", "3", "--samples", "0",
                                   "--graph", "P4"});
  CHECK(degenerate.code == 0);
  CHECK(degenerate.out.find("expected failure") != std::string::npos);
  const auto exact = run_cli({"verify", "--suite", "kappa-dominance", "--class", "planar", "--restrict", "planar",
                              "--n", "5", "--samples", "0", "--format", "json"});
  CHECK(exact.code == 0);
  CHECK(nlohmann::json::parse(exact.out)["scope"]["mode"] == "exact");
}

TEST_CASE("class-check exit status") {
  CHECK(run_cli({"class-check", "--class", "forests", "--n-max", "5"}).code == 0);
  const auto r = run_cli({"class-check", "--class", "edgeless", "--n-max", "4", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["ok"] == false);
  CHECK(run_cli({"class-check", "--class", "planar", "--property", "attachable", "--graph", "P3@1",
                 "--n-max", "4"})
            .code == 0);
  CHECK(run_cli({"class-check", "--class", "planar", "--property", "attachable", "--n-max", "4"}).code == 2);
}

TEST_CASE("pend lists appearances") {
  const fs::path g = scratch("p5.txt");
  std::ofstream(g) << "5\n1 2\n2 3\n3 4\n4 5\n";
  const fs::path h = scratch("k2.txt");
  std::ofstream(h) << "2\n1 2\nroot 1\n";
  const auto r = run_cli({"pend", g.string(), h.string()});
  CHECK(r.code == 0);
  const auto list = nlohmann::json::parse(r.out);
  CHECK(list.size() == static_cast<std::size_t>(oracle::pend_rooted(Graph::path(5), Graph::path(2), 0)));
  for (const auto& a : list) CHECK(a["vertices"].size() == 2);

  const auto v = run_cli({"pend", g.string(), h.string(), "--vertex", "--format", "csv"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("vertices,distinguished,shape\n", 0) == 0);
}

TEST_CASE("output file") {
  const fs::path out = scratch("census.jsonl");
  fs::remove(out);
  CHECK(run_cli({"census", "--class", "forests", "--n", "1..3", "--format", "json", "--out", out.string()}).out.empty());
  const std::string text = slurp(out);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("plot from fixture reports") {
  for (const char* name : {"connectivity", "tv", "pend"}) {
    const auto r = run_cli({"plot", std::string(PENDANT_LAB_FIXTURES) + "/reports/" + name + ".json"});
    CHECK(r.code == 0);
    check_golden(std::string(name) + ".svg", r.out);
  }
  const auto wrong = run_cli({"plot", "--kind", "tv", std::string(PENDANT_LAB_FIXTURES) + "/reports/pend.json"});
  CHECK(wrong.code == 2);
}
