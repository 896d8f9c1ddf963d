#include "pendant_lab/census.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>

#include <gmp.h>

#include "pendant_lab/enumerate.hpp"
#include "pendant_lab/error.hpp"
#include "pendant_lab/parallel.hpp"

namespace pendant_lab {

double log_big(const BigInt& x) {
  if (x <= 0) throw ContractError("log_big of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.backend().data());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

nlohmann::json CensusRecord::to_json() const {
  nlohmann::json j;
  j["schema"] = kCensusSchema;
  j["class"] = class_name;
  j["n"] = n;
  j["code_version"] = PENDANT_LAB_VERSION;
  j["labelled_count"] = labelled_count.str();
  j["connected_count"] = connected_count.str();
  if (has_tallies) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [form, count] : tallies) t[form.to_hex()] = count;
    j["tallies"] = t;
  }
  return j;
}

CensusRecord CensusRecord::from_json(const nlohmann::json& j) {
  CensusRecord r;
  try {
    r.class_name = j.at("class").get<std::string>();
    r.n = j.at("n").get<int>();
    r.labelled_count = BigInt(j.at("labelled_count").get<std::string>());
    r.connected_count = BigInt(j.at("connected_count").get<std::string>());
    if (j.contains("tallies")) {
      r.has_tallies = true;
      for (const auto& [hex, count] : j.at("tallies").items()) {
        r.tallies[CanonicalForm::from_hex(hex)] = count.get<std::uint64_t>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad census record: ") + e.what());
  }
  return r;
}

CensusRecord count_labelled(const GraphClass& c, int n, const CensusOptions& options) {
  if (n < 1) throw ContractError("census order must be at least 1");
  if (n > options.cap || n > 11) {
    throw CapExceeded("census order " + std::to_string(n) + " exceeds cap " + std::to_string(options.cap));
  }
  struct Shard {
    std::uint64_t members = 0;
    std::uint64_t connected = 0;
    std::map<CanonicalForm, std::uint64_t> tallies;
  };
  const int threads = resolve_threads(options.threads);
  std::vector<Shard> shards(static_cast<std::size_t>(threads));
  parallel_shards(labelled_graph_count(n), threads, [&](std::uint64_t begin, std::uint64_t end, int w) {
    Shard& s = shards[static_cast<std::size_t>(w)];
    for_each_labelled(n, begin, end, [&](const Graph& g, std::uint64_t) {
      if (!c.contains(g)) return;
      ++s.members;
      if (is_connected(g)) ++s.connected;
      if (options.shapes) ++s.tallies[canonical_form(g)];
    });
  });
  CensusRecord r;
  r.class_name = c.name();
  r.n = n;
  r.has_tallies = options.shapes;
  for (const Shard& s : shards) {
    r.labelled_count += s.members;
    r.connected_count += s.connected;
    for (const auto& [form, count] : s.tallies) r.tallies[form] += count;
  }
  return r;
}

UnlabelledList list_unlabelled_connected(const GraphClass& c, int max_order) {
  if (max_order > kCensusCap) {
    throw CapExceeded("unlabelled census order " + std::to_string(max_order) + " exceeds cap " +
                      std::to_string(kCensusCap));
  }
  UnlabelledList out;
  for (int k = 1; k <= max_order; ++k) {
    for (const Graph& g : unlabelled_connected_graphs(k)) {
      if (!c.contains(g)) continue;
      const CanonicalResult r = canonicalize(g);
      out.push_back({r.form, k, r.automorphisms});
    }
  }
  // unlabelled_graphs is sorted by canonical form within each order.
  return out;
}

BigInt tree_count_exact(int k) {
  if (k < 1) throw ContractError("tree count needs k >= 1");
  if (k <= 2) return 1;
  BigInt out;
  mpz_ui_pow_ui(out.backend().data(), static_cast<unsigned long>(k), static_cast<unsigned long>(k - 2));
  return out;
}

BigInt forest_count_exact(int n) {
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};
  static std::vector<BigInt> trees{BigInt(0)};
  if (n < 0 || n > 2000) throw CapExceeded("forest_count_exact supports 0 <= n <= 2000");
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    trees.push_back(tree_count_exact(m));
    // The component containing a fixed vertex has order k.
    BigInt total = 0;
    BigInt binom = 1;  // C(m-1, k-1)
    for (int k = 1; k <= m; ++k) {
      total += binom * trees[static_cast<std::size_t>(k)] * table[static_cast<std::size_t>(m - k)];
      binom *= (m - k);
      binom /= k;
    }
    table.push_back(total);
  }
  return table[static_cast<std::size_t>(n)];
}

std::vector<double> growth_sequence(const GraphClass& c, int n_max, const CensusOptions& options) {
  std::vector<double> out;
  CensusOptions counting = options;
  counting.shapes = false;
  for (int n = 1; n <= n_max; ++n) {
    const BigInt count = count_labelled(c, n, counting).labelled_count;
    if (count == 0) {
      out.push_back(0.0);
      continue;
    }
    out.push_back(std::exp((log_big(count) - std::lgamma(n + 1.0)) / n));
  }
  return out;
}

double sigma_k(const UnlabelledList& list, double rho, std::size_t k) {
  if (k > list.size()) throw ContractError("sigma_k: k exceeds the census length");
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    total += std::pow(rho, list[i].order) / static_cast<double>(list[i].aut);
  }
  return total;
}

std::size_t prefix_through_order(const UnlabelledList& list, int max_order) {
  std::size_t k = 0;
  while (k < list.size() && list[k].order <= max_order) ++k;
  return k;
}

CensusStore::CensusStore(std::filesystem::path file) : file_(std::move(file)) {}

std::optional<CensusStore> CensusStore::from_environment() {
  const char* dir = std::getenv("PENDANT_LAB_STORE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::filesystem::create_directories(dir);
  return CensusStore(std::filesystem::path(dir) / "census.jsonl");
}

std::optional<CensusRecord> CensusStore::find(const std::string& class_name, int n) const {
  std::ifstream in(file_);
  std::string line;
  std::optional<CensusRecord> found;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    if (j.value("class", "") == class_name && j.value("n", -1) == n &&
        j.value("code_version", "") == PENDANT_LAB_VERSION) {
      found = CensusRecord::from_json(j);
    }
  }
  return found;
}

void CensusStore::append(const CensusRecord& record) const {
  std::ofstream out(file_, std::ios::app);
  if (!out) throw Error("cannot open census store " + file_.string());
  out << record.to_json().dump() << '\n';
}

}  // namespace pendant_lab
