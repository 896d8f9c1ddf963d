#pragma once

// Exhaustive labelled census of small classes, the unlabelled connected
// census with automorphism counts, exact forest counts, growth sequences and
// partial EGF sums.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pendant_lab/bigint.hpp"
#include "pendant_lab/classes.hpp"
#include "pendant_lab/iso.hpp"
#include "json.hpp"

namespace pendant_lab {

inline constexpr int kCensusCap = 8;
inline constexpr const char* kCensusSchema = "pendant-lab/census/1";

struct CensusRecord {
  std::string class_name;
  int n = 0;
  BigInt labelled_count = 0;
  BigInt connected_count = 0;
  // Labelled members per unlabelled shape; empty unless shapes were requested.
  std::map<CanonicalForm, std::uint64_t> tallies;
  bool has_tallies = false;

  nlohmann::json to_json() const;
  static CensusRecord from_json(const nlohmann::json& j);
};

struct CensusOptions {
  bool shapes = true;
  int threads = 1;
  int cap = kCensusCap;
};

// Iterates every labelled graph on n vertices as an edge-mask integer.
CensusRecord count_labelled(const GraphClass& c, int n, const CensusOptions& options = {});

struct UnlabelledEntry {
  CanonicalForm form;
  int order = 0;
  std::uint64_t aut = 0;

  Graph graph() const { return form.to_graph(); }
};

// Connected members sorted by order, then canonical form.
using UnlabelledList = std::vector<UnlabelledEntry>;
UnlabelledList list_unlabelled_connected(const GraphClass& c, int max_order);

// F_n, the number of labelled forests on n vertices (n <= 2000).
BigInt forest_count_exact(int n);
// k^(k-2) for k >= 1 (1 for k = 1).
BigInt tree_count_exact(int k);

std::vector<double> growth_sequence(const GraphClass& c, int n_max, const CensusOptions& options = {});

// Sum over the first k entries of rho^{v(H)} / aut(H).
double sigma_k(const UnlabelledList& list, double rho, std::size_t k);
// Number of list entries of order <= max_order.
std::size_t prefix_through_order(const UnlabelledList& list, int max_order);

// Line-delimited JSON store of census records keyed by (class, n, version).
class CensusStore {
 public:
  explicit CensusStore(std::filesystem::path file);
  // Directory from PENDANT_LAB_STORE, if set.
  static std::optional<CensusStore> from_environment();

  std::optional<CensusRecord> find(const std::string& class_name, int n) const;
  void append(const CensusRecord& record) const;
  const std::filesystem::path& path() const { return file_; }

 private:
  std::filesystem::path file_;
};

}  // namespace pendant_lab
