#pragma once

// Structured outcome of a verification suite or statistical test.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pendant_lab {

inline constexpr const char* kVerifySchema = "pendant-lab/verify/1";

// A measured value with optional acceptance bounds. Statistics without
// bounds are reported and take no part in the verdict.
struct Statistic {
  std::string name;
  double value = 0.0;
  std::optional<double> lo;
  std::optional<double> hi;
  // Strict bounds exclude equality.
  bool strict = false;
  std::string note;

  bool bounded() const { return lo.has_value() || hi.has_value(); }
  bool passed() const;
};

enum class Verdict { Pass, Fail, Report };

struct VerifyReport {
  std::string suite;
  // The finite-n statement actually tested.
  std::string claim;
  nlohmann::json scope = nlohmann::json::object();
  std::vector<Statistic> statistics;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;
  // Set when failure is the designed outcome (degenerate inputs).
  bool expected_failure = false;
  nlohmann::json extra = nlohmann::json::object();

  Statistic& add(std::string name, double value, std::optional<double> lo = std::nullopt,
                 std::optional<double> hi = std::nullopt, bool strict = false);
  // Fail when a counterexample exists or any bounded statistic misses its
  // bounds; Report when nothing is bounded.
  Verdict verdict() const;
  bool ok() const { return verdict() != Verdict::Fail; }
  // Exit status for the CLI: failure counts only when it was not expected.
  bool as_expected() const { return ok() || expected_failure; }

  nlohmann::json to_json() const;
  std::string to_table() const;
  // One row per statistic: suite,statistic,value,lo,hi,passed.
  std::string to_csv(bool header = true) const;
};

std::string verdict_name(Verdict v);
// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace pendant_lab
