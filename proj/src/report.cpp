#include "pendant_lab/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace pendant_lab {

bool Statistic::passed() const {
  if (lo && (strict ? !(value > *lo) : !(value >= *lo))) return false;
  if (hi && (strict ? !(value < *hi) : !(value <= *hi))) return false;
  return true;
}

Statistic& VerifyReport::add(std::string name, double value, std::optional<double> lo,
                             std::optional<double> hi, bool strict) {
  statistics.push_back({std::move(name), value, lo, hi, strict, {}});
  return statistics.back();
}

Verdict VerifyReport::verdict() const {
  if (counterexample) return Verdict::Fail;
  bool any = false;
  for (const auto& s : statistics) {
    if (!s.bounded()) continue;
    any = true;
    if (!s.passed()) return Verdict::Fail;
  }
  return any ? Verdict::Pass : Verdict::Report;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Report:
      return "report";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kVerifySchema;
  j["suite"] = suite;
  j["claim"] = claim;
  j["scope"] = scope;
  j["verdict"] = verdict_name(verdict());
  j["expected_failure"] = expected_failure;
  auto& stats = j["statistics"] = nlohmann::json::array();
  for (const auto& s : statistics) {
    nlohmann::json e;
    e["name"] = s.name;
    e["value"] = s.value;
    e["lo"] = s.lo ? nlohmann::json(*s.lo) : nlohmann::json(nullptr);
    e["hi"] = s.hi ? nlohmann::json(*s.hi) : nlohmann::json(nullptr);
    e["strict"] = s.strict;
    e["passed"] = s.bounded() ? nlohmann::json(s.passed()) : nlohmann::json(nullptr);
    if (!s.note.empty()) e["note"] = s.note;
    stats.push_back(e);
  }
  j["counterexample"] = counterexample ? nlohmann::json(*counterexample) : nlohmann::json(nullptr);
  j["notes"] = notes;
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

std::string VerifyReport::to_table() const {
  std::ostringstream out;
  out << suite << ": " << verdict_name(verdict()) << (expected_failure ? " (expected failure)" : "") << '\n';
  if (!claim.empty()) out << "  claim: " << claim << '\n';
  out << "  scope: " << scope.dump() << '\n';
  std::size_t width = 9;
  std::size_t value_width = 5;
  for (const auto& s : statistics) {
    width = std::max(width, s.name.size());
    value_width = std::max(value_width, format_double(s.value).size());
  }
  out << "  " << std::left << std::setw(static_cast<int>(width)) << "statistic" << "  "
      << std::setw(static_cast<int>(value_width)) << "value" << "  bounds\n";
  for (const auto& s : statistics) {
    std::string bounds = "-";
    if (s.bounded()) {
      const std::string lt = s.strict ? " < " : " <= ";
      bounds = (s.lo ? format_double(*s.lo) + lt : std::string{}) + "x" +
               (s.hi ? lt + format_double(*s.hi) : std::string{});
      bounds += s.passed() ? "  ok" : "  FAIL";
    }
    out << "  " << std::setw(static_cast<int>(width)) << s.name << "  " << std::setw(static_cast<int>(value_width))
        << format_double(s.value) << "  " << bounds << '\n';
  }
  if (counterexample) out << "  counterexample:\n    " << *counterexample << '\n';
  for (const auto& n : notes) out << "  note: " << n << '\n';
  return out.str();
}

std::string VerifyReport::to_csv(bool header) const {
  std::ostringstream out;
  if (header) out << "suite,statistic,value,lo,hi,passed\n";
  for (const auto& s : statistics) {
    out << suite << ',' << s.name << ',' << format_double(s.value) << ','
        << (s.lo ? format_double(*s.lo) : "") << ',' << (s.hi ? format_double(*s.hi) : "") << ','
        << (s.bounded() ? (s.passed() ? "true" : "false") : "") << '\n';
  }
  return out.str();
}

}  // namespace pendant_lab
