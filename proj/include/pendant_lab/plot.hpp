#pragma once

// Static SVG charts rendered from verify report JSON. Output depends only on
// the input reports.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pendant_lab {

enum class ChartKind {
  // P(connected) against n, from forest-connectivity reports.
  Connectivity,
  // Histogram of pend(R_n, H)/n, from one pend-concentration report.
  PendHistogram,
  // Windowed TV against n, from frag-convergence reports.
  TvByN,
};

std::string chart_kind_name(ChartKind kind);
std::optional<ChartKind> parse_chart_kind(const std::string& name);
// The chart drawn for a report's suite; ContractError for other suites.
ChartKind chart_for(const nlohmann::json& report);

// ContractError when a report has the wrong schema or suite, or when no
// report is given.
std::string render_chart(ChartKind kind, const std::vector<nlohmann::json>& reports);

}  // namespace pendant_lab
