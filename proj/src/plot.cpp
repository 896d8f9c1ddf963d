#include "pendant_lab/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "pendant_lab/error.hpp"
#include "pendant_lab/report.hpp"

namespace pendant_lab {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

std::string fixed(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 2);
  std::string s(buf, end);
  return s == "-0.00" ? "0.00" : s;
}

std::string label(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 4);
  return {buf, end};
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0;
  double hi = 1;
};

// Smallest of 1, 2, 2.5, 5 times a power of ten that is >= x.
double nice_ceiling(double x) {
  if (x <= 0) return 1;
  const double p = std::pow(10.0, std::floor(std::log10(x)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (m * p >= x * (1 - 1e-12)) return m * p;
  }
  return 10 * p;
}

Range padded(double lo, double hi) {
  if (hi <= lo) return {lo - 0.5, hi + 0.5};
  return {lo, hi};
}

class Canvas {
 public:
  Canvas(std::string title, std::string x_label, std::string y_label, Range x, Range y)
      : x_(x), y_(y) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out_ << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            "font-size=\"15\">"
         << escape(title) << "</text>\n";
    axes(x_label, y_label);
  }

  double px(double x) const { return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y_.lo) / (y_.hi - y_.lo) * (kHeight - kTop - kBottom); }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& colour) {
    if (pts.size() > 1) {
      out_ << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        out_ << (i ? " " : "") << fixed(px(pts[i].first)) << ',' << fixed(py(pts[i].second));
      }
      out_ << "\"/>\n";
    }
    for (const auto& [x, y] : pts) {
      out_ << "<circle cx=\"" << fixed(px(x)) << "\" cy=\"" << fixed(py(y)) << "\" r=\"3\" fill=\"" << colour
           << "\"/>\n";
    }
  }

  void hline(double y, const std::string& colour, const std::string& text) {
    out_ << "<line x1=\"" << fixed(px(x_.lo)) << "\" y1=\"" << fixed(py(y)) << "\" x2=\"" << fixed(px(x_.hi))
         << "\" y2=\"" << fixed(py(y)) << "\" stroke=\"" << colour << "\" stroke-dasharray=\"6 4\"/>\n";
    text_at(px(x_.hi) - 4, py(y) - 4, text, "end", colour);
  }

  void vline(double x, const std::string& colour, const std::string& text) {
    out_ << "<line x1=\"" << fixed(px(x)) << "\" y1=\"" << fixed(py(y_.lo)) << "\" x2=\"" << fixed(px(x))
         << "\" y2=\"" << fixed(py(y_.hi)) << "\" stroke=\"" << colour << "\" stroke-dasharray=\"6 4\"/>\n";
    if (!text.empty()) text_at(px(x) + 4, py(y_.hi) + 12, text, "start", colour);
  }

  void bar(double x0, double x1, double y, const std::string& colour) {
    out_ << "<rect x=\"" << fixed(px(x0)) << "\" y=\"" << fixed(py(y)) << "\" width=\"" << fixed(px(x1) - px(x0))
         << "\" height=\"" << fixed(py(y_.lo) - py(y)) << "\" fill=\"" << colour << "\" stroke=\"white\"/>\n";
  }

  void legend(int row, const std::string& colour, const std::string& text) {
    const double y = kTop + 8 + 16 * row;
    out_ << "<rect x=\"" << kLeft + 10 << "\" y=\"" << y - 8 << "\" width=\"10\" height=\"10\" fill=\"" << colour
         << "\"/>\n";
    text_at(kLeft + 26, y + 1, text, "start", "black");
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  void text_at(double x, double y, const std::string& text, const char* anchor, const std::string& colour) {
    out_ << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" text-anchor=\"" << anchor
         << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << colour << "\">" << escape(text)
         << "</text>\n";
  }

  void axes(const std::string& x_label, const std::string& y_label) {
    const double x0 = px(x_.lo);
    const double x1 = px(x_.hi);
    const double y0 = py(y_.lo);
    const double y1 = py(y_.hi);
    out_ << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x1) << "\" y2=\""
         << fixed(y0) << "\" stroke=\"black\"/>\n";
    out_ << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x0) << "\" y2=\""
         << fixed(y1) << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
      const double xv = x_.lo + (x_.hi - x_.lo) * i / 4;
      const double yv = y_.lo + (y_.hi - y_.lo) * i / 4;
      text_at(px(xv), y0 + 16, label(xv), "middle", "black");
      text_at(x0 - 6, py(yv) + 4, label(yv), "end", "black");
    }
    text_at((x0 + x1) / 2, kHeight - 12, x_label, "middle", "black");
    out_ << "<text transform=\"translate(16," << fixed((y0 + y1) / 2)
         << ") rotate(-90)\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << escape(y_label)
         << "</text>\n";
  }

  Range x_;
  Range y_;
  std::ostringstream out_;
};

std::optional<double> statistic(const nlohmann::json& report, const std::string& name) {
  for (const auto& s : report.at("statistics")) {
    if (s.at("name") == name) return s.at("value").get<double>();
  }
  return std::nullopt;
}

std::optional<double> statistic_hi(const nlohmann::json& report, const std::string& name) {
  for (const auto& s : report.at("statistics")) {
    if (s.at("name") == name && s.at("hi").is_number()) return s.at("hi").get<double>();
  }
  return std::nullopt;
}

void check_reports(ChartKind kind, const std::vector<nlohmann::json>& reports) {
  if (reports.empty()) throw ContractError("no reports to plot");
  for (const auto& r : reports) {
    if (!r.is_object() || r.value("schema", "") != kVerifySchema) {
      throw ContractError(std::string("not a report of schema ") + kVerifySchema);
    }
    if (chart_for(r) != kind) {
      throw ContractError("report of suite " + r.value("suite", "") + " cannot be drawn as " + chart_kind_name(kind));
    }
  }
  if (kind == ChartKind::PendHistogram && reports.size() != 1) {
    throw ContractError("a histogram is drawn from exactly one report");
  }
}

// Points (n, value) sorted by n; later reports win on equal n.
std::vector<std::pair<double, double>> series(const std::vector<nlohmann::json>& reports, const std::string& name) {
  std::map<double, double> by_n;
  for (const auto& r : reports) {
    if (auto v = statistic(r, name)) by_n[r.at("scope").at("n").get<double>()] = *v;
  }
  return {by_n.begin(), by_n.end()};
}

Range x_range(const std::vector<nlohmann::json>& reports) {
  double lo = 0;
  double hi = 0;
  bool first = true;
  for (const auto& r : reports) {
    const double n = r.at("scope").at("n").get<double>();
    lo = first ? n : std::min(lo, n);
    hi = first ? n : std::max(hi, n);
    first = false;
  }
  return padded(lo, hi);
}

std::string connectivity(const std::vector<nlohmann::json>& reports) {
  Canvas c("P(R_n connected), uniform labelled forests", "n", "probability", x_range(reports), {0, 1});
  const auto exact = series(reports, "exact_ratio");
  const auto sampled = series(reports, "sampled_fraction");
  if (reports.front().contains("extra") && reports.front()["extra"].contains("limit")) {
    c.hline(reports.front()["extra"]["limit"].get<double>(), "#888888", "limit");
  }
  c.polyline(exact, "#1f77b4");
  c.legend(0, "#1f77b4", "exact");
  if (!sampled.empty()) {
    c.polyline(sampled, "#d62728");
    c.legend(1, "#d62728", "sampled");
  }
  return c.finish();
}

std::string tv_by_n(const std::vector<nlohmann::json>& reports) {
  const auto tv = series(reports, "tv");
  double top = 0;
  for (const auto& [n, v] : tv) top = std::max(top, v);
  std::optional<double> threshold;
  for (const auto& r : reports) {
    if (auto h = statistic_hi(r, "tv")) threshold = h;
  }
  if (threshold) top = std::max(top, *threshold);
  Canvas c("Windowed total variation to the Boltzmann Poisson law", "n", "TV", x_range(reports),
           {0, nice_ceiling(top * 1.05)});
  if (threshold) c.hline(*threshold, "#888888", "threshold " + label(*threshold));
  c.polyline(tv, "#2ca02c");
  return c.finish();
}

std::string pend_histogram(const nlohmann::json& report) {
  const auto& h = report.at("extra").at("histogram");
  const double lo = h.at("lo").get<double>();
  const double width = h.at("width").get<double>();
  const auto weights = h.at("weights").get<std::vector<double>>();
  const double alpha = statistic(report, "alpha").value_or(0.0);
  const double eps = report.at("scope").value("epsilon", 0.0);
  double top = 0;
  for (double w : weights) top = std::max(top, w);
  double x_lo = std::min(lo, (1 - eps) * alpha);
  double x_hi = std::max(lo + width * static_cast<double>(weights.size()), (1 + eps) * alpha);
  const Range xr = padded(x_lo, x_hi);
  Canvas c("pend(R_n, H)/n, n = " + report.at("scope").at("n").dump(), "pend/n", "fraction of draws", xr,
           {0, nice_ceiling(top * 1.05)});
  for (std::size_t i = 0; i < weights.size(); ++i) {
    c.bar(lo + width * static_cast<double>(i), lo + width * static_cast<double>(i + 1), weights[i], "#9467bd");
  }
  c.vline(alpha, "#d62728", "alpha " + label(alpha));
  c.vline((1 - eps) * alpha, "#888888", "");
  c.vline((1 + eps) * alpha, "#888888", "");
  return c.finish();
}

}  // namespace

std::string chart_kind_name(ChartKind kind) {
  switch (kind) {
    case ChartKind::Connectivity: return "connectivity";
    case ChartKind::PendHistogram: return "pend-histogram";
    case ChartKind::TvByN: return "tv";
  }
  return "";
}

std::optional<ChartKind> parse_chart_kind(const std::string& name) {
  for (ChartKind k : {ChartKind::Connectivity, ChartKind::PendHistogram, ChartKind::TvByN}) {
    if (chart_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

ChartKind chart_for(const nlohmann::json& report) {
  const std::string suite = report.is_object() ? report.value("suite", "") : "";
  if (suite == "forest-connectivity") return ChartKind::Connectivity;
  if (suite == "pend-concentration") return ChartKind::PendHistogram;
  if (suite == "frag-convergence") return ChartKind::TvByN;
  throw ContractError("no chart for suite '" + suite + "'");
}

std::string render_chart(ChartKind kind, const std::vector<nlohmann::json>& reports) {
  check_reports(kind, reports);
  try {
    switch (kind) {
      case ChartKind::Connectivity: return connectivity(reports);
      case ChartKind::PendHistogram: return pend_histogram(reports.front());
      case ChartKind::TvByN: return tv_by_n(reports);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed report: ") + e.what());
  }
  return "";
}

}  // namespace pendant_lab
