#include "pendant_lab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pendant_lab/boltzmann.hpp"
#include "pendant_lab/census.hpp"
#include "pendant_lab/classes.hpp"
#include "pendant_lab/error.hpp"
#include "pendant_lab/parallel.hpp"
#include "pendant_lab/pendant.hpp"
#include "pendant_lab/plot.hpp"
#include "pendant_lab/sampler.hpp"
#include "pendant_lab/verify.hpp"

namespace pendant_lab::cli {

namespace {

constexpr const char* kClassCheckSchema = "pendant-lab/class-check/1";
constexpr const char* kSampleSchema = "pendant-lab/sample/1";
constexpr std::uint64_t kBlock = 4096;

struct Flags {
  RunConfig cfg;
  std::string format;
  std::string n_text;
  std::string stats;
  bool shapes = false;
  bool vertex = false;
  std::string rho;
  int max_order = 7;
  std::string property = "bridge-addable";
  std::string h;
  int n_max = 6;
  int relabellings = 3;
  std::string suite;
  int cap = 6;
  int wide_cap = 7;
  std::string restrict_to = "all";
  double epsilon = 0.05;
  double budget = 0.01;
  int window = 10;
  std::string tv_threshold = "0.02";
  std::string empty_tolerance = "none";
  std::string mean_tolerance = "none";
  std::string limit_tolerance = "none";
  std::string sigma_target = "auto";
  std::string mean_lo = "none";
  double mean_hi = 2.0;
  std::string cycle_cap = "inf";
  std::string kind;
  std::vector<std::string> files;
  std::string verify_class = "forests";
  std::uint64_t verify_samples = 10000;
};

std::optional<double> optional_number(const std::string& text, const std::string& flag) {
  if (text == "none") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(flag + " expects a number or 'none', got '" + text + "'");
}

Format format_for(const Flags& f, Format fallback) {
  if (f.format.empty()) return fallback;
  if (f.format == "json") return Format::Json;
  if (f.format == "csv") return Format::Csv;
  return Format::Table;
}

// Writes to --out when given, otherwise to the command's output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error("cannot open output file " + path);
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("missing input: " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph graph_argument(const std::string& text) {
  if (std::filesystem::exists(text)) return parse_graph(read_file(text));
  return named_graph(text);
}

// A rooted-graph file, or <name>@<root> with a 1-based root.
RootedGraph rooted_argument(const std::string& text) {
  if (std::filesystem::exists(text)) return parse_rooted_graph(read_file(text));
  const auto at = text.rfind('@');
  if (at == std::string::npos) throw ParseError("rooted graph must be a file or <name>@<root>: " + text);
  int root = 0;
  try {
    root = std::stoi(text.substr(at + 1));
  } catch (const std::exception&) {
    throw ParseError("bad root in " + text);
  }
  const Graph g = named_graph(text.substr(0, at));
  if (root < 1 || root > g.order()) throw ContractError("root out of range in " + text);
  return RootedGraph(g, root - 1);
}

std::vector<int> one_based(VertexSet s) {
  std::vector<int> out;
  for_each_vertex(s, [&](Vertex v) { out.push_back(v + 1); });
  return out;
}

std::string join(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::pair<int, int> order_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("--n expects an order or a range a..b, got '" + text + "'");
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = number(text);
    return {n, n};
  }
  const int a = number(text.substr(0, dots));
  const int b = number(text.substr(dots + 2));
  if (a > b) throw ParseError("empty range " + text);
  return {a, b};
}

// census

int do_census(const Flags& f, std::ostream& out) {
  const GraphClass c = builtin(f.cfg.class_spec);
  const auto [lo, hi] = order_range(f.n_text);
  const auto store = CensusStore::from_environment();
  CensusOptions opts;
  opts.shapes = f.shapes;
  opts.threads = resolve_threads(f.cfg.threads);
  std::vector<CensusRecord> records;
  for (int n = lo; n <= hi; ++n) {
    std::optional<CensusRecord> rec;
    if (store) rec = store->find(c.name(), n);
    if (rec && f.shapes && !rec->has_tallies) rec.reset();
    if (!rec) {
      rec = count_labelled(c, n, opts);
      if (store) store->append(*rec);
    }
    if (!f.shapes) {
      rec->tallies.clear();
      rec->has_tallies = false;
    }
    records.push_back(std::move(*rec));
  }
  Sink sink(f.cfg.out_path, out);
  switch (format_for(f, Format::Table)) {
    case Format::Json:
      for (const auto& r : records) *sink << r.to_json().dump() << '\n';
      break;
    case Format::Csv:
      *sink << "class,n,labelled,connected\n";
      for (const auto& r : records) {
        *sink << r.class_name << ',' << r.n << ',' << r.labelled_count.str() << ',' << r.connected_count.str() << '\n';
      }
      break;
    case Format::Table:
      for (const auto& r : records) {
        *sink << r.labelled_count.str() << '\n';
        if (f.shapes) {
          for (const auto& [form, count] : r.tallies) *sink << "  " << form.to_hex() << ' ' << count << '\n';
        }
      }
      break;
  }
  return 0;
}

// sample

struct StatSpec {
  std::string name;
  std::optional<Graph> h;
};

const char* const kStatNames[] = {"order", "edges", "components", "kappa", "big", "frag", "frag-shape", "bridges", "connected"};

std::vector<StatSpec> parse_stats(const std::string& text) {
  std::vector<StatSpec> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.rfind("pend:", 0) == 0) {
      out.push_back({item, named_graph(item.substr(5))});
      continue;
    }
    if (std::find(std::begin(kStatNames), std::end(kStatNames), item) == std::end(kStatNames)) {
      throw ParseError("unknown statistic '" + item + "'");
    }
    out.push_back({item, std::nullopt});
  }
  if (out.empty()) throw ParseError("--stats is empty");
  return out;
}

std::vector<std::string> stat_row(const SparseGraph& g, const std::vector<StatSpec>& stats) {
  const SparseStats s = sparse_stats(g);
  std::vector<std::string> row;
  for (const auto& st : stats) {
    if (st.h) {
      row.push_back(std::to_string(pend_unrooted(g, *st.h)));
    } else if (st.name == "order") {
      row.push_back(std::to_string(s.order));
    } else if (st.name == "edges") {
      row.push_back(std::to_string(g.size()));
    } else if (st.name == "components" || st.name == "kappa") {
      row.push_back(std::to_string(s.components));
    } else if (st.name == "big") {
      row.push_back(std::to_string(s.big_order));
    } else if (st.name == "frag") {
      row.push_back(std::to_string(s.frag.order));
    } else if (st.name == "frag-shape") {
      row.push_back(s.frag.describe());
    } else if (st.name == "bridges") {
      row.push_back(std::to_string(bridges(g, components(g)).size()));
    } else {
      row.push_back(s.components == 1 ? "1" : "0");
    }
  }
  return row;
}

void write_graph(std::ostream& os, const SparseGraph& g) {
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u + 1 << ' ' << e.v + 1 << '\n';
}

int do_sample(const Flags& f, std::ostream& out) {
  const GraphClass c = builtin(f.cfg.class_spec);
  const DrawFn draw = make_sampler(c, f.cfg.n);
  const int threads = resolve_threads(f.cfg.threads);
  const Format format = format_for(f, Format::Table);
  const std::uint64_t count = f.cfg.samples;
  std::optional<std::vector<StatSpec>> stats;
  if (!f.stats.empty()) stats = parse_stats(f.stats);
  Sink sink(f.cfg.out_path, out);

  if (stats && format != Format::Json) {
    const char sep = format == Format::Csv ? ',' : '\t';
    *sink << "index";
    for (const auto& s : *stats) *sink << sep << s.name;
    *sink << '\n';
  }
  for (std::uint64_t begin = 0; begin < count; begin += kBlock) {
    const std::uint64_t size = std::min(kBlock, count - begin);
    if (stats) {
      const auto rows = parallel_map<std::vector<std::string>>(
          size, threads, [&](std::uint64_t i) { return stat_row(draw(f.cfg.seed, begin + i), *stats); });
      for (std::uint64_t i = 0; i < size; ++i) {
        if (format == Format::Json) {
          nlohmann::ordered_json j;
          j["schema"] = kSampleSchema;
          j["index"] = begin + i;
          for (std::size_t k = 0; k < stats->size(); ++k) j[(*stats)[k].name] = rows[i][k];
          *sink << j.dump() << '\n';
        } else {
          const char sep = format == Format::Csv ? ',' : '\t';
          *sink << begin + i;
          for (const auto& v : rows[i]) *sink << sep << v;
          *sink << '\n';
        }
      }
      continue;
    }
    const auto graphs = parallel_map<SparseGraph>(size, threads, [&](std::uint64_t i) {
      return draw(f.cfg.seed, begin + i);
    });
    for (std::uint64_t i = 0; i < size; ++i) {
      const SparseGraph& g = graphs[i];
      if (format == Format::Json) {
        nlohmann::ordered_json j;
        j["schema"] = kSampleSchema;
        j["index"] = begin + i;
        j["n"] = g.order();
        auto& edges = j["edges"] = nlohmann::ordered_json::array();
        for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
        *sink << j.dump() << '\n';
      } else {
        if (begin + i > 0) *sink << '\n';
        write_graph(*sink, g);
      }
    }
  }
  return 0;
}

// bp-sample and BP specs

double rho_for(const GraphClass& c, const std::string& rho_text) {
  if (!rho_text.empty()) {
    const auto v = optional_number(rho_text, "--rho");
    if (!v || *v <= 0) throw ContractError("--rho must be positive");
    return *v;
  }
  if (!c.rho) throw ContractError("class " + c.name() + " has no known rho; pass --rho");
  return *c.rho;
}

bool is_tree_like(const GraphClass& c) { return c.name() == "forests" || c.name() == "trees"; }

BoltzmannSpec spec_for(const GraphClass& c, const Flags& f) {
  const double rho = rho_for(c, f.rho);
  if (is_tree_like(c)) return make_tree_bp_spec(rho, 6, f.cfg.cutoff > 0 ? f.cfg.cutoff : 10000);
  if (f.max_order > 8) throw CapExceeded("--max-order is capped at 8 for explicit class censuses");
  return make_bp_spec(list_unlabelled_connected(c, f.max_order), rho, c.name());
}

int do_bp_sample(const Flags& f, std::ostream& out) {
  const GraphClass c = builtin(f.cfg.class_spec);
  const BoltzmannSpec spec = spec_for(c, f);
  const int threads = resolve_threads(f.cfg.threads);
  const Format format = format_for(f, Format::Table);
  Sink sink(f.cfg.out_path, out);
  if (format != Format::Json) {
    const char sep = format == Format::Csv ? ',' : '\t';
    *sink << "index" << sep << "order" << sep << "components" << sep << "fragment\n";
  }
  for (std::uint64_t begin = 0; begin < f.cfg.samples; begin += kBlock) {
    const std::uint64_t size = std::min(kBlock, f.cfg.samples - begin);
    const auto xs = parallel_map<Fragment>(size, threads, [&](std::uint64_t i) {
      return bp_sample(spec, f.cfg.seed, begin + i);
    });
    for (std::uint64_t i = 0; i < size; ++i) {
      const Fragment& x = xs[i];
      const auto parts = x.parts.size() + static_cast<std::size_t>(x.oversized_parts);
      if (format == Format::Json) {
        nlohmann::ordered_json j;
        j["schema"] = kSampleSchema;
        j["index"] = begin + i;
        j["order"] = x.order;
        j["components"] = parts;
        auto& hex = j["parts"] = nlohmann::ordered_json::array();
        for (const auto& p : x.parts) hex.push_back(p.to_hex());
        j["oversized_parts"] = x.oversized_parts;
        *sink << j.dump() << '\n';
      } else {
        const char sep = format == Format::Csv ? ',' : '\t';
        *sink << begin + i << sep << x.order << sep << parts << sep << x.describe() << '\n';
      }
    }
  }
  return 0;
}

// pend

int do_pend(const Flags& f, std::ostream& out) {
  if (f.files.size() != 2) throw ParseError("pend needs a graph file and a rooted-graph file");
  const Graph g = parse_graph(read_file(f.files[0]));
  const RootedGraph h = parse_rooted_graph(read_file(f.files[1]));
  const Format format = format_for(f, Format::Json);
  Sink sink(f.cfg.out_path, out);
  if (f.vertex) {
    const auto apps = vpend(g, h);
    if (format == Format::Json) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& a : apps) {
        list.push_back({{"vertices", one_based(a.vertices)},
                        {"distinguished", a.distinguished + 1},
                        {"shape", a.shape.to_hex()}});
      }
      *sink << list.dump(2) << '\n';
    } else if (format == Format::Csv) {
      *sink << "vertices,distinguished,shape\n";
      for (const auto& a : apps) {
        *sink << join(one_based(a.vertices), ' ') << ',' << a.distinguished + 1 << ',' << a.shape.to_hex() << '\n';
      }
    } else {
      *sink << "vpend " << apps.size() << '\n';
      for (const auto& a : apps) {
        *sink << "  W = {" << join(one_based(a.vertices), ',') << "} w* = " << a.distinguished + 1 << '\n';
      }
    }
    return 0;
  }
  const auto apps = pend_rooted(g, h);
  if (format == Format::Json) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& a : apps) {
      list.push_back({{"vertices", one_based(a.vertices)},
                      {"inner", a.inner + 1},
                      {"outer", a.outer + 1},
                      {"shape", a.shape.to_hex()}});
    }
    *sink << list.dump(2) << '\n';
  } else if (format == Format::Csv) {
    *sink << "vertices,inner,outer,shape\n";
    for (const auto& a : apps) {
      *sink << join(one_based(a.vertices), ' ') << ',' << a.inner + 1 << ',' << a.outer + 1 << ','
            << a.shape.to_hex() << '\n';
    }
  } else {
    *sink << "pend " << apps.size() << '\n';
    for (const auto& a : apps) {
      *sink << "  W = {" << join(one_based(a.vertices), ',') << "} link " << a.inner + 1 << '-' << a.outer + 1
            << '\n';
    }
  }
  return 0;
}

// class-check

int do_class_check(const Flags& f, std::ostream& out) {
  const GraphClass c = builtin(f.cfg.class_spec);
  auto need_h = [&] {
    if (f.h.empty()) throw ParseError("--property " + f.property + " needs --graph");
  };
  CheckResult r;
  if (f.property == "bridge-addable") {
    r = check_bridge_addable(c, f.n_max);
  } else if (f.property == "bridge-stable") {
    r = check_bridge_stable(c, f.n_max);
  } else if (f.property == "bridge-deletable") {
    need_h();
    r = check_bridge_deletable(c, graph_argument(f.h), f.n_max);
  } else if (f.property == "bridge-addable-in") {
    need_h();
    r = check_bridge_addable_in(c, graph_argument(f.h), f.n_max);
  } else if (f.property == "attachable") {
    need_h();
    r = check_attachable(c, rooted_argument(f.h), f.n_max);
  } else if (f.property == "detachable") {
    need_h();
    r = check_detachable(c, rooted_argument(f.h), f.n_max);
  } else {
    r = check_isomorphism_invariant(c, f.n_max, f.relabellings, f.cfg.seed);
  }
  Sink sink(f.cfg.out_path, out);
  const std::string witness = r.witness ? format_graph(*r.witness) : "";
  switch (format_for(f, Format::Table)) {
    case Format::Json: {
      nlohmann::ordered_json j;
      j["schema"] = kClassCheckSchema;
      j["class"] = r.class_name;
      j["property"] = r.property;
      j["n_max"] = r.n_max;
      j["instances"] = r.instances;
      j["ok"] = r.ok;
      j["witness"] = r.witness ? nlohmann::ordered_json(witness) : nlohmann::ordered_json(nullptr);
      j["detail"] = r.detail;
      *sink << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      *sink << "class,property,n_max,instances,ok\n"
            << r.class_name << ',' << r.property << ',' << r.n_max << ',' << r.instances << ','
            << (r.ok ? "true" : "false") << '\n';
      break;
    case Format::Table:
      *sink << r.property << " for " << r.class_name << " up to order " << r.n_max << ": "
            << (r.ok ? "ok" : "FAILS") << " (" << r.instances << " instances)\n";
      if (!r.ok) {
        if (!r.detail.empty()) *sink << r.detail << '\n';
        *sink << witness;
      }
      break;
  }
  return r.ok ? 0 : 1;
}

// verify

CycleCap parse_cycle_cap(const std::string& text) {
  CycleCap t;
  if (text == "inf") return t;
  if (text == "sqrt") {
    t.kind = CycleCap::Kind::Sqrt;
  } else if (text == "log") {
    t.kind = CycleCap::Kind::Log;
  } else {
    t.kind = CycleCap::Kind::Constant;
    const auto v = optional_number(text, "--cycle-cap");
    if (!v || *v < 3 || *v != std::floor(*v)) throw ParseError("--cycle-cap expects an integer >= 3, sqrt, log or inf");
    t.value = static_cast<int>(*v);
  }
  return t;
}

VerifyReport run_suite(const Flags& f) {
  const SampleConfig sc{.samples = f.cfg.samples, .seed = f.cfg.seed, .threads = resolve_threads(f.cfg.threads)};
  const std::string& s = f.suite;
  if (s == "exhaustive-lemmas") return suite_exhaustive_lemmas({.order_cap = f.cap, .wide_cap = f.wide_cap});
  if (s == "forest-connectivity") {
    return test_forest_connectivity(f.cfg.n, sc, optional_number(f.limit_tolerance, "--limit-tolerance"));
  }
  if (s == "bp-identities") {
    const GraphClass c = builtin(f.cfg.class_spec);
    const BoltzmannSpec spec = spec_for(c, f);
    BpIdentityOptions o;
    o.sigma_target = f.sigma_target == "auto" ? (is_tree_like(c) ? std::optional<double>(0.5) : std::nullopt)
                                              : optional_number(f.sigma_target, "--sigma-target");
    o.mean_lo = optional_number(f.mean_lo, "--mean-lo");
    o.mean_hi = f.mean_hi;
    return test_bp_identities(spec, sc, o);
  }
  GraphClass c = builtin(f.cfg.class_spec);
  if (s == "growth") return report_growth(c, f.cfg.n, sc.threads);
  if (s == "sigma") return report_sigma(c, rho_for(c, f.rho), f.max_order);
  if (s == "cycle-capped") {
    return test_cycle_capped_invariance(c, parse_cycle_cap(f.cycle_cap), f.cfg.n, sc, f.window,
                                        optional_number(f.tv_threshold, "--tv-threshold"));
  }
  const GraphClass restrict_to = builtin(f.restrict_to);
  if (s == "mean-frag") return test_mean_frag(c, f.cfg.n, sc, restrict_to);
  if (s == "kappa-dominance") return test_kappa_dominance(c, f.cfg.n, sc, restrict_to);
  if (s == "pend-concentration") {
    c.rho = rho_for(c, f.rho);
    PendOptions o{.epsilon = f.epsilon,
                  .failure_budget = f.budget,
                  .mean_tolerance = optional_number(f.mean_tolerance, "--mean-tolerance")};
    return test_pend_concentration(c, f.cfg.n, sc, graph_argument(f.h.empty() ? "K1" : f.h), o);
  }
  // frag-convergence
  ConvergenceOptions o{.window = f.window,
                       .tv_threshold = optional_number(f.tv_threshold, "--tv-threshold"),
                       .empty_tolerance = optional_number(f.empty_tolerance, "--empty-tolerance")};
  return test_frag_convergence(c, f.cfg.n, sc, spec_for(c, f), restrict_to, o);
}

int do_verify(const Flags& f, std::ostream& out) {
  const VerifyReport r = run_suite(f);
  Sink sink(f.cfg.out_path, out);
  switch (format_for(f, Format::Table)) {
    case Format::Json: *sink << r.to_json().dump(2) << '\n'; break;
    case Format::Csv: *sink << r.to_csv(); break;
    case Format::Table: *sink << r.to_table(); break;
  }
  return r.as_expected() ? 0 : 1;
}

// plot

int do_plot(const Flags& f, std::ostream& out) {
  if (f.files.empty()) throw ParseError("plot needs at least one report file");
  std::vector<nlohmann::json> reports;
  for (const auto& path : f.files) {
    const std::string text = read_file(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(path + ": " + e.what());
    }
    if (j.is_array()) {
      for (auto& r : j) reports.push_back(std::move(r));
    } else {
      reports.push_back(std::move(j));
    }
  }
  ChartKind kind;
  if (f.kind.empty()) {
    kind = chart_for(reports.front());
  } else {
    kind = *parse_chart_kind(f.kind);
  }
  const std::string svg = render_chart(kind, reports);
  Sink sink(f.cfg.out_path, out);
  *sink << svg;
  return 0;
}

// parser

void add_common(CLI::App* sub, Flags& f, bool seeded) {
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--out", f.cfg.out_path, "Write output to this file instead of stdout");
  sub->add_option("--threads", f.cfg.threads, "Worker threads; 0 uses every available core")
      ->check(CLI::NonNegativeNumber);
  if (seeded) sub->add_option("--seed", f.cfg.seed, "Random seed")->capture_default_str();
}

void build(CLI::App& app, Flags& f) {
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(PENDANT_LAB_VERSION));
  app.footer("Exit status: 0 success, 1 failed test or check, 2 usage or input error.");

  auto* census = app.add_subcommand("census", "Count the labelled members of a class exactly");
  census->add_option("--class", f.cfg.class_spec, "Class name")->required();
  census->add_option("--n", f.n_text, "Order, or a range a..b")->required();
  census->add_flag("--shapes", f.shapes, "Tally labelled members per unlabelled shape");
  census->footer("Table output prints one labelled count per order. PENDANT_LAB_STORE names a directory that caches "
                 "records across runs.");
  add_common(census, f, false);

  auto* sample = app.add_subcommand("sample", "Draw uniform random members R_n of a class");
  sample->add_option("--class", f.cfg.class_spec, "Class name")->required();
  sample->add_option("--n", f.cfg.n, "Order")->required()->check(CLI::PositiveNumber);
  sample->add_option("--count,--samples", f.cfg.samples, "Number of draws")->capture_default_str();
  sample->add_option("--stats", f.stats,
                     "Comma-separated statistics: order, edges, components (alias kappa), big, frag, frag-shape, bridges, "
                     "connected, pend:<graph>. Without it the graphs are printed");
  add_common(sample, f, true);

  auto* bp = app.add_subcommand("bp-sample", "Draw from the Boltzmann Poisson random graph BP(C, rho)");
  bp->add_option("--class", f.cfg.class_spec, "Class of connected components")->capture_default_str();
  bp->add_option("--rho", f.rho, "Parameter rho (default: the class's known value)");
  bp->add_option("--cutoff", f.cfg.cutoff, "Largest component order for tree classes (default 10000)");
  bp->add_option("--max-order", f.max_order, "Largest component order for other classes")->capture_default_str();
  bp->add_option("--count,--samples", f.cfg.samples, "Number of draws")->capture_default_str();
  add_common(bp, f, true);

  auto* pend = app.add_subcommand("pend", "List pendant appearances of a rooted graph");
  pend->add_option("files", f.files, "Graph file, then rooted-graph file")->required()->expected(2);
  pend->add_flag("--vertex", f.vertex, "List vertex-pendant appearances instead");
  add_common(pend, f, false);

  auto* check = app.add_subcommand("class-check", "Check a structural property of a class exhaustively");
  check->add_option("--class", f.cfg.class_spec, "Class name")->required();
  check->add_option("--property", f.property, "Property to check")
      ->check(CLI::IsMember({"bridge-addable", "bridge-stable", "bridge-deletable", "bridge-addable-in",
                             "attachable", "detachable", "isomorphism-invariant"}))
      ->capture_default_str();
  check->add_option("--graph", f.h, "Graph name or file; rooted properties take <name>@<root> or a rooted file");
  check->add_option("--n-max", f.n_max, "Largest order checked")->capture_default_str();
  check->add_option("--relabellings", f.relabellings, "Relabellings per graph for isomorphism-invariant")
      ->capture_default_str();
  add_common(check, f, true);

  auto* verify = app.add_subcommand("verify", "Run a verification suite or statistical test");
  verify->add_option("--suite", f.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"exhaustive-lemmas", "mean-frag", "kappa-dominance", "pend-concentration",
                             "frag-convergence", "bp-identities", "cycle-capped", "forest-connectivity", "growth",
                             "sigma"}));
  verify->add_option("--class", f.verify_class, "Class name")->capture_default_str();
  verify->add_option("--n", f.cfg.n, "Order (largest order for growth)");
  verify->add_option("--samples", f.verify_samples, "Number of draws; 0 computes the law exactly from the census")
      ->capture_default_str();
  verify->add_option("--cap", f.cap, "Order cap of the exhaustive lemma suite")->capture_default_str();
  verify->add_option("--wide-cap", f.wide_cap, "Order cap for the pend-total and Cross checks")->capture_default_str();
  verify->add_option("--restrict", f.restrict_to, "Class F for frag(G, F) and kappa+(G, F)")->capture_default_str();
  verify->add_option("--graph", f.h, "Pendant graph, by name or file (default K1)");
  verify->add_option("--rho", f.rho, "Parameter rho (default: the class's known value)");
  verify->add_option("--epsilon", f.epsilon, "Relative window half-width for pend/n")->capture_default_str();
  verify->add_option("--budget", f.budget, "Allowed fraction of draws outside the window")->capture_default_str();
  verify->add_option("--mean-tolerance", f.mean_tolerance, "Bound on |mean pend/n - alpha|, or none")
      ->capture_default_str();
  verify->add_option("--window", f.window, "Largest fragment order compared")->capture_default_str();
  verify->add_option("--tv-threshold", f.tv_threshold, "Bound on the windowed TV, or none")->capture_default_str();
  verify->add_option("--empty-tolerance", f.empty_tolerance, "Bound on |P(empty) - e^-sigma|, or none")
      ->capture_default_str();
  verify->add_option("--cutoff", f.cfg.cutoff, "Largest BP component order for tree classes (default 10000)");
  verify->add_option("--max-order", f.max_order, "Largest component order of an explicit BP spec, or of sigma")
      ->capture_default_str();
  verify->add_option("--sigma-target", f.sigma_target, "Target for the partial sum of mu (auto: 0.5 for trees)")
      ->capture_default_str();
  verify->add_option("--mean-lo", f.mean_lo, "Lower bound on the partial sum of k m_k, or none")
      ->capture_default_str();
  verify->add_option("--mean-hi", f.mean_hi, "Upper bound on the partial sum of k m_k")->capture_default_str();
  verify->add_option("--cycle-cap", f.cycle_cap, "Cycle-length cap t: an integer, sqrt, log or inf")
      ->capture_default_str();
  verify->add_option("--limit-tolerance", f.limit_tolerance, "Bound on |P(connected) - e^-1/2|, or none")
      ->capture_default_str();
  verify->footer("Exit status 1 when the report's verdict is FAIL and failure was not the expected outcome.");
  add_common(verify, f, true);

  auto* plot = app.add_subcommand("plot", "Render verify reports as an SVG chart");
  plot->add_option("reports", f.files, "Report JSON files")->required();
  plot->add_option("--kind", f.kind, "Chart kind (default: from the first report's suite)")
      ->check(CLI::IsMember({"connectivity", "pend-histogram", "tv"}));
  plot->add_option("--out", f.cfg.out_path, "Write the SVG to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Pendant appearances, fragments and Boltzmann Poisson limits of random graph classes",
               "pendant-lab");
  Flags f;
  f.cfg.class_spec = "trees";
  f.cfg.samples = 1;
  build(app, f);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  CLI::App* sub = app.get_subcommands().front();
  f.cfg.subcommand = sub->get_name();
  if (f.cfg.subcommand == "verify") {
    f.cfg.samples = f.verify_samples;
    f.cfg.class_spec = f.verify_class;
  }
  try {
    if (f.cfg.subcommand == "census") return do_census(f, out);
    if (f.cfg.subcommand == "sample") return do_sample(f, out);
    if (f.cfg.subcommand == "bp-sample") return do_bp_sample(f, out);
    if (f.cfg.subcommand == "pend") return do_pend(f, out);
    if (f.cfg.subcommand == "class-check") return do_class_check(f, out);
    if (f.cfg.subcommand == "verify") return do_verify(f, out);
    return do_plot(f, out);
  } catch (const UnknownClass& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
  } catch (const ContractError& e) {
    err << "error: invalid argument: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace pendant_lab::cli
