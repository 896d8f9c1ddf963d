#include "pendant_lab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

#include "pendant_lab/census.hpp"
#include "pendant_lab/enumerate.hpp"
#include "pendant_lab/error.hpp"
#include "pendant_lab/parallel.hpp"
#include "pendant_lab/pendant.hpp"
#include "pendant_lab/sampler.hpp"

namespace pendant_lab {

namespace {

// Unlabelled graphs of order 0..7 (OEIS A000088).
constexpr std::uint64_t kUnlabelledCounts[] = {1, 1, 2, 4, 11, 34, 156, 1044};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges";
  for (const Edge& e : g.edges()) out << ' ' << e.u + 1 << '-' << e.v + 1;
  return out.str();
}

void record_failure(VerifyReport& r, const std::string& what) {
  if (!r.counterexample) r.counterexample = what;
}

std::vector<RootedGraph> rooted_shapes(int min_order, int max_order) {
  std::vector<RootedGraph> out;
  for (int k = min_order; k <= max_order; ++k) {
    for (const Graph& h : unlabelled_connected_graphs(k)) {
      for (VertexSet o : root_orbits(h)) out.emplace_back(h, lowest(o));
    }
  }
  return out;
}

bool valid_vertex_pendant_root(const RootedGraph& k) {
  if (k.order() < 2) return false;
  return is_connected(k.graph().induced(k.graph().vertex_set() & ~bit(k.root())));
}

nlohmann::json base_scope(const GraphClass& c, int n, const SampleConfig& config) {
  nlohmann::json s;
  s["class"] = c.name();
  s["n"] = n;
  s["mode"] = config.samples == 0 ? "exact" : "sampled";
  s["samples"] = config.samples;
  s["seed"] = config.seed;
  return s;
}

template <typename T, typename F>
std::vector<T> draw_map(const GraphClass& c, int n, const SampleConfig& config, F&& f) {
  const DrawFn draw = make_sampler(c, n);
  return parallel_map<T>(config.samples, resolve_threads(config.threads),
                         [&](std::uint64_t i) { return f(draw(config.seed, i)); });
}

struct Moments {
  double mean = 0.0;
  double sd = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

// P(1 + Po(1) >= k).
double shifted_poisson_tail(int k) {
  if (k <= 1) return 1.0;
  double cdf = 0.0;
  double term = std::exp(-1.0);
  for (int j = 0; j < k - 1; ++j) {
    cdf += term;
    term /= (j + 1);
  }
  return std::max(0.0, 1.0 - cdf);
}

// Weighted histogram over [min, max] of the observed values.
nlohmann::json histogram(const std::vector<std::pair<double, double>>& values, int bins) {
  double lo = values.empty() ? 0.0 : values.front().first;
  double hi = lo;
  for (const auto& [x, w] : values) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double width = hi > lo ? (hi - lo) / bins : 1.0;
  std::vector<double> weights(static_cast<std::size_t>(bins), 0.0);
  for (const auto& [x, w] : values) {
    const int b = std::min(bins - 1, static_cast<int>((x - lo) / width));
    weights[static_cast<std::size_t>(b)] += w;
  }
  return {{"lo", lo}, {"width", width}, {"weights", weights}};
}

}  // namespace

void EmpiricalDistribution::add(const Fragment& x, double weight) {
  mass[x] += weight;
  total += weight;
}

double EmpiricalDistribution::probability(const Fragment& x) const {
  auto it = mass.find(x);
  return it == mass.end() || total <= 0.0 ? 0.0 : it->second / total;
}

double EmpiricalDistribution::mass_within(int window) const {
  double inside = 0.0;
  for (const auto& [x, w] : mass) {
    if (x.order <= window) inside += w;
  }
  return total > 0.0 ? inside / total : 0.0;
}

double windowed_tv(const EmpiricalDistribution& a, const EmpiricalDistribution& b, int window) {
  double sum = 0.0;
  for (const auto& [x, w] : a.mass) {
    if (x.order <= window) sum += std::abs(a.probability(x) - b.probability(x));
  }
  for (const auto& [x, w] : b.mass) {
    if (x.order <= window && !a.mass.count(x)) sum += b.probability(x);
  }
  sum += std::abs((1.0 - a.mass_within(window)) - (1.0 - b.mass_within(window)));
  return sum / 2.0;
}

double windowed_tv(const EmpiricalDistribution& a, const BoltzmannSpec& spec, int window) {
  const auto orders = bp_order_distribution(spec, window);
  const double bp_within = std::accumulate(orders.begin(), orders.end(), 0.0);
  double sum = 0.0;
  double seen_bp = 0.0;
  for (const auto& [x, w] : a.mass) {
    if (x.order > window) continue;
    const double p = bp_probability(spec, x);
    seen_bp += p;
    sum += std::abs(a.probability(x) - p);
  }
  // Atoms never observed contribute their full BP mass.
  sum += std::max(0.0, bp_within - seen_bp);
  sum += std::abs((1.0 - a.mass_within(window)) - (1.0 - bp_within));
  return sum / 2.0;
}

const std::vector<std::pair<Graph, double>>& exact_law(const GraphClass& c, int n, int threads) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<std::pair<Graph, double>>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(c.name(), n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CensusOptions opts;
  opts.threads = resolve_threads(threads);
  const CensusRecord rec = count_labelled(c, n, opts);
  if (rec.labelled_count == 0) throw ContractError("class " + c.name() + " has no members of order " + std::to_string(n));
  const double total = rec.labelled_count.convert_to<double>();
  std::vector<std::pair<Graph, double>> law;
  for (const auto& [form, count] : rec.tallies) law.emplace_back(form.to_graph(), static_cast<double>(count) / total);
  return cache.emplace(key, std::move(law)).first->second;
}

VerifyReport suite_exhaustive_lemmas(const LemmaOptions& options) {
  const int cap = options.order_cap;
  const int wide = std::max(options.wide_cap, cap);
  if (cap < 1 || wide > 7) throw CapExceeded("exhaustive lemma suite supports caps 1..7");

  VerifyReport r;
  r.suite = "exhaustive-lemmas";
  r.claim = "every listed inequality and identity holds on every graph (up to isomorphism) of the stated orders";
  r.scope["order_cap"] = cap;
  r.scope["wide_cap"] = wide;
  r.notes.push_back("graphs are enumerated up to isomorphism; every quantity checked is isomorphism-invariant");

  std::uint64_t narrow_graphs = 0;
  std::uint64_t wide_graphs = 0;
  std::uint64_t narrow_expected = 0;
  std::uint64_t wide_expected = 0;
  for (int n = 1; n <= wide; ++n) {
    wide_graphs += unlabelled_graphs(n).size();
    wide_expected += kUnlabelledCounts[n];
    if (n <= cap) {
      narrow_graphs += unlabelled_graphs(n).size();
      narrow_expected += kUnlabelledCounts[n];
    }
  }
  r.add("graphs_checked_narrow", static_cast<double>(narrow_graphs), static_cast<double>(narrow_expected),
        static_cast<double>(narrow_expected));
  r.add("graphs_checked_wide", static_cast<double>(wide_graphs), static_cast<double>(wide_expected),
        static_cast<double>(wide_expected));

  // Kill sets: C = connected graphs of order <= 3, |Q| <= 2 h*.
  {
    const int h_star = 3;
    const GraphClass c = memoized(builtin("connected-upto:3"));
    std::uint64_t instances = 0;
    std::size_t max_q = 0;
    for (int n = 1; n <= cap; ++n) {
      for (const Graph& g : unlabelled_graphs(n)) {
        for (const auto& a : pendant_appearances(g)) {
          if (!c.contains(g.induced(a.vertices))) continue;
          ++instances;
          const auto q = kill_set(g, c, h_star, a);
          max_q = std::max(max_q, q.size());
          if (q.size() > static_cast<std::size_t>(2 * h_star)) {
            record_failure(r, "kill set of size " + std::to_string(q.size()) + " in " + describe(g));
          }
        }
      }
    }
    r.add("kill_set_instances", static_cast<double>(instances));
    r.add("kill_set_max_q", static_cast<double>(max_q), std::nullopt, 2.0 * h_star);
    // Tightness: a path on h*+1 vertices, cut off all but one end.
    const Graph path = Graph::path(h_star + 1);
    std::size_t witness = 0;
    for (const auto& a : pendant_appearances(path)) {
      if (popcount(a.vertices) == h_star) witness = std::max(witness, kill_set(path, c, h_star, a).size());
    }
    r.add("kill_set_witness_q", static_cast<double>(witness), 2.0 * h_star, 2.0 * h_star).note =
        "path component on h*+1 vertices";
  }

  // Cross(G, F) >= v(G) frag(G, F) / 2.
  {
    std::uint64_t instances = 0;
    double min_slack = 0.0;
    bool first = true;
    for (const char* name : {"all", "forests", "trees", "planar", "series-parallel", "connected-upto:3"}) {
      const GraphClass f = memoized(builtin(name));
      for (int n = 1; n <= wide; ++n) {
        for (const Graph& g : unlabelled_graphs(n)) {
          ++instances;
          const double slack = 2.0 * static_cast<double>(cross(g, f)) -
                               static_cast<double>(n) * frag_restricted(g, f).order;
          if (first || slack < min_slack) min_slack = slack;
          first = false;
          if (slack < 0) record_failure(r, std::string("Cross bound fails for F = ") + name + " on " + describe(g));
        }
      }
    }
    r.add("cross_instances", static_cast<double>(instances));
    r.add("cross_min_slack", min_slack, 0.0, std::nullopt).note = "min of 2|Cross(G,F)| - v(G) frag(G,F)";
  }

  // pend(G) = sum_H pend(G, H) = 2 |bridges| <= 2 (v - 1).
  {
    std::uint64_t violations = 0;
    std::uint64_t tight = 0;
    std::uint64_t trees = 0;
    for (int n = 1; n <= wide; ++n) {
      for (const Graph& g : unlabelled_graphs(n)) {
        std::uint64_t sum = 0;
        for (int k = 1; k < n; ++k) {
          for (const Graph& h : unlabelled_connected_graphs(k)) sum += pend_unrooted(g, h);
        }
        const std::uint64_t b = bridges(g).size();
        const bool ok = sum == 2 * b && pend_total(g) == sum && sum <= static_cast<std::uint64_t>(2 * (n - 1));
        if (!ok) {
          ++violations;
          record_failure(r, "pend total identity fails on " + describe(g));
        }
        tight += sum == static_cast<std::uint64_t>(2 * (n - 1)) ? 1 : 0;
        trees += is_tree(g) ? 1 : 0;
      }
    }
    r.add("pend_total_violations", static_cast<double>(violations), std::nullopt, 0.0);
    r.add("pend_total_equality_cases", static_cast<double>(tight), static_cast<double>(trees),
          static_cast<double>(trees))
        .note = "equality 2(v-1) holds exactly for trees";
  }

  // pend(G, H) = sum over root orbits U of pend(G, H^{r_U}).
  {
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    for (int n = 1; n <= cap; ++n) {
      for (const Graph& g : unlabelled_graphs(n)) {
        for (int k = 1; k <= 4; ++k) {
          for (const Graph& h : unlabelled_connected_graphs(k)) {
            ++instances;
            std::uint64_t sum = 0;
            for (VertexSet o : root_orbits(h)) sum += pend_rooted(g, RootedGraph(h, lowest(o))).size();
            if (sum != pend_unrooted(g, h)) {
              ++violations;
              record_failure(r, "orbit identity fails for H = " + describe(h) + " in " + describe(g));
            }
          }
        }
      }
    }
    r.add("orbit_identity_instances", static_cast<double>(instances));
    r.add("orbit_identity_violations", static_cast<double>(violations), std::nullopt, 0.0);
  }

  // pend(G, H.) = vpend(G, (H+).).
  {
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    const auto shapes = rooted_shapes(1, 3);
    for (int n = 1; n <= cap; ++n) {
      for (const Graph& g : unlabelled_graphs(n)) {
        for (const auto& h : shapes) {
          ++instances;
          if (pend_rooted(g, h).size() != vpend(g, plus_root(h)).size()) {
            ++violations;
            record_failure(r, "pend/vpend identity fails for H = " + describe(h.graph()) + " rooted at " +
                                  std::to_string(h.root() + 1) + " in " + describe(g));
          }
        }
      }
    }
    r.add("vpend_identity_instances", static_cast<double>(instances));
    r.add("vpend_identity_violations", static_cast<double>(violations), std::nullopt, 0.0);
  }

  // Near-disjointness and the attach count.
  {
    std::uint64_t nd_instances = 0;
    int nd_excess = -kMaxOrder;
    std::uint64_t attach_instances = 0;
    long attach_excess = -1000;
    std::vector<RootedGraph> shapes;
    for (const auto& k : rooted_shapes(2, 4)) {
      if (valid_vertex_pendant_root(k)) shapes.push_back(k);
    }
    for (int n = 1; n <= cap; ++n) {
      for (const Graph& g : unlabelled_graphs(n)) {
        for (const auto& k : shapes) {
          const auto apps = vpend(g, k);
          for (const auto& a : apps) {
            ++nd_instances;
            int failing = 0;
            for (const auto& b : apps) failing += near_disjoint(a, b) ? 0 : 1;
            nd_excess = std::max(nd_excess, failing - k.order());
            if (failing > k.order()) {
              record_failure(r, "near-disjointness count " + std::to_string(failing) + " for K = " +
                                    describe(k.graph()) + " in " + describe(g));
            }
          }
          if (n + k.order() - 1 > kMaxOrder) continue;
          for (Vertex host = 0; host < n; ++host) {
            ++attach_instances;
            const Graph g1 = vertex_attach(g, k, host);
            const long excess = static_cast<long>(vpend(g1, k).size()) - static_cast<long>(apps.size()) -
                                static_cast<long>(k.order());
            attach_excess = std::max(attach_excess, excess);
            if (excess > 0) {
              record_failure(r, "attach count exceeded for K = " + describe(k.graph()) + " at vertex " +
                                    std::to_string(host + 1) + " of " + describe(g));
            }
          }
        }
      }
    }
    r.add("near_disjoint_instances", static_cast<double>(nd_instances));
    r.add("near_disjoint_max_excess", nd_excess, std::nullopt, 0.0).note =
        "max over A of #{B not near-disjoint from A} - v(K)";
    r.add("attach_instances", static_cast<double>(attach_instances));
    r.add("attach_max_excess", static_cast<double>(attach_excess), std::nullopt, 0.0).note =
        "max of vpend(G1,K) - vpend(G0,K) - (h+1)";
  }
  return r;
}

VerifyReport test_mean_frag(const GraphClass& c, int n, const SampleConfig& config, const GraphClass& restrict_to) {
  VerifyReport r;
  r.suite = "mean-frag";
  r.scope = base_scope(c, n, config);
  r.scope["restrict"] = restrict_to.name();
  if (config.samples == 0) {
    r.claim = "E[frag(R_n, F)] < 2, computed exactly over all labelled members";
    double mean = 0.0;
    for (const auto& [g, p] : exact_law(c, n, config.threads)) mean += p * frag_restricted(g, restrict_to).order;
    r.add("exact_mean_frag", mean, std::nullopt, 2.0, true);
    return r;
  }
  r.claim = "sample mean of frag(R_n, F) plus three standard errors is below 2";
  const auto xs = draw_map<double>(c, n, config, [&](const SparseGraph& g) {
    return static_cast<double>(frag_restricted(g, restrict_to).order);
  });
  const Moments m = moments(xs);
  const double se = m.sd / std::sqrt(static_cast<double>(xs.size()));
  r.add("mean_frag", m.mean);
  r.add("standard_error", se);
  r.add("mean_plus_3se", m.mean + 3 * se, std::nullopt, 2.0, true);
  return r;
}

VerifyReport test_kappa_dominance(const GraphClass& c, int n, const SampleConfig& config,
                                  const GraphClass& restrict_to) {
  VerifyReport r;
  r.suite = "kappa-dominance";
  r.scope = base_scope(c, n, config);
  r.scope["restrict"] = restrict_to.name();
  std::map<int, double> law;
  double total = 0.0;
  if (config.samples == 0) {
    r.claim = "P(kappa+(R_n, F) >= k) <= P(1 + Po(1) >= k) for every k, exactly";
    for (const auto& [g, p] : exact_law(c, n, config.threads)) {
      law[kappa_plus(g, restrict_to)] += p;
      total += p;
    }
  } else {
    r.claim = "empirical P(kappa+(R_n, F) >= k) <= P(1 + Po(1) >= k) + 3 binomial sd, for every k";
    const auto ks = draw_map<int>(c, n, config, [&](const SparseGraph& g) { return kappa_plus(g, restrict_to); });
    for (int k : ks) law[k] += 1.0;
    total = static_cast<double>(ks.size());
  }
  const int k_max = law.empty() ? 1 : law.rbegin()->first + 1;
  for (int k = 1; k <= k_max; ++k) {
    double tail = 0.0;
    for (const auto& [v, w] : law) {
      if (v >= k) tail += w;
    }
    tail /= total;
    const double q = shifted_poisson_tail(k);
    const double margin = config.samples == 0 ? 1e-12 : 3.0 * std::sqrt(q * (1.0 - q) / total);
    r.add("P(kappa+>=" + std::to_string(k) + ")", tail, std::nullopt, q + margin).note =
        "1+Po(1) tail " + format_double(q);
  }
  return r;
}

VerifyReport test_pend_concentration(const GraphClass& c, int n, const SampleConfig& config, const Graph& h,
                                     const PendOptions& options) {
  if (!c.rho) throw ContractError("class " + c.name() + " has no known rho; supply one");
  VerifyReport r;
  r.suite = "pend-concentration";
  r.scope = base_scope(c, n, config);
  r.scope["h"] = canonical_form(h).to_hex();
  r.scope["epsilon"] = options.epsilon;
  r.scope["rho"] = *c.rho;
  const double alpha = alpha_unrooted(h, *c.rho);
  const double lo = (1 - options.epsilon) * alpha;
  const double hi = (1 + options.epsilon) * alpha;
  r.claim = "the fraction of R_n with pend(R_n, H)/n strictly inside ((1-eps) alpha, (1+eps) alpha) is at least "
            "1 - budget";
  r.notes.push_back("exponentially small failure rates are not distinguishable from o(1) at this scale; only the "
                    "event frequency is tested");
  std::vector<std::pair<double, double>> values;  // (pend/n, weight)
  if (h.order() > n) {
    r.expected_failure = true;
    r.notes.push_back("v(H) > n: pend is identically 0 and the window excludes 0");
  }
  if (config.samples == 0) {
    for (const auto& [g, p] : exact_law(c, n, config.threads)) {
      values.emplace_back(static_cast<double>(pend_unrooted(g, h)) / n, p);
    }
  } else {
    const auto xs = draw_map<double>(c, n, config, [&](const SparseGraph& g) {
      return static_cast<double>(pend_unrooted(g, h)) / n;
    });
    for (double x : xs) values.emplace_back(x, 1.0 / static_cast<double>(xs.size()));
  }
  double inside = 0.0;
  double mean = 0.0;
  for (const auto& [x, w] : values) {
    inside += (x > lo && x < hi) ? w : 0.0;
    mean += x * w;
  }
  double var = 0.0;
  for (const auto& [x, w] : values) var += w * (x - mean) * (x - mean);
  r.extra["histogram"] = histogram(values, 24);
  r.add("alpha", alpha);
  r.add("fraction_inside", inside, 1.0 - options.failure_budget, std::nullopt);
  r.add("sd_pend_over_n", std::sqrt(var));
  auto& m = r.add("mean_pend_over_n", mean);
  if (options.mean_tolerance) {
    m.lo = alpha - *options.mean_tolerance;
    m.hi = alpha + *options.mean_tolerance;
  }
  return r;
}

VerifyReport test_frag_convergence(const GraphClass& c, int n, const SampleConfig& config, const BoltzmannSpec& spec,
                                   const GraphClass& restrict_to, const ConvergenceOptions& options) {
  VerifyReport r;
  r.suite = "frag-convergence";
  r.scope = base_scope(c, n, config);
  r.scope["restrict"] = restrict_to.name();
  r.scope["window"] = options.window;
  r.scope["bp_class"] = spec.class_name;
  r.scope["rho"] = spec.rho;
  r.scope["bp_cutoff"] = spec.cutoff;
  r.claim = "total variation between Frag(R_n, C) and BP(C, rho), coarsened to fragments of order <= window, is at "
            "most the threshold";
  EmpiricalDistribution law;
  if (config.samples == 0) {
    for (const auto& [g, p] : exact_law(c, n, config.threads)) law.add(frag_restricted(g, restrict_to), p);
  } else {
    const auto xs = draw_map<Fragment>(c, n, config, [&](const SparseGraph& g) { return frag_restricted(g, restrict_to); });
    for (const auto& x : xs) law.add(x);
  }
  const double tv = windowed_tv(law, spec, options.window);
  const auto orders = bp_order_distribution(spec, options.window);
  auto& s = r.add("tv", tv);
  if (options.tv_threshold) s.hi = *options.tv_threshold;
  r.add("outside_window_empirical", 1.0 - law.mass_within(options.window));
  r.add("outside_window_bp", 1.0 - std::accumulate(orders.begin(), orders.end(), 0.0));
  const double p_empty = law.probability(Fragment{});
  const double bp_empty = std::exp(-spec.sigma);
  auto& e = r.add("P(empty)", p_empty);
  e.note = "BP value " + format_double(bp_empty);
  if (options.empty_tolerance) {
    e.lo = bp_empty - *options.empty_tolerance;
    e.hi = bp_empty + *options.empty_tolerance;
  }
  r.add("distinct_fragments", static_cast<double>(law.mass.size()));
  r.notes.push_back("BP tail: " + spec.tail_note);
  return r;
}

VerifyReport test_bp_identities(const BoltzmannSpec& spec, const SampleConfig& config,
                                const BpIdentityOptions& options) {
  VerifyReport r;
  r.suite = "bp-identities";
  r.scope["class"] = spec.class_name;
  r.scope["rho"] = spec.rho;
  r.scope["cutoff"] = spec.cutoff;
  r.scope["samples"] = config.samples;
  r.scope["seed"] = config.seed;
  r.claim = "P(v(R) = k) = e^{-sigma} |F_k| rho^k / k! for small k; partial sums of sigma and rho C'(rho)";
  const bool trees = spec.class_name == "trees";
  const auto dp = bp_order_distribution(spec, options.max_k);
  std::vector<double> closed(static_cast<std::size_t>(options.max_k + 1));
  for (int k = 0; k <= options.max_k; ++k) {
    closed[static_cast<std::size_t>(k)] =
        trees ? std::exp(-spec.sigma + log_big(forest_count_exact(k)) + k * std::log(spec.rho) - std::lgamma(k + 1.0))
              : dp[static_cast<std::size_t>(k)];
  }
  if (config.samples > 0) {
    std::vector<int> orders = parallel_map<int>(config.samples, resolve_threads(config.threads), [&](std::uint64_t i) {
      return bp_sample(spec, config.seed, i).order;
    });
    for (int k = 0; k <= options.max_k; ++k) {
      const double p = closed[static_cast<std::size_t>(k)];
      const double hat = static_cast<double>(std::count(orders.begin(), orders.end(), k)) / orders.size();
      const double sd = std::sqrt(p * (1 - p) / static_cast<double>(orders.size()));
      r.add("P(v(R)=" + std::to_string(k) + ")", hat, p - 3 * sd, p + 3 * sd).note = "closed form " + format_double(p);
    }
  }
  if (trees) {
    for (int k = 0; k <= options.max_k; ++k) {
      r.add("recursion_vs_closed_form_" + std::to_string(k),
            std::abs(dp[static_cast<std::size_t>(k)] - closed[static_cast<std::size_t>(k)]), std::nullopt, 1e-12);
    }
  }
  const auto m = spec.order_mass();
  double sigma = 0.0;
  double mean = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (static_cast<int>(k) <= options.sigma_order) sigma += m[k];
    mean += static_cast<double>(k) * m[k];
  }
  auto& s = r.add("sigma_through_order_" + std::to_string(options.sigma_order), sigma);
  if (options.sigma_target) {
    s.lo = *options.sigma_target - options.sigma_tolerance;
    s.hi = *options.sigma_target + options.sigma_tolerance;
  }
  if (spec.cutoff < options.sigma_order) s.note = "spec cutoff " + std::to_string(spec.cutoff) + " is below the order";
  r.add("rho_C_prime_partial", mean, options.mean_lo, options.mean_hi).note =
      "sum of k m_k over orders <= " + std::to_string(spec.cutoff);
  r.notes.push_back("BP tail: " + spec.tail_note);
  return r;
}

VerifyReport test_cycle_capped_invariance(const GraphClass& base, CycleCap t, int n, const SampleConfig& config,
                                          int window, std::optional<double> tv_threshold) {
  const GraphClass capped = cycle_capped(base, t);
  VerifyReport r;
  r.suite = "cycle-capped";
  r.scope = base_scope(base, n, config);
  r.scope["cap"] = t.describe();
  r.scope["window"] = window;
  r.claim = "Frag(R_n) has nearly the same law in the cycle-capped class as in the base class";
  const bool vacuous = t.kind == CycleCap::Kind::Infinite || base.name() == "forests" || base.name() == "trees";
  EmpiricalDistribution a;
  EmpiricalDistribution b;
  if (config.samples == 0) {
    for (const auto& [g, p] : exact_law(capped, n, config.threads)) a.add(frag_decompose(g).frag, p);
    for (const auto& [g, p] : exact_law(base, n, config.threads)) b.add(frag_decompose(g).frag, p);
    tv_threshold.reset();
    r.notes.push_back("exact finite-n comparison; reported without threshold");
  } else {
    const GraphClass& source = vacuous ? base : capped;
    const auto xs = draw_map<Fragment>(source, n, config, [](const SparseGraph& g) { return sparse_stats(g).frag; });
    // When the cap is vacuous both laws are the base law and share draws.
    SampleConfig other = config;
    if (!vacuous) other.seed = sub_seed(config.seed, 1);
    const auto ys = draw_map<Fragment>(base, n, other, [](const SparseGraph& g) { return sparse_stats(g).frag; });
    for (const auto& x : xs) a.add(x);
    for (const auto& y : ys) b.add(y);
    r.scope["base_seed"] = other.seed;
  }
  if (vacuous) r.notes.push_back("the cycle cap does not restrict this class");
  auto& s = r.add("tv", windowed_tv(a, b, window));
  if (tv_threshold) s.hi = *tv_threshold;
  r.add("P(empty)_capped", a.probability(Fragment{}));
  r.add("P(empty)_base", b.probability(Fragment{}));
  return r;
}

BigRational forest_connectivity_exact(int n) {
  if (n < 1) throw ContractError("forest connectivity needs n >= 1");
  return BigRational(tree_count_exact(n), forest_count_exact(n));
}

VerifyReport test_forest_connectivity(int n, const SampleConfig& config, std::optional<double> limit_tolerance) {
  VerifyReport r;
  r.suite = "forest-connectivity";
  r.scope = base_scope(builtin("forests"), n, config);
  r.claim = "P(R_n connected) = n^{n-2} / F_n; the sampler's connected fraction is within 3 sd of it";
  const BigRational exact = forest_connectivity_exact(n);
  const double p = exact.convert_to<double>();
  r.extra["exact_ratio"] = exact.str();
  r.extra["limit"] = std::exp(-0.5);
  r.add("exact_ratio", p);
  if (n <= 7) {
    const CensusRecord rec = count_labelled(builtin("forests"), n, {.shapes = false});
    const BigRational census(rec.connected_count, rec.labelled_count);
    r.add("census_matches_recursion", census == exact ? 1.0 : 0.0, 1.0, 1.0);
  }
  if (config.samples > 0) {
    const auto hits = parallel_map<int>(config.samples, resolve_threads(config.threads), [&](std::uint64_t i) {
      return components(uniform_forest(n, config.seed, i)).parts.size() == 1 ? 1 : 0;
    });
    const double hat = static_cast<double>(std::accumulate(hits.begin(), hits.end(), 0)) / hits.size();
    r.add("sampled_fraction", hat);
    const double sd = std::sqrt(p * (1 - p) / static_cast<double>(hits.size()));
    r.add("z_score", sd > 0 ? std::abs(hat - p) / sd : 0.0, std::nullopt, 3.0);
  }
  if (limit_tolerance) {
    r.add("distance_to_limit", std::abs(p - std::exp(-0.5)), std::nullopt, *limit_tolerance, true).note =
        "limit e^{-1/2}";
  }
  return r;
}

VerifyReport report_growth(const GraphClass& c, int n_max, int threads) {
  VerifyReport r;
  r.suite = "growth";
  r.scope["class"] = c.name();
  r.scope["n_max"] = n_max;
  r.claim = "(|A_n| / n!)^{1/n} for n <= n_max; no limit is extrapolated";
  CensusOptions opts;
  opts.threads = resolve_threads(threads);
  const auto seq = growth_sequence(c, n_max, opts);
  bool monotone = true;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    r.add("growth_" + std::to_string(i + 1), seq[i]);
    if (i > 0 && seq[i] < seq[i - 1]) monotone = false;
  }
  r.add("nondecreasing", monotone ? 1.0 : 0.0);
  r.notes.push_back("growth constants of classes such as planar graphs need counts far beyond this range");
  return r;
}

VerifyReport report_sigma(const GraphClass& c, double rho, int max_order) {
  VerifyReport r;
  r.suite = "sigma";
  r.scope["class"] = c.name();
  r.scope["rho"] = rho;
  r.scope["max_order"] = max_order;
  r.claim = "partial sums sigma_k of rho^{v(H)} / aut(H) over connected members, by order";
  const auto list = list_unlabelled_connected(c, max_order);
  for (int k = 1; k <= max_order; ++k) {
    r.add("sigma_through_order_" + std::to_string(k), sigma_k(list, rho, prefix_through_order(list, k)));
  }
  r.notes.push_back("no conclusion is drawn about the limit C(rho)");
  return r;
}

}  // namespace pendant_lab
