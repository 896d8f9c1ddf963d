#pragma once

// Exhaustive property suites for the structural lemmas and seeded
// statistical tests for the limit laws. Every function returns a
// VerifyReport whose verdict follows from its statistics alone.
//
// Tests taking a SampleConfig run in exact mode when samples == 0: the law
// of R_n is then computed from the labelled census (n <= kCensusCap).

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "pendant_lab/bigint.hpp"
#include "pendant_lab/boltzmann.hpp"
#include "pendant_lab/classes.hpp"
#include "pendant_lab/decompose.hpp"
#include "pendant_lab/random.hpp"
#include "pendant_lab/report.hpp"

namespace pendant_lab {

struct SampleConfig {
  std::uint64_t samples = 10000;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
};

// Law of an unlabelled fragment: empirical counts or exact weights.
struct EmpiricalDistribution {
  std::map<Fragment, double> mass;
  double total = 0.0;

  void add(const Fragment& x, double weight = 1.0);
  double probability(const Fragment& x) const;
  // P(v(X) <= window).
  double mass_within(int window) const;
};

// Total variation between the laws of X and Y coarsened to "the fragment
// itself if its order is <= window, otherwise OUT".
double windowed_tv(const EmpiricalDistribution& a, const EmpiricalDistribution& b, int window);
double windowed_tv(const EmpiricalDistribution& a, const BoltzmannSpec& spec, int window);

struct LemmaOptions {
  // Kill-set, orbit, vertex-pendant, near-disjointness and attach checks.
  int order_cap = 6;
  // pend_total and Cross checks.
  int wide_cap = 7;
};
VerifyReport suite_exhaustive_lemmas(const LemmaOptions& options = {});

VerifyReport test_mean_frag(const GraphClass& c, int n, const SampleConfig& config, const GraphClass& restrict_to);
VerifyReport test_kappa_dominance(const GraphClass& c, int n, const SampleConfig& config,
                                  const GraphClass& restrict_to);

struct PendOptions {
  double epsilon = 0.05;
  // Allowed fraction of samples outside the window.
  double failure_budget = 0.01;
  // When set, the sample mean of pend/n must be within this of alpha.
  std::optional<double> mean_tolerance;
};
// alpha = h rho^{v(H)} / aut H with rho = c.rho (ContractError if unknown).
VerifyReport test_pend_concentration(const GraphClass& c, int n, const SampleConfig& config, const Graph& h,
                                     const PendOptions& options = {});

struct ConvergenceOptions {
  int window = 10;
  std::optional<double> tv_threshold = 0.02;
  // When set, |P(Frag empty) - e^{-sigma}| must be at most this.
  std::optional<double> empty_tolerance;
};
VerifyReport test_frag_convergence(const GraphClass& c, int n, const SampleConfig& config, const BoltzmannSpec& spec,
                                   const GraphClass& restrict_to, const ConvergenceOptions& options = {});

struct BpIdentityOptions {
  int max_k = 5;
  // Partial sum of mu over orders <= sigma_order, checked against target.
  int sigma_order = 60;
  std::optional<double> sigma_target;
  double sigma_tolerance = 1e-3;
  // Bounds on sum_k k m_k over the spec's orders (rho C'(rho) truncated).
  std::optional<double> mean_lo;
  double mean_hi = 2.0;
};
VerifyReport test_bp_identities(const BoltzmannSpec& spec, const SampleConfig& config,
                                const BpIdentityOptions& options = {});

VerifyReport test_cycle_capped_invariance(const GraphClass& base, CycleCap t, int n, const SampleConfig& config,
                                          int window = 10, std::optional<double> tv_threshold = 0.02);

// n^{n-2} / F_n.
BigRational forest_connectivity_exact(int n);
VerifyReport test_forest_connectivity(int n, const SampleConfig& config,
                                      std::optional<double> limit_tolerance = std::nullopt);

// Reported without bounds.
VerifyReport report_growth(const GraphClass& c, int n_max, int threads = 1);
VerifyReport report_sigma(const GraphClass& c, double rho, int max_order);

// Probability-weighted unlabelled shapes of R_n from the labelled census,
// cached per (class, n).
const std::vector<std::pair<Graph, double>>& exact_law(const GraphClass& c, int n, int threads = 1);

}  // namespace pendant_lab
