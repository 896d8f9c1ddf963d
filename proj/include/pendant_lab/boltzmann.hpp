#pragma once

// The Boltzmann Poisson random graph BP(C, rho): independent Poisson
// component counts with means mu(H) = rho^{v(H)} / aut(H), truncated at a
// maximum component order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pendant_lab/census.hpp"
#include "pendant_lab/decompose.hpp"
#include "pendant_lab/iso.hpp"
#include "pendant_lab/random.hpp"

namespace pendant_lab {

struct ShapeEntry {
  CanonicalForm form;
  int order = 0;
  std::uint64_t aut = 0;
  double mu = 0.0;
};

struct BoltzmannSpec {
  std::string class_name;
  double rho = 0.0;
  // Shapes listed one by one (orders <= explicit_order).
  std::vector<ShapeEntry> shapes;
  int explicit_order = 0;
  // Largest component order in the truncated model.
  int cutoff = 0;
  // bulk_mass[k] is the total mu of all trees of order k, for
  // explicit_order < k <= cutoff. Only tree specs have a bulk range; its
  // components are uniform labelled trees of the drawn order.
  std::vector<double> bulk_mass;
  // Running sums of bulk_mass, for drawing bulk component orders.
  std::vector<double> bulk_cumulative;
  // Total mu of the truncated model.
  double sigma = 0.0;
  // Certified upper bound on the omitted mu beyond the cutoff, if any.
  std::optional<double> tail_bound;
  std::string tail_note;

  // m_k = total mu of order k, for k = 0..cutoff (m_0 = 0).
  std::vector<double> order_mass() const;
};

double mu(int order, std::uint64_t automorphisms, double rho);
// rho^{v(H)} / aut(H, r).
double alpha_rooted(const RootedGraph& h, double rho);
// v(H) rho^{v(H)} / aut(H).
double alpha_unrooted(const Graph& h, double rho);

// Spec from an explicit census; the tail is reported as uncertified with the
// partial sum printed.
BoltzmannSpec make_bp_spec(const UnlabelledList& list, double rho, const std::string& class_name);
// Trees: shapes listed up to explicit_order, per-order masses
// k^{k-2} rho^k / k! up to cutoff. For rho <= 1/e the omitted mass is at
// most (2/3) K^{-3/2} / sqrt(2 pi) by Stirling's bound.
BoltzmannSpec make_tree_bp_spec(double rho, int explicit_order, int cutoff);

Fragment bp_sample(const BoltzmannSpec& spec, Rng& rng);
Fragment bp_sample(const BoltzmannSpec& spec, std::uint64_t seed, std::uint64_t index = 0);

// P(R = x) in the truncated model: e^{-sigma} prod mu(H)^{c_H} / c_H!.
double bp_probability(const BoltzmannSpec& spec, const Fragment& x);
// P(v(R) = k) for k = 0..max_order, from the compound Poisson recursion
// k p_k = sum_j j m_j p_{k-j}.
std::vector<double> bp_order_distribution(const BoltzmannSpec& spec, int max_order);

}  // namespace pendant_lab
