#include "pendant_lab/boltzmann.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "pendant_lab/error.hpp"
#include "pendant_lab/report.hpp"
#include "pendant_lab/sampler.hpp"

namespace pendant_lab {

double mu(int order, std::uint64_t automorphisms, double rho) {
  if (!(rho > 0.0)) throw ContractError("rho must be positive");
  return std::pow(rho, order) / static_cast<double>(automorphisms);
}

double alpha_rooted(const RootedGraph& h, double rho) { return mu(h.order(), aut_rooted(h), rho); }

double alpha_unrooted(const Graph& h, double rho) {
  if (!is_connected(h)) throw ContractError("alpha needs a connected graph");
  return h.order() * mu(h.order(), aut(h), rho);
}

std::vector<double> BoltzmannSpec::order_mass() const {
  std::vector<double> m(static_cast<std::size_t>(cutoff + 1), 0.0);
  for (const auto& s : shapes) m[static_cast<std::size_t>(s.order)] += s.mu;
  for (std::size_t k = 0; k < bulk_mass.size() && k < m.size(); ++k) m[k] += bulk_mass[k];
  return m;
}

BoltzmannSpec make_bp_spec(const UnlabelledList& list, double rho, const std::string& class_name) {
  if (!(rho > 0.0)) throw ContractError("rho must be positive");
  BoltzmannSpec spec;
  spec.class_name = class_name;
  spec.rho = rho;
  for (const auto& e : list) {
    spec.shapes.push_back({e.form, e.order, e.aut, mu(e.order, e.aut, rho)});
    spec.sigma += spec.shapes.back().mu;
    spec.explicit_order = std::max(spec.explicit_order, e.order);
  }
  spec.cutoff = spec.explicit_order;
  spec.tail_note = "uncertified: partial sum over orders <= " + std::to_string(spec.cutoff) +
                   " is " + format_double(spec.sigma);
  return spec;
}

BoltzmannSpec make_tree_bp_spec(double rho, int explicit_order, int cutoff) {
  if (explicit_order > kCensusCap) throw CapExceeded("explicit tree census above cap");
  if (cutoff < explicit_order) throw ContractError("cutoff below explicit order");
  BoltzmannSpec spec = make_bp_spec(list_unlabelled_connected(builtin("trees"), explicit_order), rho, "trees");
  spec.cutoff = cutoff;
  spec.bulk_mass.assign(static_cast<std::size_t>(cutoff + 1), 0.0);
  for (int k = explicit_order + 1; k <= cutoff; ++k) {
    const double log_mass = (k - 2) * std::log(static_cast<double>(k)) + k * std::log(rho) - std::lgamma(k + 1.0);
    spec.bulk_mass[static_cast<std::size_t>(k)] = std::exp(log_mass);
    spec.sigma += spec.bulk_mass[static_cast<std::size_t>(k)];
  }
  spec.bulk_cumulative.reserve(spec.bulk_mass.size());
  double acc = 0.0;
  for (double m : spec.bulk_mass) spec.bulk_cumulative.push_back(acc += m);
  if (rho <= std::exp(-1.0) + 1e-15) {
    spec.tail_bound = (2.0 / 3.0) * std::pow(static_cast<double>(cutoff), -1.5) / std::sqrt(2.0 * std::numbers::pi);
    spec.tail_note = "certified: omitted mass <= " + format_double(*spec.tail_bound);
  } else {
    spec.tail_note = "uncertified: rho above 1/e, the tree series diverges";
  }
  return spec;
}

Fragment bp_sample(const BoltzmannSpec& spec, Rng& rng) {
  Fragment out;
  for (const auto& s : spec.shapes) {
    const int count = rng.poisson(s.mu);
    for (int i = 0; i < count; ++i) {
      out.parts.push_back(s.form);
      out.order += s.order;
    }
  }
  if (!spec.bulk_cumulative.empty()) {
    // The bulk counts are independent Poissons; draw their total and then
    // the order of each component in proportion to its mass.
    const double mass = spec.bulk_cumulative.back();
    const int total = mass > 0.0 ? rng.poisson(mass) : 0;
    for (int i = 0; i < total; ++i) {
      const int k = static_cast<int>(rng.pick_cumulative(spec.bulk_cumulative));
      out.order += k;
      if (k > kMaxOrder) {
        ++out.oversized_parts;
        out.oversized_order += k;
        continue;
      }
      const SparseGraph tree = uniform_tree(k, rng);
      out.parts.push_back(canonical_form(*tree.to_small()));
    }
  }
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

Fragment bp_sample(const BoltzmannSpec& spec, std::uint64_t seed, std::uint64_t index) {
  Rng rng = Rng::for_draw(seed, index);
  return bp_sample(spec, rng);
}

double bp_probability(const BoltzmannSpec& spec, const Fragment& x) {
  if (x.oversized_parts > 0) return 0.0;
  std::map<CanonicalForm, int> counts;
  for (const auto& p : x.parts) ++counts[p];
  double log_p = -spec.sigma;
  for (const auto& [form, c] : counts) {
    double m = 0.0;
    if (form.n <= spec.explicit_order) {
      auto it = std::find_if(spec.shapes.begin(), spec.shapes.end(),
                             [&](const ShapeEntry& s) { return s.form == form; });
      if (it == spec.shapes.end()) return 0.0;
      m = it->mu;
    } else {
      if (form.n > spec.cutoff || static_cast<std::size_t>(form.n) >= spec.bulk_mass.size()) return 0.0;
      const Graph g = form.to_graph();
      if (!is_tree(g)) return 0.0;
      m = mu(form.n, aut(g), spec.rho);
    }
    log_p += c * std::log(m) - std::lgamma(c + 1.0);
  }
  return std::exp(log_p);
}

std::vector<double> bp_order_distribution(const BoltzmannSpec& spec, int max_order) {
  const std::vector<double> m = spec.order_mass();
  std::vector<double> p(static_cast<std::size_t>(max_order + 1), 0.0);
  p[0] = std::exp(-spec.sigma);
  for (int k = 1; k <= max_order; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k && j < static_cast<int>(m.size()); ++j) {
      acc += j * m[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(k - j)];
    }
    p[static_cast<std::size_t>(k)] = acc / k;
  }
  return p;
}

}  // namespace pendant_lab
