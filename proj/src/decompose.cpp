#include "pendant_lab/decompose.hpp"

#include <algorithm>

namespace pendant_lab {

std::string Fragment::describe() const {
  if (empty()) return "empty";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '+';
    out += p.to_hex();
  }
  if (oversized_parts > 0) {
    if (!out.empty()) out += '+';
    out += std::to_string(oversized_parts) + "x>" + std::to_string(kMaxOrder);
  }
  return out;
}

namespace {

std::size_t largest_index(const std::vector<int>& sizes) {
  // First maximum: components are ordered by smallest vertex.
  return static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
}

}  // namespace

FragDecomposition frag_decompose(const Graph& g) {
  FragDecomposition out;
  const auto parts = components(g);
  if (parts.empty()) return out;
  std::vector<int> sizes;
  for (VertexSet c : parts) sizes.push_back(popcount(c));
  const std::size_t big = largest_index(sizes);
  out.big_vertices = parts[big];
  out.big = g.induced(parts[big]);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == big) continue;
    out.frag.parts.push_back(canonical_form(g.induced(parts[i])));
    out.frag.order += sizes[i];
  }
  std::sort(out.frag.parts.begin(), out.frag.parts.end());
  return out;
}

Fragment frag_restricted(const Graph& g, const GraphClass& f) {
  const FragDecomposition d = frag_decompose(g);
  Fragment out;
  for (const auto& p : d.frag.parts) {
    if (f.contains(p.to_graph())) {
      out.parts.push_back(p);
      out.order += p.n;
    }
  }
  return out;
}

std::uint64_t cross(const Graph& g, const GraphClass& f) {
  const auto parts = components(g);
  std::vector<bool> in_f;
  for (VertexSet c : parts) in_f.push_back(f.contains(g.induced(c)));
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (in_f[i] || in_f[j]) {
        total += static_cast<std::uint64_t>(popcount(parts[i])) * static_cast<std::uint64_t>(popcount(parts[j]));
      }
    }
  }
  return total;
}

int kappa_of(const Graph& g, const Graph& h) {
  const CanonicalForm target = canonical_form(h);
  int count = 0;
  for (VertexSet c : components(g)) {
    if (popcount(c) == h.order() && canonical_form(g.induced(c)) == target) ++count;
  }
  return count;
}

int kappa_in(const Graph& g, const GraphClass& f) {
  int count = 0;
  for (VertexSet c : components(g)) count += f.contains(g.induced(c)) ? 1 : 0;
  return count;
}

int kappa_plus(const Graph& g, const GraphClass& f) {
  const int total = kappa(g);
  const int in_f = kappa_in(g, f);
  return in_f == total ? in_f : in_f + 1;
}

SparseStats sparse_stats(const SparseGraph& g) {
  SparseStats out;
  out.order = g.order();
  const ComponentLabels comps = components(g);
  out.components = static_cast<int>(comps.parts.size());
  if (comps.parts.empty()) return out;
  std::vector<int> sizes;
  for (const auto& p : comps.parts) sizes.push_back(static_cast<int>(p.size()));
  const std::size_t big = largest_index(sizes);
  out.big_order = sizes[big];
  for (std::size_t i = 0; i < comps.parts.size(); ++i) {
    if (i == big) continue;
    out.frag.order += sizes[i];
    if (sizes[i] > kMaxOrder) {
      ++out.frag.oversized_parts;
      out.frag.oversized_order += sizes[i];
    } else {
      out.frag.parts.push_back(canonical_form(g.induced_small(comps.parts[i])));
    }
  }
  std::sort(out.frag.parts.begin(), out.frag.parts.end());
  return out;
}

namespace {

SparseGraph sparse_induced(const SparseGraph& g, const std::vector<int>& part) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < part.size(); ++i) index[static_cast<std::size_t>(part[i])] = static_cast<int>(i);
  SparseGraph out(static_cast<int>(part.size()));
  for (std::size_t i = 0; i < part.size(); ++i) {
    for (int w : g.neighbors(part[i])) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) out.add_edge(static_cast<int>(i), j);
    }
  }
  return out;
}

bool component_in(const SparseGraph& g, const std::vector<int>& part, const GraphClass& f) {
  if (static_cast<int>(part.size()) <= kMaxOrder) return f.contains(g.induced_small(part));
  return f.contains(sparse_induced(g, part));
}

}  // namespace

Fragment frag_restricted(const SparseGraph& g, const GraphClass& f) {
  const ComponentLabels comps = components(g);
  Fragment out;
  if (comps.parts.empty()) return out;
  std::vector<int> sizes;
  for (const auto& p : comps.parts) sizes.push_back(static_cast<int>(p.size()));
  const std::size_t big = largest_index(sizes);
  for (std::size_t i = 0; i < comps.parts.size(); ++i) {
    if (i == big || !component_in(g, comps.parts[i], f)) continue;
    out.order += sizes[i];
    if (sizes[i] > kMaxOrder) {
      ++out.oversized_parts;
      out.oversized_order += sizes[i];
    } else {
      out.parts.push_back(canonical_form(g.induced_small(comps.parts[i])));
    }
  }
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

int kappa_plus(const SparseGraph& g, const GraphClass& f) {
  const ComponentLabels comps = components(g);
  int in_f = 0;
  for (const auto& p : comps.parts) in_f += component_in(g, p, f) ? 1 : 0;
  return in_f == static_cast<int>(comps.parts.size()) ? in_f : in_f + 1;
}

}  // namespace pendant_lab
