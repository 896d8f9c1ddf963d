#include "pendant_lab/iso.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pendant_lab/error.hpp"
#include "graph_io.hpp"

namespace pendant_lab {

namespace {

class BitWriter {
 public:
  void push(std::uint32_t value, int width) {
    for (int b = width - 1; b >= 0; --b) {
      if ((value >> b) & 1U) words_[pos_ / 64] |= std::uint64_t{1} << (63 - pos_ % 64);
      ++pos_;
    }
  }
  std::array<std::uint64_t, 2> words() const { return words_; }

 private:
  std::array<std::uint64_t, 2> words_{};
  int pos_ = 0;
};

bool string_bit(const std::array<std::uint64_t, 2>& words, int pos) {
  return (words[static_cast<std::size_t>(pos / 64)] >> (63 - pos % 64)) & 1U;
}

// Branch-and-bound search for the maximal canonical string. At each depth
// only the candidates with the maximal next column can lead to the maximum.
// Vertices with identical neighbourhoods (up to each other) are
// interchangeable by an automorphism, so one representative per class is
// explored and the leaf count is scaled by the class size.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) twin_class_[v] = -1;
    int classes = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (twin_class_[v] >= 0) continue;
      twin_class_[v] = classes;
      for (Vertex u = v + 1; u < n_; ++u) {
        if (twin_class_[u] < 0 &&
            (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) {
          twin_class_[u] = classes;
        }
      }
      ++classes;
    }
  }

  CanonicalResult run(int forced_root) {
    if (forced_root >= 0) {
      order_[0] = forced_root;
      cur_[0] = 0;
      search(1, bit(forced_root), 1);
    } else {
      search(0, 0, 1);
    }
    CanonicalResult out;
    BitWriter w;
    for (int k = 1; k < n_; ++k) w.push(best_[k], k);
    out.form.n = static_cast<std::uint8_t>(n_);
    out.form.rooted = forced_root >= 0;
    out.form.words = w.words();
    out.automorphisms = count_;
    out.labelling.assign(best_order_.begin(), best_order_.begin() + n_);
    return out;
  }

 private:
  // -1, 0, 1 as cur_[1..k) is better than, equal to or worse than best_[1..k).
  int compare_prefix(int k) const {
    for (int i = 1; i < k; ++i) {
      if (cur_[i] != best_[i]) return cur_[i] > best_[i] ? -1 : 1;
    }
    return 0;
  }

  void search(int k, VertexSet used, std::uint64_t mult) {
    int status = have_best_ ? compare_prefix(k) : -1;
    if (status > 0) return;
    if (k == n_) {
      if (status < 0) {
        std::copy(cur_.begin(), cur_.end(), best_.begin());
        std::copy(order_.begin(), order_.end(), best_order_.begin());
        count_ = mult;
        have_best_ = true;
      } else {
        count_ += mult;
      }
      return;
    }
    std::array<std::uint32_t, kMaxOrder> col{};
    std::uint32_t max_col = 0;
    const VertexSet unused = g_.vertex_set() & ~used;
    for_each_vertex(unused, [&](Vertex v) {
      std::uint32_t c = 0;
      for (int i = 0; i < k; ++i) c = (c << 1) | (g_.has_edge(order_[i], v) ? 1U : 0U);
      col[v] = c;
      max_col = std::max(max_col, c);
    });
    if (status == 0 && max_col < best_[k]) return;
    std::uint32_t seen_classes = 0;
    for_each_vertex(unused, [&](Vertex v) {
      if (col[v] != max_col) return;
      const int cls = twin_class_[v];
      if ((seen_classes >> cls) & 1U) return;
      seen_classes |= 1U << cls;
      std::uint64_t twins = 0;
      for_each_vertex(unused, [&](Vertex u) { twins += twin_class_[u] == cls ? 1 : 0; });
      order_[k] = v;
      cur_[k] = max_col;
      search(k + 1, used | bit(v), mult * twins);
    });
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxOrder> twin_class_{};
  std::array<Vertex, kMaxOrder> order_{};
  std::array<Vertex, kMaxOrder> best_order_{};
  std::array<std::uint32_t, kMaxOrder> cur_{};
  std::array<std::uint32_t, kMaxOrder> best_{};
  bool have_best_ = false;
  std::uint64_t count_ = 0;
};

}  // namespace

std::string CanonicalForm::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int bits = pair_count(n);
  const int digits = std::max(1, (bits + 3) / 4);
  std::string out = std::to_string(n) + (rooted ? "r:" : ":");
  for (int d = 0; d < digits; ++d) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      int pos = d * 4 + b;
      nibble = (nibble << 1) | ((pos < bits && string_bit(words, pos)) ? 1 : 0);
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw ParseError("bad canonical form: " + text);
  std::string head = text.substr(0, colon);
  CanonicalForm out;
  if (head.back() == 'r') {
    out.rooted = true;
    head.pop_back();
  }
  int n = 0;
  try {
    n = std::stoi(head);
  } catch (const std::exception&) {
    throw ParseError("bad canonical form: " + text);
  }
  if (n < 0 || n > kMaxOrder) throw ParseError("bad canonical form order: " + text);
  out.n = static_cast<std::uint8_t>(n);
  const int bits = pair_count(n);
  const std::string hex = text.substr(colon + 1);
  if (hex.size() != static_cast<std::size_t>(std::max(1, (bits + 3) / 4))) {
    throw ParseError("bad canonical form length: " + text);
  }
  for (std::size_t d = 0; d < hex.size(); ++d) {
    int nibble = 0;
    char c = hex[d];
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else {
      throw ParseError("bad canonical form digit: " + text);
    }
    for (int b = 0; b < 4; ++b) {
      int pos = static_cast<int>(d) * 4 + b;
      if ((nibble >> (3 - b)) & 1) {
        if (pos >= bits) throw ParseError("bad canonical form padding: " + text);
        out.words[static_cast<std::size_t>(pos / 64)] |= std::uint64_t{1} << (63 - pos % 64);
      }
    }
  }
  return out;
}

Graph CanonicalForm::to_graph() const {
  std::vector<Edge> es;
  int pos = 0;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < k; ++i, ++pos) {
      if (string_bit(words, pos)) es.emplace_back(i, k);
    }
  }
  return Graph::from_edges(n, es);
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& c) const noexcept {
  std::uint64_t h = c.words[0] * 0x9E3779B97F4A7C15ULL;
  h ^= (c.words[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
  h ^= static_cast<std::uint64_t>(c.n) << 1 | (c.rooted ? 1U : 0U);
  return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
}

RootedGraph::RootedGraph(Graph graph, Vertex root) : graph_(std::move(graph)), root_(root) {
  if (root < 0 || root >= graph_.order()) throw ContractError("root is not a vertex");
  if (!is_connected(graph_)) throw ContractError("rooted graph must be connected");
}

RootedGraph parse_rooted_graph(const std::string& text) {
  std::istringstream in(text);
  auto parsed = detail::parse_graph_text(in);
  if (!parsed.root) throw ParseError("rooted graph file needs a `root r` line");
  return RootedGraph(parsed.graph, *parsed.root);
}

std::string format_rooted_graph(const RootedGraph& h) {
  return format_graph(h.graph()) + "root " + std::to_string(h.root() + 1) + "\n";
}

CanonicalResult canonicalize(const Graph& g) { return CanonicalSearch(g).run(-1); }

CanonicalResult canonicalize_rooted(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.order()) throw ContractError("root is not a vertex");
  return CanonicalSearch(g).run(root);
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

CanonicalForm canonical_form(const RootedGraph& h) {
  return canonicalize_rooted(h.graph(), h.root()).form;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const RootedGraph& a, const RootedGraph& b) {
  if (a.order() != b.order() || a.graph().size() != b.graph().size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::uint64_t aut(const Graph& g) { return canonicalize(g).automorphisms; }

std::uint64_t aut_rooted(const RootedGraph& h) {
  return canonicalize_rooted(h.graph(), h.root()).automorphisms;
}

std::vector<VertexSet> root_orbits(const Graph& h) {
  std::map<CanonicalForm, VertexSet> by_form;
  for (Vertex r = 0; r < h.order(); ++r) by_form[canonicalize_rooted(h, r).form] |= bit(r);
  std::vector<VertexSet> out;
  for (const auto& [form, orbit] : by_form) out.push_back(orbit);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
  return out;
}

}  // namespace pendant_lab
