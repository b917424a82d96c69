#include "graphflag/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "graphflag/errors.hpp"

namespace graphflag {

namespace {

void check_pair(int n, int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " has an endpoint outside 0.." + std::to_string(n - 1));
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

}  // namespace

Graph::Graph(int order) {
  if (order < 0) throw std::invalid_argument("negative vertex count");
  check_limit("graph order", order, kMaxOrder);
  rows_.assign(order, 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    check_pair(order, e.u, e.v);
    if (has_edge(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
    rows_[e.u] |= VertexMask{1} << e.v;
    rows_[e.v] |= VertexMask{1} << e.u;
  }
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  Graph g(static_cast<int>(rows.size()));
  for (int v = 0; v < g.order(); ++v) {
    if ((rows[v] >> v) & 1U) throw std::invalid_argument("self-loop in adjacency rows");
    if (g.order() < 32 && (rows[v] >> g.order()) != 0) {
      throw std::invalid_argument("adjacency row refers to a missing vertex");
    }
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (((rows[u] >> v) & 1U) != ((rows[v] >> u) & 1U)) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
  }
  g.rows_ = std::move(rows);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask r : rows_) twice += std::popcount(r);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

VertexMask Graph::all_vertices() const {
  return order() == 32 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v = u + 1; v < order(); ++v) {
      if (has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_pair(order(), u, v);
  Graph g = *this;
  g.rows_[u] |= VertexMask{1} << v;
  g.rows_[v] |= VertexMask{1} << u;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_pair(order(), u, v);
  Graph g = *this;
  g.rows_[u] &= ~(VertexMask{1} << v);
  g.rows_[v] &= ~(VertexMask{1} << u);
  return g;
}

Graph Graph::induced(VertexMask keep) const {
  std::vector<int> label(order(), -1);
  int k = 0;
  for (int v = 0; v < order(); ++v) {
    if ((keep >> v) & 1U) label[v] = k++;
  }
  Graph g(k);
  for (int u = 0; u < order(); ++u) {
    if (label[u] < 0) continue;
    for (int v = 0; v < order(); ++v) {
      if (label[v] >= 0 && has_edge(u, v)) g.rows_[label[u]] |= VertexMask{1} << label[v];
    }
  }
  return g;
}

Graph Graph::relabelled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  Graph g(order());
  for (int u = 0; u < order(); ++u) {
    for (int v = 0; v < order(); ++v) {
      if (has_edge(u, v)) g.rows_[perm[u]] |= VertexMask{1} << perm[v];
    }
  }
  return g;
}

std::uint64_t Graph::adjacency_bits() const {
  const int n = order();
  const int pairs = pair_count(n);
  check_limit("adjacency bit string length", pairs, 64);
  std::uint64_t bits = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (has_edge(u, v)) bits |= std::uint64_t{1} << (pairs - 1 - pair_index(n, u, v));
    }
  }
  return bits;
}

Graph Graph::from_adjacency_bits(int order, std::uint64_t bits) {
  const int pairs = pair_count(order);
  check_limit("adjacency bit string length", pairs, 64);
  Graph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if ((bits >> (pairs - 1 - pair_index(order, u, v))) & 1U) {
        g.rows_[u] |= VertexMask{1} << v;
        g.rows_[v] |= VertexMask{1} << u;
      }
    }
  }
  return g;
}

OptionalGraph::OptionalGraph(Graph regular) : OptionalGraph(regular, Graph(regular.order())) {}

OptionalGraph::OptionalGraph(Graph regular, Graph optional)
    : regular_(std::move(regular)), optional_(std::move(optional)) {
  if (regular_.order() != optional_.order()) {
    throw std::invalid_argument("regular and optional edge sets use different vertex counts");
  }
  for (int v = 0; v < order(); ++v) {
    if (regular_.neighbors(v) & optional_.neighbors(v)) {
      throw std::invalid_argument("a pair at vertex " + std::to_string(v) +
                                  " is both regular and optional");
    }
  }
}

// Grammar: n ":" [edge ("," edge)*], edge = ["?"] i "-" j.
OptionalGraph parse_graph(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&](const char* what) {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(std::string("expected ") + what, pos);
    }
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) throw ParseError(std::string(what) + " is too large", pos);
      ++pos;
    }
    return static_cast<int>(value);
  };
  auto expect = [&](char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };

  const int n = number("vertex count");
  check_limit("graph order", n, kMaxOrder);
  expect(':');
  std::vector<Edge> regular;
  std::vector<Edge> optional;
  std::set<Edge> seen;
  skip_space();
  if (pos < text.size()) {
    while (true) {
      skip_space();
      const std::size_t edge_pos = pos;
      bool is_optional = false;
      if (pos < text.size() && text[pos] == '?') {
        is_optional = true;
        ++pos;
      }
      const int i = number("vertex index");
      expect('-');
      const int j = number("vertex index");
      if (i == j) throw ParseError("self-loop at vertex " + std::to_string(i), edge_pos);
      if (i >= n || j >= n) {
        throw ParseError("vertex index out of range 0.." + std::to_string(n - 1), edge_pos);
      }
      Edge e{std::min(i, j), std::max(i, j)};
      if (!seen.insert(e).second) {
        throw ParseError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v),
                         edge_pos);
      }
      (is_optional ? optional : regular).push_back(e);
      skip_space();
      if (pos == text.size()) break;
      expect(',');
    }
  }
  return OptionalGraph(Graph(n, regular), Graph(n, optional));
}

std::string format_graph(const Graph& g) { return format_graph(OptionalGraph(g)); }

std::string format_graph(const OptionalGraph& g) {
  std::ostringstream out;
  out << g.order() << ':';
  bool first = true;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const bool reg = g.regular().has_edge(u, v);
      const bool opt = g.optional().has_edge(u, v);
      if (!reg && !opt) continue;
      if (!first) out << ',';
      first = false;
      out << (opt ? "?" : "") << u << '-' << v;
    }
  }
  return out.str();
}

Graph complement(const Graph& g) {
  std::vector<VertexMask> rows(g.order());
  const VertexMask all = g.all_vertices();
  for (int v = 0; v < g.order(); ++v) rows[v] = all & ~g.neighbors(v) & ~(VertexMask{1} << v);
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  check_limit("graph order", a.order() + b.order(), kMaxOrder);
  std::vector<VertexMask> rows;
  rows.reserve(a.order() + b.order());
  for (int v = 0; v < a.order(); ++v) rows.push_back(a.neighbors(v));
  for (int v = 0; v < b.order(); ++v) rows.push_back(b.neighbors(v) << a.order());
  return Graph::from_rows(std::move(rows));
}

OptionalGraph disjoint_union(const OptionalGraph& a, const OptionalGraph& b) {
  return OptionalGraph(disjoint_union(a.regular(), b.regular()),
                       disjoint_union(a.optional(), b.optional()));
}

std::string CanonicalKey::to_string() const {
  std::string out = std::to_string(order) + ":";
  const int pairs = pair_count(order);
  for (int k = pairs - 1; k >= 0; --k) out += ((bits >> k) & 1U) ? '1' : '0';
  return out;
}

namespace {

struct PermutationSearchResult {
  std::uint64_t regular = 0;
  std::uint64_t optional = 0;
  std::vector<int> permutation;
};

// Exhaustive n! search for the relabelling that minimises (regular, optional) bit strings.
PermutationSearchResult search_min_labelling(int n, const std::vector<Edge>& regular,
                                             const std::vector<Edge>& optional) {
  check_limit("canonical form order", n, kMaxCanonicalOrder);
  const int pairs = pair_count(n);
  // shift[i][j] = bit position of pair {i, j}
  std::array<std::array<std::uint8_t, kMaxCanonicalOrder>, kMaxCanonicalOrder> shift{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        shift[i][j] = static_cast<std::uint8_t>(pairs - 1 - pair_index(n, std::min(i, j),
                                                                         std::max(i, j)));
      }
    }
  }
  PermutationSearchResult best;
  best.regular = std::numeric_limits<std::uint64_t>::max();
  best.optional = std::numeric_limits<std::uint64_t>::max();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  best.permutation = perm;
  do {
    std::uint64_t reg = 0;
    for (const Edge& e : regular) reg |= std::uint64_t{1} << shift[perm[e.u]][perm[e.v]];
    if (reg > best.regular) continue;
    std::uint64_t opt = 0;
    for (const Edge& e : optional) opt |= std::uint64_t{1} << shift[perm[e.u]][perm[e.v]];
    if (reg < best.regular || opt < best.optional) {
      best.regular = reg;
      best.optional = opt;
      best.permutation = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) {
    best.regular = 0;
    best.optional = 0;
  }
  return best;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  auto found = search_min_labelling(g.order(), g.edges(), {});
  return {Graph::from_adjacency_bits(g.order(), found.regular), std::move(found.permutation)};
}

CanonicalKey canonical_key(const Graph& g) {
  return {g.order(), search_min_labelling(g.order(), g.edges(), {}).regular};
}

OptionalCanonicalKey canonical_key(const OptionalGraph& g) {
  auto found = search_min_labelling(g.order(), g.regular().edges(), g.optional().edges());
  return {g.order(), found.regular, found.optional};
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  check_limit("enumeration order", n, kMaxEnumerationOrder);

  static std::mutex mutex;
  static std::vector<std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) cache.push_back({0});  // the graph on zero vertices
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());  // order being built
    std::set<std::uint64_t> classes;
    for (std::uint64_t bits : cache.back()) {
      const Graph base = Graph::from_adjacency_bits(m - 1, bits);
      std::vector<VertexMask> rows(m, 0);
      for (int v = 0; v < m - 1; ++v) rows[v] = base.neighbors(v);
      for (VertexMask attach = 0; attach < (VertexMask{1} << (m - 1)); ++attach) {
        std::vector<VertexMask> extended = rows;
        extended[m - 1] = attach;
        for (int v = 0; v < m - 1; ++v) {
          if ((attach >> v) & 1U) extended[v] |= VertexMask{1} << (m - 1);
        }
        classes.insert(canonical_key(Graph::from_rows(std::move(extended))).bits);
      }
    }
    cache.emplace_back(classes.begin(), classes.end());
  }
  std::vector<Graph> out;
  out.reserve(cache[n].size());
  for (std::uint64_t bits : cache[n]) out.push_back(Graph::from_adjacency_bits(n, bits));
  return out;
}

std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.all_vertices();
  while (unseen) {
    const int start = std::countr_zero(unseen);
    VertexMask comp = VertexMask{1} << start;
    VertexMask frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexMask fresh = g.neighbors(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

Partition connected_partition(const Graph& g) {
  std::vector<int> sizes;
  for (VertexMask c : components(g)) sizes.push_back(std::popcount(c));
  return Partition(std::move(sizes));
}

bool is_acyclic(const Graph& g) {
  return g.edge_count() + static_cast<int>(components(g).size()) == g.order();
}

GraphSum::GraphSum(const Graph& g, const Integer& coefficient) : order_(g.order()) {
  add(g, coefficient);
}

Integer GraphSum::coefficient(const CanonicalKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GraphSum::add(const Graph& g, const Integer& coefficient) {
  add(canonical_key(g), coefficient);
}

void GraphSum::add(const CanonicalKey& key, const Integer& coefficient) {
  if (key.order != order_) {
    if (!terms_.empty()) {
      throw std::invalid_argument("formal sums mix graphs on " + std::to_string(order_) +
                                  " and " + std::to_string(key.order) + " vertices");
    }
    order_ = key.order;
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

GraphSum& GraphSum::operator+=(const GraphSum& other) {
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

GraphSum& GraphSum::operator-=(const GraphSum& other) {
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

GraphSum& GraphSum::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

GraphSum expand(const OptionalGraph& og) {
  const std::vector<Edge> choices = og.optional().edges();
  const int c = static_cast<int>(choices.size());
  check_limit("optional edge count", c, kMaxOptionalEdges);
  GraphSum sum(og.order());
  std::vector<VertexMask> base(og.order());
  for (int v = 0; v < og.order(); ++v) base[v] = og.regular().neighbors(v);
  for (std::uint32_t chosen = 0; chosen < (std::uint32_t{1} << c); ++chosen) {
    std::vector<VertexMask> rows = base;
    for (int k = 0; k < c; ++k) {
      if ((chosen >> k) & 1U) {
        rows[choices[k].u] |= VertexMask{1} << choices[k].v;
        rows[choices[k].v] |= VertexMask{1} << choices[k].u;
      }
    }
    const bool negative = (c - std::popcount(chosen)) % 2 != 0;
    sum.add(Graph::from_rows(std::move(rows)), negative ? Integer(-1) : Integer(1));
  }
  return sum;
}

GraphSum disjoint_union(const GraphSum& a, const GraphSum& b) {
  GraphSum out(a.order() + b.order());
  for (const auto& [ka, ca] : a.terms()) {
    const Graph ga = ka.graph();
    for (const auto& [kb, cb] : b.terms()) {
      out.add(disjoint_union(ga, kb.graph()), ca * cb);
    }
  }
  return out;
}

std::string format_sum(const GraphSum& s) {
  if (s.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : s.terms()) {
    if (!first) out << ' ';
    first = false;
    out << c.get_str() << '*' << format_graph(key.graph());
  }
  return out.str();
}

}  // namespace graphflag
