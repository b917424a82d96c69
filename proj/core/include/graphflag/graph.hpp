#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphflag/integer.hpp"
#include "graphflag/partition.hpp"

namespace graphflag {

using VertexMask = std::uint32_t;

// Largest vertex count a Graph can hold.
inline constexpr int kMaxOrder = 32;
// Largest vertex count accepted by the exhaustive canonical-form search.
inline constexpr int kMaxCanonicalOrder = 10;
// Largest vertex count accepted by enumerate_graphs.
inline constexpr int kMaxEnumerationOrder = 7;
// Largest optional-edge count accepted by expand.
inline constexpr int kMaxOptionalEdges = 20;

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Index of the pair {i, j}, i < j, in the lexicographic pair order of an n-vertex graph.
constexpr int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Simple undirected graph on vertices 0..n-1, stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph from_rows(std::vector<VertexMask> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int edge_count() const;
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return rows_[v]; }
  int degree(int v) const;
  VertexMask all_vertices() const;

  // Edges in lexicographic pair order.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  // Subgraph induced on the vertices of keep, relabelled 0..k-1 preserving order.
  Graph induced(VertexMask keep) const;
  // Same vertex set, relabelled so that vertex v becomes perm[v].
  Graph relabelled(std::span<const int> perm) const;

  // Bit string of length n(n-1)/2 in pair order, pair 0 in the most significant position.
  std::uint64_t adjacency_bits() const;
  static Graph from_adjacency_bits(int order, std::uint64_t bits);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> rows_;
};

// Graph with regular edges E and optional edges C, E and C disjoint.
class OptionalGraph {
 public:
  OptionalGraph() = default;
  explicit OptionalGraph(Graph regular);
  OptionalGraph(Graph regular, Graph optional);

  int order() const { return regular_.order(); }
  const Graph& regular() const { return regular_; }
  const Graph& optional() const { return optional_; }
  bool is_plain() const { return optional_.edge_count() == 0; }

  friend bool operator==(const OptionalGraph&, const OptionalGraph&) = default;

 private:
  Graph regular_;
  Graph optional_;
};

OptionalGraph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
std::string format_graph(const OptionalGraph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
OptionalGraph disjoint_union(const OptionalGraph& a, const OptionalGraph& b);

// Key of an isomorphism class: the lexicographically least adjacency bit string.
struct CanonicalKey {
  int order = 0;
  std::uint64_t bits = 0;

  Graph graph() const { return Graph::from_adjacency_bits(order, bits); }
  // "n:bitstring"
  std::string to_string() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  Graph graph;
  // permutation[v] is the label vertex v of the input receives in the canonical graph.
  std::vector<int> permutation;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

// Isomorphism key of a graph with two edge colours; plain graphs agree with canonical_key.
struct OptionalCanonicalKey {
  int order = 0;
  std::uint64_t regular = 0;
  std::uint64_t optional = 0;

  friend auto operator<=>(const OptionalCanonicalKey&, const OptionalCanonicalKey&) = default;
};

OptionalCanonicalKey canonical_key(const OptionalGraph& g);

// One representative per isomorphism class, ascending by canonical bit string.
std::vector<Graph> enumerate_graphs(int n);

// Sizes of the connected components.
Partition connected_partition(const Graph& g);

// Vertex masks of the connected components, ordered by smallest vertex.
std::vector<VertexMask> components(const Graph& g);

bool is_acyclic(const Graph& g);

// Integer-coefficient formal sum of isomorphism classes of n-vertex graphs.
class GraphSum {
 public:
  using Terms = std::map<CanonicalKey, Integer>;

  explicit GraphSum(int order = 0) : order_(order) {}
  explicit GraphSum(const Graph& g, const Integer& coefficient = 1);

  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const CanonicalKey& key) const;

  void add(const Graph& g, const Integer& coefficient);
  void add(const CanonicalKey& key, const Integer& coefficient);

  GraphSum& operator+=(const GraphSum& other);
  GraphSum& operator-=(const GraphSum& other);
  GraphSum& operator*=(const Integer& scalar);
  friend GraphSum operator+(GraphSum a, const GraphSum& b) { return a += b; }
  friend GraphSum operator-(GraphSum a, const GraphSum& b) { return a -= b; }
  friend GraphSum operator*(const Integer& s, GraphSum a) { return a *= s; }

  friend bool operator==(const GraphSum&, const GraphSum&) = default;

 private:
  int order_;
  Terms terms_;
};

// Alternating sum over B subset of C of (V, E u B) with sign (-1)^{|C|-|B|}.
GraphSum expand(const OptionalGraph& og);

// Bilinear extension of disjoint union to formal sums.
GraphSum disjoint_union(const GraphSum& a, const GraphSum& b);

std::string format_sum(const GraphSum& s);

}  // namespace graphflag
