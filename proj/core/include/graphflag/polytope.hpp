#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphflag/exactlin.hpp"
#include "graphflag/graph.hpp"
#include "graphflag/partition.hpp"
#include "graphflag/vectors.hpp"

namespace graphflag {

inline constexpr int kMaxPolytopeOrder = 6;
inline constexpr std::size_t kMaxFacetPoints = 40;
inline constexpr std::size_t kMaxFacetDimension = 11;

// Rank of the concise flag vectors of all n-vertex graphs.
std::size_t span_dimension(int n);

// Rows indexed by partitions (canonical order), columns by isomorphism classes
// in enumerate_graphs order; entry = concise coefficient.
std::vector<std::vector<Integer>> class_matrix(int n);

// coefficients . x + offset >= 0
struct Inequality {
  std::vector<Integer> coefficients;
  Integer offset;

  Integer evaluate(const std::vector<Integer>& x) const;
  std::string to_string() const;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct HullPoint {
  Graph graph;
  CanonicalKey key;
  ConciseVector vector;
  std::vector<Integer> coordinates;
  // no other class has the same flag vector
  bool distinct = true;
  bool vertex = false;
  // vertex: separator . p + separator_offset >= 0 on every other point, < 0 here
  RationalVector separator;
  Rational separator_offset;
  // non-vertex: convex weights on other points (indices into HullReport::points)
  std::vector<std::pair<std::size_t, Rational>> combination;
};

struct HullReport {
  int n = 0;
  std::vector<Partition> coordinates;
  std::vector<HullPoint> points;
  std::optional<std::vector<Inequality>> facets;

  std::size_t vertex_count() const;
  std::size_t distinct_count() const;
};

HullReport delta_vertices(int n);

// Facets of the convex hull of the points within their affine hull, as
// coprime integer inequalities with inner normals. Normals are supported on a
// set of coordinates that parametrise the affine hull.
std::vector<Inequality> delta_facets(const std::vector<std::vector<Integer>>& points);

// delta_vertices(n) with facets filled in.
HullReport delta_hull(int n);

struct NullspaceReport {
  int n = 0;
  std::size_t class_count = 0;
  std::size_t partition_count = 0;
  std::size_t kernel_dim = 0;
  std::size_t cycle_span_dim = 0;
  bool spans = false;
  // optional-cycle graphs examined (up to isomorphism) before the span stopped growing
  std::size_t relations_examined = 0;
  // integer kernel basis as formal sums of graphs
  std::vector<GraphSum> kernel;
};

NullspaceReport nullspace_report(int n);

std::string to_text(const HullReport& report);
std::string to_text(const NullspaceReport& report);

}  // namespace graphflag
