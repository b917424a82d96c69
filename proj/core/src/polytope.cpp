#include "graphflag/polytope.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graphflag/errors.hpp"
#include "graphflag/flagvec.hpp"

namespace graphflag {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  check_limit("polytope order", n, kMaxPolytopeOrder);
}

Integer lcm_of_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const Rational& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

// Scales a rational vector to coprime integers, keeping its direction.
std::vector<Integer> primitive_integer(const RationalVector& v) {
  const Integer l = lcm_of_denominators(v);
  std::vector<Integer> out;
  Integer g = 0;
  for (const Rational& q : v) {
    Integer z = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (g > 1) {
    for (Integer& z : out) z /= g;
  }
  return out;
}

}  // namespace

std::vector<std::vector<Integer>> class_matrix(int n) {
  check_order(n);
  const auto classes = enumerate_graphs(n);
  const auto parts = enumerate_partitions(n);
  std::vector<std::vector<Integer>> m(parts.size(), std::vector<Integer>(classes.size()));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto column = concise_flag_vector(classes[c]).dense();
    for (std::size_t r = 0; r < parts.size(); ++r) m[r][c] = column[r];
  }
  return m;
}

std::size_t span_dimension(int n) { return rank(RationalMatrix::from_rows(class_matrix(n))); }

Integer Inequality::evaluate(const std::vector<Integer>& x) const {
  if (x.size() != coefficients.size()) throw std::invalid_argument("inequality size mismatch");
  Integer sum = offset;
  for (std::size_t k = 0; k < x.size(); ++k) sum += coefficients[k] * x[k];
  return sum;
}

std::string Inequality::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) out << ',';
    out << coefficients[k].get_str();
  }
  out << ") . x + " << offset.get_str() << " >= 0";
  return out.str();
}

std::size_t HullReport::vertex_count() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const HullPoint& p) { return p.vertex; }));
}

std::size_t HullReport::distinct_count() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const HullPoint& p) { return p.distinct; }));
}

HullReport delta_vertices(int n) {
  check_order(n);
  HullReport report;
  report.n = n;
  report.coordinates = enumerate_partitions(n);
  for (const Graph& g : enumerate_graphs(n)) {
    HullPoint p;
    p.graph = g;
    p.key = canonical_key(g);
    p.vector = concise_flag_vector(g);
    p.coordinates = p.vector.dense();
    report.points.push_back(std::move(p));
  }

  // representative index of each distinct coordinate vector
  std::map<std::vector<Integer>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < report.points.size(); ++k) {
    groups[report.points[k].coordinates].push_back(k);
  }
  std::vector<std::size_t> reps;
  for (const auto& [coords, members] : groups) {
    reps.push_back(members.front());
    if (members.size() > 1) {
      for (std::size_t k : members) report.points[k].distinct = false;
    }
  }
  std::sort(reps.begin(), reps.end());

  const std::size_t dim = report.coordinates.size();
  for (std::size_t target : reps) {
    // is coordinates[target] a convex combination of the other distinct points?
    std::vector<std::size_t> others;
    for (std::size_t r : reps) {
      if (r != target) others.push_back(r);
    }
    RationalMatrix eq(dim + 1, others.size());
    RationalVector rhs(dim + 1);
    for (std::size_t j = 0; j < others.size(); ++j) {
      for (std::size_t i = 0; i < dim; ++i) eq(i, j) = report.points[others[j]].coordinates[i];
      eq(dim, j) = 1;
    }
    for (std::size_t i = 0; i < dim; ++i) rhs[i] = report.points[target].coordinates[i];
    rhs[dim] = 1;

    const LpResult lp = lp_feasible(eq, rhs);
    const auto& members = groups[report.points[target].coordinates];
    for (std::size_t k : members) {
      HullPoint& p = report.points[k];
      p.vertex = !lp.feasible;
      if (lp.feasible) {
        for (std::size_t j = 0; j < others.size(); ++j) {
          if (lp.point[j] != 0) p.combination.emplace_back(others[j], lp.point[j]);
        }
      } else {
        p.separator.assign(lp.farkas.begin(), lp.farkas.begin() + static_cast<std::ptrdiff_t>(dim));
        p.separator_offset = lp.farkas[dim];
      }
    }
  }
  return report;
}

namespace {

using ConstraintSet = std::uint64_t;

struct Ray {
  RationalVector y;
  ConstraintSet tight = 0;
};

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  }
  return s;
}

// Inverse of a square rational matrix by Gauss-Jordan elimination.
RationalMatrix inverse(const RationalMatrix& s) {
  const std::size_t d = s.rows();
  RationalMatrix aug(d, 2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) aug(r, c) = s(r, c);
    aug(r, d + r) = 1;
  }
  const RowEchelon e = reduced_row_echelon(aug);
  if (e.pivot_columns.size() < d || e.pivot_columns[d - 1] != d - 1) {
    throw std::logic_error("initial constraint block is singular");
  }
  RationalMatrix inv(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) inv(r, c) = e.reduced(r, d + c);
  }
  return inv;
}

// Extreme rays of the pointed cone { y : a_i . y >= 0 } by double description.
std::vector<Ray> extreme_rays(const std::vector<RationalVector>& rows) {
  const std::size_t dim = rows.front().size();

  // initial block of dim linearly independent constraints
  std::vector<std::size_t> initial;
  std::vector<RationalVector> chosen;
  for (std::size_t i = 0; i < rows.size() && initial.size() < dim; ++i) {
    chosen.push_back(rows[i]);
    if (rank(RationalMatrix::from_rows(chosen)) == chosen.size()) {
      initial.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (initial.size() < dim) throw std::logic_error("constraint rows do not span the space");

  const RationalMatrix inv = inverse(RationalMatrix::from_rows(chosen));
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    Ray r;
    r.y = inv.column(k);
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != k) r.tight |= ConstraintSet{1} << initial[j];
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> used(rows.size(), false);
  for (std::size_t i : initial) used[i] = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    const ConstraintSet bit = ConstraintSet{1} << i;
    std::vector<Rational> value(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) value[k] = dot(rows[i], rays[k].y);

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (value[k] >= 0) {
        Ray r = rays[k];
        if (value[k] == 0) r.tight |= bit;
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        const ConstraintSet common = rays[p].tight & rays[q].tight;
        if (std::popcount(common) + 2 < static_cast<int>(dim)) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k != p && k != q && (rays[k].tight & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r;
        r.y.resize(dim);
        for (std::size_t c = 0; c < dim; ++c) {
          r.y[c] = value[p] * rays[q].y[c] - value[q] * rays[p].y[c];
        }
        r.tight = common | bit;
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    used[i] = true;
  }
  return rays;
}

}  // namespace

std::vector<Inequality> delta_facets(const std::vector<std::vector<Integer>>& points) {
  check_limit("facet enumeration point count", static_cast<long>(points.size()),
              static_cast<long>(kMaxFacetPoints));
  if (points.empty()) return {};
  const std::size_t ambient = points.front().size();
  check_limit("facet enumeration dimension", static_cast<long>(ambient),
              static_cast<long>(kMaxFacetDimension));
  for (const auto& p : points) {
    if (p.size() != ambient) throw std::invalid_argument("points of different dimensions");
  }

  // affine hull: pivot coordinates of the difference vectors parametrise it
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(ambient);
    for (std::size_t k = 0; k < ambient; ++k) d[k] = Rational(points[i][k] - points[0][k]);
    diffs.push_back(std::move(d));
  }
  std::vector<std::size_t> coords;
  if (!diffs.empty()) coords = reduced_row_echelon(RationalMatrix::from_rows(diffs)).pivot_columns;
  const std::size_t d = coords.size();
  if (d == 0) return {};

  // homogenised rows (1, projected point)
  std::vector<RationalVector> rows;
  for (const auto& p : points) {
    RationalVector r(d + 1);
    r[0] = 1;
    for (std::size_t k = 0; k < d; ++k) r[k + 1] = Rational(p[coords[k]]);
    rows.push_back(std::move(r));
  }

  std::set<std::vector<Integer>> seen;
  std::vector<Inequality> facets;
  for (const Ray& ray : extreme_rays(rows)) {
    const std::vector<Integer> y = primitive_integer(ray.y);
    if (!seen.insert(y).second) continue;
    Inequality f;
    f.offset = y[0];
    f.coefficients.assign(ambient, Integer(0));
    for (std::size_t k = 0; k < d; ++k) f.coefficients[coords[k]] = y[k + 1];
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Inequality& a, const Inequality& b) {
    return std::tie(a.coefficients, a.offset) < std::tie(b.coefficients, b.offset);
  });

  for (const Inequality& f : facets) {
    std::vector<RationalVector> tight;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Integer value = f.evaluate(points[i]);
      if (value < 0) throw std::logic_error("facet inequality violated by an input point");
      if (value == 0) tight.push_back(rows[i]);
    }
    if (tight.empty() || rank(RationalMatrix::from_rows(tight)) != d) {
      throw std::logic_error("facet does not support an affinely spanning set of points");
    }
  }
  return facets;
}

HullReport delta_hull(int n) {
  HullReport report = delta_vertices(n);
  std::vector<std::vector<Integer>> points;
  std::set<std::vector<Integer>> seen;
  for (const HullPoint& p : report.points) {
    if (seen.insert(p.coordinates).second) points.push_back(p.coordinates);
  }
  report.facets = delta_facets(points);
  return report;
}

namespace {

// Incrementally maintained echelon basis for rank measurements.
class EchelonBasis {
 public:
  // true when v enlarged the span
  bool insert(RationalVector v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rational factor = v[pivot] / row[pivot];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * row[c];
    }
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0) {
        rows_.emplace_back(c, std::move(v));
        return true;
      }
    }
    return false;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, RationalVector>> rows_;
};

}  // namespace

NullspaceReport nullspace_report(int n) {
  check_order(n);
  NullspaceReport report;
  report.n = n;
  const auto classes = enumerate_graphs(n);
  report.class_count = classes.size();
  report.partition_count = enumerate_partitions(n).size();

  std::map<CanonicalKey, std::size_t> column_of;
  for (std::size_t c = 0; c < classes.size(); ++c) column_of[canonical_key(classes[c])] = c;

  const RationalMatrix m = RationalMatrix::from_rows(class_matrix(n));
  const auto kernel = kernel_basis(m);
  report.kernel_dim = kernel.size();
  for (const RationalVector& v : kernel) {
    const std::vector<Integer> z = primitive_integer(v);
    GraphSum sum(n);
    for (std::size_t c = 0; c < z.size(); ++c) sum.add(canonical_key(classes[c]), z[c]);
    report.kernel.push_back(std::move(sum));
  }

  // optional graphs: an optional k-cycle on 0..k-1 plus any regular edges elsewhere
  EchelonBasis span;
  for (int k = 3; k <= n && span.size() < report.kernel_dim; ++k) {
    std::vector<Edge> cycle;
    for (int v = 0; v < k; ++v) cycle.push_back({std::min(v, (v + 1) % k), std::max(v, (v + 1) % k)});
    const Graph optional(n, cycle);
    std::vector<Edge> others;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!optional.has_edge(u, v)) others.push_back({u, v});
      }
    }
    std::set<OptionalCanonicalKey> seen;
    for (std::uint32_t chosen = 0; chosen < (std::uint32_t{1} << others.size()); ++chosen) {
      if (span.size() >= report.kernel_dim) break;
      std::vector<Edge> regular;
      for (std::size_t j = 0; j < others.size(); ++j) {
        if ((chosen >> j) & 1U) regular.push_back(others[j]);
      }
      const OptionalGraph og(Graph(n, regular), optional);
      if (!seen.insert(canonical_key(og)).second) continue;
      ++report.relations_examined;
      RationalVector relation(classes.size());
      const GraphSum expanded = expand(og);
      for (const auto& [key, c] : expanded.terms()) relation[column_of.at(key)] = Rational(c);
      for (const Rational& value : m * relation) {
        if (value != 0) throw std::logic_error("optional-cycle relation has a nonzero flag vector");
      }
      span.insert(std::move(relation));
    }
  }
  report.cycle_span_dim = span.size();
  report.spans = report.cycle_span_dim == report.kernel_dim;
  return report;
}

}  // namespace graphflag
