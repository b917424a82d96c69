#include "graphflag/exactlin.hpp"

#include <optional>
#include <stdexcept>

namespace graphflag {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(rows[r][c]);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (x[c] != 0) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

RationalVector RationalMatrix::left_multiply(const RationalVector& y) const {
  if (y.size() != rows_) throw std::invalid_argument("vector-matrix size mismatch");
  RationalVector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (y[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += y[r] * (*this)(r, c);
  }
  return out;
}

RowEchelon reduced_row_echelon(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pick = lead_row;
    while (pick < m.rows() && m(pick, c) == 0) ++pick;
    if (pick == m.rows()) continue;
    if (pick != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pick, k), m(lead_row, k));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivot_columns.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RowEchelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      v[e.pivot_columns[r]] = -e.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LpResult lp_feasible(const RationalMatrix& eq, const RationalVector& rhs) {
  const std::size_t m = eq.rows();
  const std::size_t n = eq.cols();
  if (rhs.size() != m) throw std::invalid_argument("right-hand side size mismatch");

  // Tableau over [x | artificials | rhs]; rows flipped so that rhs >= 0.
  const std::size_t width = n + m + 1;
  RationalMatrix t(m, width);
  std::vector<int> sign(m, 1);
  for (std::size_t r = 0; r < m; ++r) {
    if (rhs[r] < 0) sign[r] = -1;
    for (std::size_t c = 0; c < n; ++c) t(r, c) = eq(r, c) * sign[r];
    t(r, n + r) = 1;
    t(r, width - 1) = rhs[r] * sign[r];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  // reduced costs of the phase-1 objective (sum of artificials)
  RationalVector cost(width);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) cost[c] -= t(r, c);
    cost[width - 1] -= t(r, width - 1);
  }

  LpResult result;
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (cost[c] < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) break;
    const std::size_t e = *entering;
    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, e) <= 0) continue;
      const Rational ratio = t(r, width - 1) / t(r, e);
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[*leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    // phase 1 is bounded below by zero, so a ratio row always exists
    if (!leaving) throw std::logic_error("phase-1 simplex found an unbounded direction");
    const std::size_t l = *leaving;
    const Rational inv = 1 / t(l, e);
    for (std::size_t c = 0; c < width; ++c) t(l, c) *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == l || t(r, e) == 0) continue;
      const Rational factor = t(r, e);
      for (std::size_t c = 0; c < width; ++c) t(r, c) -= factor * t(l, c);
    }
    if (cost[e] != 0) {
      const Rational factor = cost[e];
      for (std::size_t c = 0; c < width; ++c) cost[c] -= factor * t(l, c);
    }
    basis[l] = e;
    ++result.pivots;
  }

  // cost[width-1] holds minus the objective value
  const Rational objective = -cost[width - 1];
  if (objective == 0) {
    result.feasible = true;
    result.point.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < n) result.point[basis[r]] = t(r, width - 1);
    }
  } else {
    // dual y_r = 1 - reduced cost of artificial r; Farkas vector is -y, unflipped
    result.farkas.resize(m);
    for (std::size_t r = 0; r < m; ++r) result.farkas[r] = -(1 - cost[n + r]) * sign[r];
  }
  return result;
}

bool verify_feasible_point(const RationalMatrix& eq, const RationalVector& rhs,
                           const RationalVector& x) {
  if (x.size() != eq.cols()) return false;
  for (const Rational& v : x) {
    if (v < 0) return false;
  }
  return eq * x == rhs;
}

bool verify_farkas_certificate(const RationalMatrix& eq, const RationalVector& rhs,
                               const RationalVector& y) {
  if (y.size() != eq.rows()) return false;
  for (const Rational& v : eq.left_multiply(y)) {
    if (v < 0) return false;
  }
  Rational dot = 0;
  for (std::size_t r = 0; r < rhs.size(); ++r) dot += y[r] * rhs[r];
  return dot < 0;
}

}  // namespace graphflag
