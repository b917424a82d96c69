#pragma once

#include <cstddef>
#include <vector>

#include "graphflag/integer.hpp"

namespace graphflag {

using RationalVector = std::vector<Rational>;

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix transpose() const;
  RationalVector operator*(const RationalVector& x) const;
  // x^T M
  RationalVector left_multiply(const RationalVector& y) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon reduced_row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

// Basis of { v : m v = 0 }, one vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Outcome of the feasibility problem A x = b, x >= 0.
struct LpResult {
  bool feasible = false;
  // feasible: a solution
  RationalVector point;
  // infeasible: y with y^T A >= 0 componentwise and y^T b < 0
  RationalVector farkas;
  std::size_t pivots = 0;
};

// Phase-1 simplex in exact arithmetic with Bland's rule.
LpResult lp_feasible(const RationalMatrix& eq, const RationalVector& rhs);

bool verify_feasible_point(const RationalMatrix& eq, const RationalVector& rhs,
                           const RationalVector& x);
bool verify_farkas_certificate(const RationalMatrix& eq, const RationalVector& rhs,
                               const RationalVector& y);

}  // namespace graphflag
