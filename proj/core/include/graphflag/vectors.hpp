#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "graphflag/integer.hpp"
#include "graphflag/partition.hpp"
#include "graphflag/word.hpp"

namespace graphflag {

// Integer coefficients on the 2^n words of length n, stored densely by Word::bits().
class VerboseVector {
 public:
  explicit VerboseVector(int length = 0);

  int length() const { return length_; }
  std::span<const Integer> coefficients() const { return coeffs_; }
  const Integer& operator[](const Word& w) const;
  const Integer& at(std::uint32_t bits) const { return coeffs_.at(bits); }

  void add(const Word& w, const Integer& c);
  void add_at(std::uint32_t bits, const Integer& c) { coeffs_.at(bits) += c; }
  bool is_zero() const;

  VerboseVector& operator+=(const VerboseVector& other);
  VerboseVector& operator-=(const VerboseVector& other);
  VerboseVector& operator*=(const Integer& scalar);
  friend VerboseVector operator+(VerboseVector a, const VerboseVector& b) { return a += b; }
  friend VerboseVector operator-(VerboseVector a, const VerboseVector& b) { return a -= b; }
  friend VerboseVector operator*(const Integer& s, VerboseVector a) { return a *= s; }
  friend bool operator==(const VerboseVector&, const VerboseVector&) = default;

  // Nonzero terms as "word:coefficient" in lexicographic word order, or "0".
  std::string to_string() const;

 private:
  void check_length(const VerboseVector& other) const;

  int length_;
  std::vector<Integer> coeffs_;
};

// Integer coefficients on the partitions of n; zero coefficients are not stored.
class ConciseVector {
 public:
  using Terms = std::map<Partition, Integer>;

  explicit ConciseVector(int order = 0) : order_(order) {}
  static ConciseVector unit(const Partition& p, const Integer& c = 1);

  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  Integer coefficient(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& p, const Integer& c);

  // Coefficients in enumerate_partitions(order()) order, zeros included.
  std::vector<Integer> dense() const;

  ConciseVector& operator+=(const ConciseVector& other);
  ConciseVector& operator-=(const ConciseVector& other);
  ConciseVector& operator*=(const Integer& scalar);
  friend ConciseVector operator+(ConciseVector a, const ConciseVector& b) { return a += b; }
  friend ConciseVector operator-(ConciseVector a, const ConciseVector& b) { return a -= b; }
  friend ConciseVector operator*(const Integer& s, ConciseVector a) { return a *= s; }
  friend bool operator==(const ConciseVector&, const ConciseVector&) = default;

  // "[2+1+1]:3 [4]:2", canonical partition order, or "0".
  std::string to_string() const;

 private:
  int order_;
  Terms terms_;
};

inline constexpr int kMaxEdgeWordLength = 12;

// Integer coefficients on words of length m over {a, b, c}, stored densely in
// base 3 with the leftmost letter most significant (a = 0, b = 1, c = 2).
class EdgeWordVector {
 public:
  explicit EdgeWordVector(int length = 0);

  int length() const { return length_; }
  std::span<const Integer> coefficients() const { return coeffs_; }
  Integer coefficient(std::string_view word) const;
  void add_at(std::size_t index, const Integer& c) { coeffs_.at(index) += c; }
  bool is_zero() const;

  static std::string word_at(int length, std::size_t index);

  friend bool operator==(const EdgeWordVector&, const EdgeWordVector&) = default;

  std::string to_string() const;

 private:
  int length_;
  std::vector<Integer> coeffs_;
};

}  // namespace graphflag
