#include "graphflag/vectors.hpp"

#include <sstream>
#include <stdexcept>

#include "graphflag/errors.hpp"

namespace graphflag {

VerboseVector::VerboseVector(int length) : length_(length) {
  if (length < 0) throw std::invalid_argument("negative word length");
  check_limit("verbose vector length", length, kMaxWordLength);
  coeffs_.resize(std::size_t{1} << length);
}

const Integer& VerboseVector::operator[](const Word& w) const {
  if (w.length() != length_) {
    throw std::invalid_argument("word " + w.to_string() + " has the wrong length for this vector");
  }
  return coeffs_[w.bits()];
}

void VerboseVector::add(const Word& w, const Integer& c) {
  if (w.length() != length_) {
    throw std::invalid_argument("word " + w.to_string() + " has the wrong length for this vector");
  }
  coeffs_[w.bits()] += c;
}

bool VerboseVector::is_zero() const {
  for (const Integer& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void VerboseVector::check_length(const VerboseVector& other) const {
  if (other.length_ != length_) {
    throw std::invalid_argument("verbose vectors of lengths " + std::to_string(length_) + " and " +
                                std::to_string(other.length_) + " cannot be combined");
  }
}

VerboseVector& VerboseVector::operator+=(const VerboseVector& other) {
  check_length(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

VerboseVector& VerboseVector::operator-=(const VerboseVector& other) {
  check_length(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

VerboseVector& VerboseVector::operator*=(const Integer& scalar) {
  for (Integer& c : coeffs_) c *= scalar;
  return *this;
}

std::string VerboseVector::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::uint32_t bits = 0; bits < coeffs_.size(); ++bits) {
    if (coeffs_[bits] == 0) continue;
    if (!first) out << ' ';
    first = false;
    out << Word(length_, bits).to_string() << ':' << coeffs_[bits].get_str();
  }
  return first ? "0" : out.str();
}

ConciseVector ConciseVector::unit(const Partition& p, const Integer& c) {
  ConciseVector v(p.total());
  v.add(p, c);
  return v;
}

Integer ConciseVector::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ConciseVector::add(const Partition& p, const Integer& c) {
  if (p.total() != order_) {
    throw std::invalid_argument("partition " + p.to_string() + " is not a partition of " +
                                std::to_string(order_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Integer> ConciseVector::dense() const {
  std::vector<Integer> out;
  for (const Partition& p : enumerate_partitions(order_)) out.push_back(coefficient(p));
  return out;
}

ConciseVector& ConciseVector::operator+=(const ConciseVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

ConciseVector& ConciseVector::operator-=(const ConciseVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

ConciseVector& ConciseVector::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

std::string ConciseVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << ' ';
    first = false;
    out << p.to_string() << ':' << c.get_str();
  }
  return out.str();
}

namespace {

std::size_t power_of_three(int m) {
  std::size_t out = 1;
  for (int k = 0; k < m; ++k) out *= 3;
  return out;
}

}  // namespace

EdgeWordVector::EdgeWordVector(int length) : length_(length) {
  if (length < 0) throw std::invalid_argument("negative word length");
  check_limit("edge word length", length, kMaxEdgeWordLength);
  coeffs_.resize(power_of_three(length));
}

Integer EdgeWordVector::coefficient(std::string_view word) const {
  if (static_cast<int>(word.size()) != length_) {
    throw std::invalid_argument("edge word has the wrong length");
  }
  std::size_t index = 0;
  for (char ch : word) {
    if (ch < 'a' || ch > 'c') throw std::invalid_argument("edge words use only a, b and c");
    index = index * 3 + static_cast<std::size_t>(ch - 'a');
  }
  return coeffs_[index];
}

bool EdgeWordVector::is_zero() const {
  for (const Integer& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::string EdgeWordVector::word_at(int length, std::size_t index) {
  std::string out(length, 'a');
  for (int k = length - 1; k >= 0; --k) {
    out[k] = static_cast<char>('a' + index % 3);
    index /= 3;
  }
  return out;
}

std::string EdgeWordVector::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << ' ';
    first = false;
    out << word_at(length_, k) << ':' << coeffs_[k].get_str();
  }
  return first ? "0" : out.str();
}

}  // namespace graphflag
