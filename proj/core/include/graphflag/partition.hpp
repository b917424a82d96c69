#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphflag/word.hpp"

namespace graphflag {

// Integer partition with parts stored in non-increasing order.
//
// Partitions compare by their anchor words b^{k1-1}a b^{k2-1}a ... (parts taken
// smallest first) under the a < b lexicographic order. This is the canonical
// order used for every partition-indexed vector in the library.
class Partition {
 public:
  Partition() = default;
  // Parts in any order; zero or negative parts are rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition parse(std::string_view text);

  int total() const { return total_; }
  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  // "[2+1+1]"; the empty partition prints as "[]".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// b^{k1-1}a b^{k2-1}a ... b^{kr-1}a with k1 <= k2 <= ... <= kr.
Word anchor_word(const Partition& p);

// All partitions of n in canonical (anchor-word) order.
std::vector<Partition> enumerate_partitions(int n);

// Number of partitions of n, counted independently of enumerate_partitions.
long partition_count(int n);

}  // namespace graphflag
