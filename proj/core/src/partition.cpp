#include "graphflag/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "graphflag/errors.hpp"
#include "graphflag/integer.hpp"

namespace graphflag {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    total_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

// Accepts "[3+1]", "3+1", "[]" and surrounding whitespace.
Partition Partition::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  const bool bracketed = pos < text.size() && text[pos] == '[';
  if (bracketed) ++pos;
  std::vector<int> parts;
  skip();
  const bool empty = pos < text.size() && bracketed && text[pos] == ']';
  while (!empty) {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a partition part", pos);
    }
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos++] - '0');
      if (value > 1000) throw ParseError("partition part too large", pos);
    }
    if (value == 0) throw ParseError("partition parts must be positive", pos);
    parts.push_back(value);
    skip();
    if (pos < text.size() && text[pos] == '+') {
      ++pos;
      continue;
    }
    break;
  }
  if (bracketed) {
    skip();
    if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
    ++pos;
  }
  skip();
  if (pos != text.size()) throw ParseError("unexpected trailing text", pos);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += '+';
    out += std::to_string(parts_[k]);
  }
  return out + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.total() != b.total()) return a.total() <=> b.total();
  // Words of equal length compare by their letters; anchor words are injective.
  const auto wa = anchor_word(a);
  const auto wb = anchor_word(b);
  return wa.bits() <=> wb.bits();
}

Word anchor_word(const Partition& p) {
  Word w;
  // parts_ is non-increasing, so walk it backwards for non-decreasing order
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
    for (int k = 1; k < *it; ++k) w = w.append(true);
    w = w.append(false);
  }
  return w;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition total");
  std::vector<Partition> out;
  std::vector<int> current;
  // parts generated in non-increasing order, each at most `cap`
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

long partition_count(int n) {
  if (n < 0) return 0;
  // Euler's pentagonal number recurrence.
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      sum += sign * p[m - g1];
      if (g2 <= m) sum += sign * p[m - g2];
    }
    p[m] = sum;
  }
  return p[n];
}

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace graphflag
