#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace graphflag {

inline constexpr int kMaxWordLength = 24;

// Word over {a, b}. The leftmost letter belongs to the first vertex removed.
//
// Letters are packed with the leftmost letter in the most significant bit
// (a = 0, b = 1), so comparing the packed value of equal-length words is the
// lexicographic order with a < b. The position index i of a letter counts
// from the right: the letter at left offset k has index i = length - k.
class Word {
 public:
  Word() = default;
  Word(int length, std::uint32_t bits);

  static Word parse(std::string_view text);
  static Word all_a(int length) { return Word(length, 0); }

  int length() const { return length_; }
  std::uint32_t bits() const { return bits_; }

  // Letter at left offset k (0-based): true for b.
  bool is_b(int offset) const { return (bits_ >> (length_ - 1 - offset)) & 1U; }
  int b_count() const;

  Word append(bool b) const { return Word(length_ + 1, (bits_ << 1) | (b ? 1U : 0U)); }
  Word concat(const Word& tail) const;

  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int length_ = 0;
  std::uint32_t bits_ = 0;
};

}  // namespace graphflag
