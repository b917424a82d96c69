#include "graphflag/word.hpp"

#include <bit>
#include <stdexcept>

#include "graphflag/errors.hpp"

namespace graphflag {

Word::Word(int length, std::uint32_t bits) : length_(length), bits_(bits) {
  if (length < 0) throw std::invalid_argument("negative word length");
  check_limit("word length", length, kMaxWordLength);
  if (length < 32 && (bits >> length) != 0) {
    throw std::invalid_argument("word bits exceed its length");
  }
}

Word Word::parse(std::string_view text) {
  check_limit("word length", static_cast<long>(text.size()), kMaxWordLength);
  std::uint32_t bits = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != 'a' && text[k] != 'b') {
      throw ParseError("words use only the letters a and b", k);
    }
    bits = (bits << 1) | (text[k] == 'b' ? 1U : 0U);
  }
  return Word(static_cast<int>(text.size()), bits);
}

int Word::b_count() const { return std::popcount(bits_); }

Word Word::concat(const Word& tail) const {
  check_limit("word length", length_ + tail.length_, kMaxWordLength);
  return Word(length_ + tail.length_, (bits_ << tail.length_) | tail.bits_);
}

std::string Word::to_string() const {
  std::string out(length_, 'a');
  for (int k = 0; k < length_; ++k) {
    if (is_b(k)) out[k] = 'b';
  }
  return out;
}

}  // namespace graphflag
