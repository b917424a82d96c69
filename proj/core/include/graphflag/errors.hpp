#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphflag {

// Raised when an input exceeds one of the exhaustive-search bounds.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(const std::string& what, long value, long bound)
      : std::runtime_error(what + ": " + std::to_string(value) + " exceeds the limit of " +
                           std::to_string(bound)),
        value_(value),
        bound_(bound) {}

  long value() const { return value_; }
  long bound() const { return bound_; }

 private:
  long value_;
  long bound_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The vector handed to a conversion is not a combination of realizable flag vectors.
class OutsideSpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_limit(const char* what, long value, long bound) {
  if (value > bound) throw SizeLimitError(what, value, bound);
}

}  // namespace graphflag
