#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace graphflag {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer to_integer(std::int64_t v) {
  Integer z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(int n);

// n! / (k_1! k_2! ... k_r!) where the k_i sum to n.
template <typename Range>
Integer multinomial(const Range& parts) {
  int n = 0;
  for (int k : parts) n += k;
  Integer result = factorial(n);
  for (int k : parts) result /= factorial(k);
  return result;
}

}  // namespace graphflag
