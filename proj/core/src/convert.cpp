#include <map>
#include <stdexcept>

#include "graphflag/errors.hpp"
#include "graphflag/flagvec.hpp"

namespace graphflag {

Integer ComponentFactors::product(const Partition& p) const {
  Integer out = 1;
  for (int part : p.parts()) out *= to_integer((*this)(part));
  return out;
}

ConciseVector scale_subgraph_to_concise(const ConciseVector& subgraph,
                                        const ComponentFactors& factors) {
  ConciseVector out(subgraph.order());
  for (const auto& [p, c] : subgraph.terms()) {
    const Integer divisor = multinomial(p.parts()) * factors.product(p);
    if (divisor == 0 || c % divisor != 0) {
      throw std::logic_error("subgraph coefficient " + c.get_str() + " of " + p.to_string() +
                             " is not divisible by " + divisor.get_str());
    }
    out.add(p, c / divisor);
  }
  return out;
}

namespace {

inline constexpr std::size_t kMaxShuffleStates = std::size_t{1} << 22;

// Words produced by interleaving the remaining suffixes of b^{k-1}a words.
class ShuffleTable {
 public:
  explicit ShuffleTable(const Partition& p) : parts_(p.parts()), total_(p.total()) {
    std::size_t states = 1;
    for (int k : parts_) {
      radix_.push_back(states);
      states *= static_cast<std::size_t>(k + 1);
      if (states > kMaxShuffleStates) throw SizeLimitError("shuffle state count", static_cast<long>(states),
                                                                     static_cast<long>(kMaxShuffleStates));
    }
  }

  // consumed[i] letters of word i already used, encoded in mixed radix
  const VerboseVector& suffixes(std::size_t state) {
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;
    int used = 0;
    std::vector<int> consumed(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      consumed[i] = static_cast<int>(state / radix_[i] % (parts_[i] + 1));
      used += consumed[i];
    }
    const int remaining = total_ - used;
    VerboseVector out(remaining);
    if (remaining == 0) {
      out.add_at(0, 1);
    } else {
      const std::uint32_t lead = std::uint32_t{1} << (remaining - 1);
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (consumed[i] == parts_[i]) continue;
        // word i is b^{k-1} a: its last letter is the only a
        const bool letter_b = consumed[i] < parts_[i] - 1;
        const VerboseVector& tail = suffixes(state + radix_[i]);
        const auto coeffs = tail.coefficients();
        for (std::uint32_t w = 0; w < coeffs.size(); ++w) {
          if (coeffs[w] != 0) out.add_at(letter_b ? (lead | w) : w, coeffs[w]);
        }
      }
    }
    return memo_.emplace(state, std::move(out)).first->second;
  }

 private:
  std::vector<int> parts_;
  int total_;
  std::vector<std::size_t> radix_;
  std::map<std::size_t, VerboseVector> memo_;
};

}  // namespace

VerboseVector shuffle(const Partition& p) {
  check_limit("shuffle length", p.total(), kMaxWordLength);
  ShuffleTable table(p);
  return table.suffixes(0);
}

VerboseVector verbose_from_concise(const ConciseVector& v, const ComponentFactors& factors) {
  VerboseVector out(v.order());
  for (const auto& [p, c] : v.terms()) out += (c * factors.product(p)) * shuffle(p);
  return out;
}

ConciseVector concise_from_verbose(const VerboseVector& v, SpanCheck check,
                                   const ComponentFactors& factors) {
  const int n = v.length();
  const std::vector<Partition> parts = enumerate_partitions(n);
  std::vector<VerboseVector> images;
  for (const Partition& p : parts) images.push_back(factors.product(p) * shuffle(p));

  // images[r] vanishes on anchor words earlier than its own, so solve column by column
  std::vector<Integer> x(parts.size());
  for (std::size_t col = 0; col < parts.size(); ++col) {
    const Word anchor = anchor_word(parts[col]);
    Integer rhs = v[anchor];
    for (std::size_t row = 0; row < col; ++row) rhs -= x[row] * images[row][anchor];
    const Integer& diagonal = images[col][anchor];
    if (diagonal == 0) throw std::logic_error("anchor word matrix has a zero diagonal entry");
    if (rhs % diagonal != 0) {
      throw OutsideSpanError("coefficient of " + parts[col].to_string() +
                             " is not integral; the vector is not a flag vector combination");
    }
    x[col] = rhs / diagonal;
  }

  ConciseVector out(n);
  for (std::size_t k = 0; k < parts.size(); ++k) out.add(parts[k], x[k]);
  if (check == SpanCheck::full && verbose_from_concise(out, factors) != v) {
    throw OutsideSpanError("vector is not in the span of verbose flag vectors");
  }
  return out;
}

VerboseVector complement_transform(const VerboseVector& v) {
  const int n = v.length();
  std::vector<Integer> c(v.coefficients().begin(), v.coefficients().end());
  // letter at left offset k occupies bit n-1-k and has right-to-left index i = n-k
  for (int bit = 0; bit < n; ++bit) {
    const long index = bit + 1;
    const std::uint32_t mask = std::uint32_t{1} << bit;
    for (std::uint32_t w = 0; w < c.size(); ++w) {
      if (w & mask) continue;
      // a -> a + (i-1) b, b -> -b
      const Integer from_a = c[w];
      const Integer from_b = c[w | mask];
      c[w] = from_a;
      c[w | mask] = from_a * (index - 1) - from_b;
    }
  }
  VerboseVector out(n);
  for (std::uint32_t w = 0; w < c.size(); ++w) out.add_at(w, c[w]);
  return out;
}

VerboseVector total_flag_vector(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  check_limit("total flag vector order", n, kMaxTotalOrder);
  // tensor product over letters, built from the leftmost (i = n) letter down to i = 1
  std::vector<Integer> c{factorial(n)};
  for (int i = n; i >= 1; --i) {
    Integer lambda_a;
    mpz_ui_pow_ui(lambda_a.get_mpz_t(), 2, static_cast<unsigned long>(i - 1));
    Integer lambda_b = 0;
    if (i >= 2) {
      mpz_ui_pow_ui(lambda_b.get_mpz_t(), 2, static_cast<unsigned long>(i - 2));
      lambda_b *= i - 1;
    }
    std::vector<Integer> next(c.size() * 2);
    for (std::size_t w = 0; w < c.size(); ++w) {
      next[w << 1] = c[w] * lambda_a;
      next[(w << 1) | 1] = c[w] * lambda_b;
    }
    c = std::move(next);
  }
  VerboseVector out(n);
  for (std::uint32_t w = 0; w < c.size(); ++w) out.add_at(w, c[w]);
  return out;
}

}  // namespace graphflag
