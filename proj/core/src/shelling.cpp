#include "graphflag/shelling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "graphflag/errors.hpp"

namespace graphflag {

ShellingRange::iterator::iterator(int n) : done_(false) {
  current_.order.resize(n);
  std::iota(current_.order.begin(), current_.order.end(), 0);
}

ShellingRange::iterator& ShellingRange::iterator::operator++() {
  if (!std::next_permutation(current_.order.begin(), current_.order.end())) done_ = true;
  return *this;
}

ShellingRange enumerate_shellings(const Graph& g) {
  check_limit("shelling enumeration order", g.order(), kMaxShellingOrder);
  return ShellingRange(g.order());
}

std::int64_t acyclic_shelling_number(const Graph& g) {
  const int n = g.order();
  check_limit("acyclic shelling order", n, kMaxShellingOrder);
  // ways[mask] = acyclic shellings of the subgraph induced on mask
  std::vector<std::int64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (VertexMask mask = 1; mask < (VertexMask{1} << n); ++mask) {
    std::int64_t total = 0;
    for (VertexMask rest = mask; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(g.neighbors(v) & mask) <= 1) total += ways[mask & ~(VertexMask{1} << v)];
    }
    ways[mask] = total;
  }
  return ways.back();
}

namespace {

// Leaf-first orderings of a tree that end at root = m! / prod of rooted subtree sizes.
std::int64_t rooted_orderings(const Graph& g, VertexMask tree, int root, std::int64_t m_factorial) {
  // iterative DFS computing subtree sizes
  std::vector<int> order;
  std::vector<int> parent(g.order(), -1);
  std::vector<int> stack{root};
  VertexMask seen = VertexMask{1} << root;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (VertexMask nb = g.neighbors(v) & tree & ~seen; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      seen |= VertexMask{1} << w;
      parent[w] = v;
      stack.push_back(w);
    }
  }
  std::vector<std::int64_t> size(g.order(), 1);
  std::int64_t product = 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    product *= size[*it];
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  }
  return m_factorial / product;
}

}  // namespace

std::int64_t tree_shelling_number(const Graph& g) {
  if (!is_acyclic(g)) return 0;
  std::int64_t result = 1;
  for (VertexMask tree : components(g)) {
    const int m = std::popcount(tree);
    if (m <= 3) continue;
    check_limit("tree component order", m, kMaxTreeComponentOrder);
    std::int64_t m_factorial = 1;
    for (int k = 2; k <= m; ++k) m_factorial *= k;
    // complete leaf-removal sequences, each reaching some 3-vertex tree that has 4 completions
    std::int64_t complete = 0;
    for (VertexMask rest = tree; rest; rest &= rest - 1) {
      complete += rooted_orderings(g, tree, std::countr_zero(rest), m_factorial);
    }
    result *= complete / 4;
  }
  return result;
}

namespace {

// Expands prod_k (alpha_k a + beta_k b) with the first factor leftmost.
VerboseVector expand_linear_factors(const std::vector<std::int64_t>& alpha,
                                    const std::vector<std::int64_t>& beta) {
  const int n = static_cast<int>(alpha.size());
  std::vector<std::int64_t> coeffs{1};
  for (int k = 0; k < n; ++k) {
    std::vector<std::int64_t> next(coeffs.size() * 2, 0);
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
      if (coeffs[w] == 0) continue;
      next[w << 1] += coeffs[w] * alpha[k];
      next[(w << 1) | 1] += coeffs[w] * beta[k];
    }
    coeffs = std::move(next);
  }
  VerboseVector out(n);
  for (std::uint32_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w] != 0) out.add_at(w, to_integer(coeffs[w]));
  }
  return out;
}

void check_shelling(int n, const Shelling& s) {
  if (static_cast<int>(s.order.size()) != n) {
    throw std::invalid_argument("shelling length does not match the graph order");
  }
  VertexMask seen = 0;
  for (int v : s.order) {
    if (v < 0 || v >= n || ((seen >> v) & 1U)) {
      throw std::invalid_argument("shelling is not a permutation of the vertices");
    }
    seen |= VertexMask{1} << v;
  }
}

}  // namespace

VerboseVector verbose_contribution(const Graph& g, const Shelling& s) {
  return verbose_contribution(OptionalGraph(g), s);
}

VerboseVector verbose_contribution(const OptionalGraph& g, const Shelling& s) {
  const int n = g.order();
  check_shelling(n, s);
  check_limit("verbose word length", n, kMaxWordLength);
  std::vector<std::int64_t> alpha(n);
  std::vector<std::int64_t> beta(n);
  VertexMask later = g.regular().all_vertices();
  for (int k = 0; k < n; ++k) {
    const int v = s.order[k];
    later &= ~(VertexMask{1} << v);
    const int regular = std::popcount(g.regular().neighbors(v) & later);
    const int optional = std::popcount(g.optional().neighbors(v) & later);
    if (optional == 0) {
      alpha[k] = 1;
      beta[k] = regular;
    } else if (optional == 1) {
      alpha[k] = 0;
      beta[k] = 1;
    } else {
      return VerboseVector(n);
    }
  }
  return expand_linear_factors(alpha, beta);
}

std::vector<int> a_run_lengths(const Word& w) {
  std::vector<int> runs{0};
  for (int k = 0; k < w.length(); ++k) {
    if (w.is_b(k)) {
      runs.push_back(0);
    } else {
      ++runs.back();
    }
  }
  return runs;
}

namespace {

struct SemiconciseCounter {
  const Graph& g;
  std::vector<int> runs;

  // group 2i is the set S_{i+1}, group 2i+1 is the vertex of the (i+1)-th b
  std::int64_t count(std::size_t group, VertexMask remaining) const {
    if (group == 2 * runs.size() - 1) return 1;
    if (group % 2 == 0) {
      const int size = runs[group / 2];
      std::int64_t total = 0;
      for_each_subset(remaining, size, 0, [&](VertexMask chosen) {
        total += count(group + 1, remaining & ~chosen);
      });
      return total;
    }
    std::int64_t total = 0;
    for (VertexMask rest = remaining; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const VertexMask after = remaining & ~(VertexMask{1} << v);
      const int forward = std::popcount(g.neighbors(v) & after);
      if (forward) total += forward * count(group + 1, after);
    }
    return total;
  }

  template <typename F>
  static void for_each_subset(VertexMask pool, int size, VertexMask chosen, F&& f) {
    if (size == 0) {
      f(chosen);
      return;
    }
    if (std::popcount(pool) < size) return;
    const VertexMask low = pool & (~pool + 1);
    for_each_subset(pool & ~low, size - 1, chosen | low, f);
    for_each_subset(pool & ~low, size, chosen, f);
  }
};

}  // namespace

std::int64_t count_semiconcise_flags(const Graph& g, const Word& w) {
  if (w.length() != g.order()) {
    throw std::invalid_argument("word length " + std::to_string(w.length()) +
                                " does not match the graph order " + std::to_string(g.order()));
  }
  SemiconciseCounter counter{g, a_run_lengths(w)};
  return counter.count(0, g.all_vertices());
}

}  // namespace graphflag
