#include "graphflag/flagvec.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "graphflag/errors.hpp"
#include "graphflag/shelling.hpp"

namespace graphflag {

namespace {

OptionalGraph induced(const OptionalGraph& g, VertexMask keep) {
  return OptionalGraph(g.regular().induced(keep), g.optional().induced(keep));
}

// f(G) = sum_v L_v f(G - v), memoised on isomorphism class of the residual graph.
class VerboseRecursion {
 public:
  const VerboseVector& solve(const OptionalGraph& g) {
    const OptionalCanonicalKey key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int n = g.order();
    VerboseVector result(n);
    if (n == 0) {
      result.add_at(0, 1);
    } else {
      const VertexMask all = g.regular().all_vertices();
      const std::uint32_t b_bit = std::uint32_t{1} << (n - 1);
      for (int v = 0; v < n; ++v) {
        const int optional = g.optional().degree(v);
        if (optional >= 2) continue;
        const long alpha = optional == 0 ? 1 : 0;
        const long beta = optional == 0 ? g.regular().degree(v) : 1;
        if (alpha == 0 && beta == 0) continue;
        const VerboseVector& rest = solve(induced(g, all & ~(VertexMask{1} << v)));
        const auto coeffs = rest.coefficients();
        for (std::uint32_t w = 0; w < coeffs.size(); ++w) {
          if (coeffs[w] == 0) continue;
          if (alpha) result.add_at(w, coeffs[w] * alpha);
          if (beta) result.add_at(b_bit | w, coeffs[w] * beta);
        }
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  std::map<OptionalCanonicalKey, VerboseVector> memo_;
};

VerboseVector shelling_sum(const OptionalGraph& g) {
  VerboseVector total(g.order());
  for (const Shelling& s : enumerate_shellings(g.regular())) total += verbose_contribution(g, s);
  return total;
}

}  // namespace

VerboseVector verbose_flag_vector(const Graph& g, VerboseMethod method) {
  return verbose_flag_vector(OptionalGraph(g), method);
}

VerboseVector verbose_flag_vector(const OptionalGraph& g, VerboseMethod method) {
  check_limit("verbose flag vector order", g.order(), kMaxVerboseOrder);
  if (method == VerboseMethod::shelling_sum) return shelling_sum(g);
  VerboseRecursion recursion;
  return recursion.solve(g);
}

VerboseVector verbose_flag_vector(const GraphSum& s, VerboseMethod method) {
  check_limit("verbose flag vector order", s.order(), kMaxVerboseOrder);
  VerboseVector total(s.order());
  VerboseRecursion recursion;
  for (const auto& [key, c] : s.terms()) {
    const OptionalGraph g(key.graph());
    total += c * (method == VerboseMethod::recursion ? recursion.solve(g) : shelling_sum(g));
  }
  return total;
}

namespace {

// Partition of a graph packed as sorted component sizes, 5 bits each.
std::uint64_t packed_partition(const Graph& g) {
  std::vector<int> sizes;
  for (VertexMask c : components(g)) sizes.push_back(std::popcount(c));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  std::uint64_t key = 0;
  for (int s : sizes) key = (key << 5) | static_cast<std::uint64_t>(s);
  return key;
}

Partition unpack_partition(std::uint64_t key) {
  std::vector<int> parts;
  for (; key; key >>= 5) parts.push_back(static_cast<int>(key & 31U));
  return Partition(std::move(parts));
}

// Sums weight(H) * pi(H) over H = forced u B for every B subset of free.
template <typename Weight>
ConciseVector subgraph_sum(int n, const std::vector<Edge>& forced, const std::vector<Edge>& free,
                           Weight&& weight) {
  check_limit("subgraph edge count", static_cast<long>(free.size()), kMaxSubgraphEdges);
  check_limit("subgraph sum order", n, 12);
  std::vector<VertexMask> base(n, 0);
  for (const Edge& e : forced) {
    base[e.u] |= VertexMask{1} << e.v;
    base[e.v] |= VertexMask{1} << e.u;
  }
  std::unordered_map<std::uint64_t, std::int64_t> acc;
  const std::uint32_t subsets = std::uint32_t{1} << free.size();
  for (std::uint32_t chosen = 0; chosen < subsets; ++chosen) {
    std::vector<VertexMask> rows = base;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((chosen >> k) & 1U) {
        rows[free[k].u] |= VertexMask{1} << free[k].v;
        rows[free[k].v] |= VertexMask{1} << free[k].u;
      }
    }
    const Graph h = Graph::from_rows(std::move(rows));
    const std::int64_t w = weight(h);
    if (w != 0) acc[packed_partition(h)] += w;
  }
  ConciseVector out(n);
  for (const auto& [key, c] : acc) out.add(unpack_partition(key), to_integer(c));
  return out;
}

}  // namespace

ConciseVector concise_flag_vector(const Graph& g) {
  return subgraph_sum(g.order(), {}, g.edges(),
                      [](const Graph& h) { return tree_shelling_number(h); });
}

ConciseVector concise_flag_vector(const OptionalGraph& g) {
  return subgraph_sum(g.order(), g.optional().edges(), g.regular().edges(),
                      [](const Graph& h) { return tree_shelling_number(h); });
}

ConciseVector concise_flag_vector(const GraphSum& s) {
  ConciseVector total(s.order());
  for (const auto& [key, c] : s.terms()) total += c * concise_flag_vector(key.graph());
  return total;
}

ConciseVector subgraph_flag_vector(const Graph& g) {
  check_limit("subgraph flag vector order", g.order(), kMaxSubgraphOrder);
  return subgraph_sum(g.order(), {}, g.edges(),
                      [](const Graph& h) { return acyclic_shelling_number(h); });
}

ConciseVector subgraph_flag_vector(const GraphSum& s) {
  ConciseVector total(s.order());
  for (const auto& [key, c] : s.terms()) total += c * subgraph_flag_vector(key.graph());
  return total;
}

OptionalGraph optional_path(int m) {
  if (m < 1) throw std::invalid_argument("A_m needs at least one vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < m; ++v) edges.push_back({v, v + 1});
  return OptionalGraph(Graph(m), Graph(m, edges));
}

OptionalGraph optional_d_graph(int m) {
  if (m < 3) throw std::invalid_argument("D_m needs at least three vertices");
  if (m == 3) return optional_path(3);
  // centre 0, short arms 1 and 2, long arm 0-3-4-...-(m-1)
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  for (int v = 3; v + 1 < m; ++v) edges.push_back({v, v + 1});
  return OptionalGraph(Graph(m), Graph(m, edges));
}

std::vector<std::pair<Integer, OptionalGraph>> basis_terms(const Partition& p) {
  std::vector<std::pair<Integer, OptionalGraph>> terms{{Integer(1), OptionalGraph(Graph(0))}};
  for (int part : p.parts()) {
    check_limit("basis part", part, kMaxBasisPart);
    std::vector<std::pair<Integer, OptionalGraph>> factor;
    if (part <= 2) {
      factor.emplace_back(1, optional_path(part));
    } else if (part == 3) {
      // 2A_3 - D_3 with D_3 = A_3
      factor.emplace_back(1, optional_path(3));
    } else {
      factor.emplace_back(2, optional_path(part));
      factor.emplace_back(-1, optional_d_graph(part));
    }
    std::vector<std::pair<Integer, OptionalGraph>> next;
    for (const auto& [c1, g1] : terms) {
      for (const auto& [c2, g2] : factor) next.emplace_back(c1 * c2, disjoint_union(g1, g2));
    }
    terms = std::move(next);
  }
  return terms;
}

GraphSum basis_graph(const Partition& p) {
  GraphSum sum(p.total());
  for (const auto& [c, og] : basis_terms(p)) sum += c * expand(og);
  return sum;
}

std::vector<std::vector<Integer>> anchor_matrix(int n) {
  const auto parts = enumerate_partitions(n);
  std::vector<std::vector<Integer>> m;
  for (const Partition& row : parts) {
    const VerboseVector f = verbose_flag_vector(basis_graph(row));
    std::vector<Integer> line;
    for (const Partition& col : parts) line.push_back(f[anchor_word(col)]);
    m.push_back(std::move(line));
  }
  return m;
}

namespace {

std::size_t power_of_three(int m) {
  std::size_t out = 1;
  for (int k = 0; k < m; ++k) out *= 3;
  return out;
}

class EdgeRecursion {
 public:
  EdgeRecursion(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  const EdgeWordVector& solve(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int m = std::popcount(mask);
    EdgeWordVector out(m);
    if (m == 0) {
      out.add_at(0, 1);
    } else {
      std::vector<int> degree(n_, 0);
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        const Edge& e = edges_[std::countr_zero(rest)];
        ++degree[e.u];
        ++degree[e.v];
      }
      const std::size_t lead = power_of_three(m - 1);
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        const int k = std::countr_zero(rest);
        const Edge& e = edges_[k];
        const int lo = std::min(degree[e.u], degree[e.v]);
        const int hi = std::max(degree[e.u], degree[e.v]);
        const long factor[3] = {1, lo - 1, hi - lo};
        const EdgeWordVector& tail = solve(mask & ~(std::uint32_t{1} << k));
        const auto coeffs = tail.coefficients();
        for (std::size_t w = 0; w < coeffs.size(); ++w) {
          if (coeffs[w] == 0) continue;
          for (int letter = 0; letter < 3; ++letter) {
            if (factor[letter]) out.add_at(letter * lead + w, coeffs[w] * factor[letter]);
          }
        }
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint32_t, EdgeWordVector> memo_;
};

}  // namespace

EdgeWordVector edge_flag_vector(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  check_limit("edge flag vector edge count", static_cast<long>(edges.size()), kMaxEdgeFlagEdges);
  EdgeRecursion recursion(g.order(), edges);
  return recursion.solve((std::uint32_t{1} << edges.size()) - 1);
}

}  // namespace graphflag
