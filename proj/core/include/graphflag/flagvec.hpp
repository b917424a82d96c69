#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphflag/graph.hpp"
#include "graphflag/partition.hpp"
#include "graphflag/vectors.hpp"
#include "graphflag/word.hpp"

namespace graphflag {

// Largest order for which verbose vectors are computed from shellings.
inline constexpr int kMaxVerboseOrder = 8;
// Largest edge count summed over in the subgraph-based forms.
inline constexpr int kMaxSubgraphEdges = 22;
// Largest order for the subgraph form (acyclic shelling counts per subgraph).
inline constexpr int kMaxSubgraphOrder = 7;
inline constexpr int kMaxTotalOrder = 20;
inline constexpr int kMaxBasisPart = 9;
inline constexpr int kMaxEdgeFlagEdges = 7;

enum class VerboseMethod { recursion, shelling_sum };

// --- verbose form -----------------------------------------------------------

VerboseVector verbose_flag_vector(const Graph& g, VerboseMethod method = VerboseMethod::recursion);
// Optional edges are handled by the local factor rule of verbose_contribution,
// which equals the expanded alternating sum.
VerboseVector verbose_flag_vector(const OptionalGraph& g,
                                  VerboseMethod method = VerboseMethod::recursion);
VerboseVector verbose_flag_vector(const GraphSum& s, VerboseMethod method = VerboseMethod::recursion);

// --- concise and subgraph forms ---------------------------------------------

// Sum over spanning subgraphs H of s(H) * pi(H).
ConciseVector concise_flag_vector(const Graph& g);
// Sum over C <= H <= E u C of s(H) * pi(H), the inclusion-exclusion collapse of expand(g).
ConciseVector concise_flag_vector(const OptionalGraph& g);
ConciseVector concise_flag_vector(const GraphSum& s);

// Sum over spanning subgraphs H of s^a(H) * pi(H).
ConciseVector subgraph_flag_vector(const Graph& g);
ConciseVector subgraph_flag_vector(const GraphSum& s);

// --- conversions ------------------------------------------------------------

// Ratio s^a(T) / s(T) for a tree on m vertices: 1, 2, then 4 from m = 3 on.
struct ComponentFactors {
  std::int64_t single = 1;
  std::int64_t pair = 2;
  std::int64_t tree = 4;

  std::int64_t operator()(int m) const { return m <= 1 ? single : (m == 2 ? pair : tree); }
  Integer product(const Partition& p) const;
};

// Divides each coefficient by multinomial(n; parts) * prod c(part).
ConciseVector scale_subgraph_to_concise(const ConciseVector& subgraph,
                                        const ComponentFactors& factors = {});

// Sum over interleavings of the words b^{k-1}a, one per part, parts distinguishable.
VerboseVector shuffle(const Partition& p);

VerboseVector verbose_from_concise(const ConciseVector& v, const ComponentFactors& factors = {});

enum class SpanCheck { full, anchors_only };

// Solves the triangular anchor-word system; with SpanCheck::full the result is
// mapped back and compared against every coordinate of v.
ConciseVector concise_from_verbose(const VerboseVector& v, SpanCheck check = SpanCheck::full,
                                   const ComponentFactors& factors = {});

// a -> a + (i-1) b, b -> -b on the letter with right-to-left index i.
VerboseVector complement_transform(const VerboseVector& v);

// Sum of verbose vectors over all 2^{n(n-1)/2} labelled graphs, in closed form.
VerboseVector total_flag_vector(int n);

// --- basis ------------------------------------------------------------------

// Path on m vertices with every edge optional.
OptionalGraph optional_path(int m);
// Centre with arms of lengths 1, 1 and m-3, every edge optional; D_3 is the path.
OptionalGraph optional_d_graph(int m);

// Formal sum of optional-edge graphs whose concise vector is exactly 1 * p:
// the disjoint union over parts of A_1, A_2, or 2A_m - D_m for m >= 3.
std::vector<std::pair<Integer, OptionalGraph>> basis_terms(const Partition& p);
GraphSum basis_graph(const Partition& p);

// M[r][c] = coefficient of anchor_word(parts[c]) in the verbose vector of basis_graph(parts[r]),
// partitions in canonical order.
std::vector<std::vector<Integer>> anchor_matrix(int n);

// --- edge flag vector --------------------------------------------------------

EdgeWordVector edge_flag_vector(const Graph& g);

}  // namespace graphflag
