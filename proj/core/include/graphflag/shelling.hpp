#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "graphflag/graph.hpp"
#include "graphflag/vectors.hpp"
#include "graphflag/word.hpp"

namespace graphflag {

inline constexpr int kMaxShellingOrder = 8;
inline constexpr int kMaxTreeComponentOrder = 12;

// Vertex removal order: order[0] is removed first.
struct Shelling {
  std::vector<int> order;

  friend bool operator==(const Shelling&, const Shelling&) = default;
};

// All n! shellings of an n-vertex graph in lexicographic order of the removal sequence.
class ShellingRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Shelling;
    using difference_type = std::ptrdiff_t;
    using pointer = const Shelling*;
    using reference = const Shelling&;

    iterator() = default;
    explicit iterator(int n);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    Shelling current_;
    bool done_ = true;
  };

  explicit ShellingRange(int n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

ShellingRange enumerate_shellings(const Graph& g);

// Number of shellings in which every removed vertex has at most one remaining neighbour.
std::int64_t acyclic_shelling_number(const Graph& g);

// Product over components of the number of leaf-removal sequences that
// reduce the component to a 3-vertex tree; 0 if g has a cycle.
std::int64_t tree_shelling_number(const Graph& g);

// Expansion of (a + m_1 b)(a + m_2 b)...(a + m_n b), m_k counting edges from the
// k-th removed vertex to vertices removed later.
VerboseVector verbose_contribution(const Graph& g, const Shelling& s);

// Shelling contribution of the alternating sum encoded by an optional-edge graph.
// Per removed vertex the factor is a + r b with no later optional neighbour,
// b with exactly one, and 0 with two or more (r = later regular neighbours).
VerboseVector verbose_contribution(const OptionalGraph& g, const Shelling& s);

// Number of semi-concise flags of type w on g.
std::int64_t count_semiconcise_flags(const Graph& g, const Word& w);

// Lengths d(1), ..., d(r+1) of the a-runs of w = a^{d(1)} b a^{d(2)} b ... b a^{d(r+1)}.
std::vector<int> a_run_lengths(const Word& w);

}  // namespace graphflag
