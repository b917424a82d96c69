#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace graphflag;

namespace {

Graph g(std::string_view text) { return parse_graph(text).regular(); }

std::vector<Graph> random_trees(int count, int max_order, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k) {
    const int n = std::uniform_int_distribution<int>(1, max_order)(rng);
    Graph t(n);
    for (int v = 1; v < n; ++v) t = t.with_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_SUITE("enumerate_shellings") {
  TEST_CASE("counts and uniqueness") {
    const long expected[] = {1, 1, 2, 6, 24, 120};
    for (int n = 0; n <= 5; ++n) {
      std::set<std::vector<int>> seen;
      for (const Shelling& s : enumerate_shellings(Graph(n))) {
        CHECK(static_cast<int>(s.order.size()) == n);
        seen.insert(s.order);
      }
      CHECK(static_cast<long>(seen.size()) == expected[n]);
    }
  }

  TEST_CASE("size limit") { CHECK_THROWS_AS(enumerate_shellings(Graph(9)), SizeLimitError); }
}

TEST_SUITE("acyclic_shelling_number") {
  TEST_CASE("examples") {
    CHECK(acyclic_shelling_number(g("3:0-1,1-2")) == 4);
    CHECK(acyclic_shelling_number(g("3:0-1,1-2,0-2")) == 0);
    CHECK(acyclic_shelling_number(g("2:")) == 2);
    CHECK(acyclic_shelling_number(g("0:")) == 1);
  }

  TEST_CASE("matches the permutation oracle on every graph with n <= 5") {
    for (int n = 0; n <= 5; ++n) {
      for (const Graph& h : oracle::labelled_graphs(n)) {
        CHECK(acyclic_shelling_number(h) == oracle::acyclic_shellings(h));
      }
    }
  }

  TEST_CASE("isomorphism invariant") {
    for (const Graph& h : oracle::labelled_graphs(5)) {
      CHECK(acyclic_shelling_number(h) == acyclic_shelling_number(canonical_form(h).graph));
    }
  }

  TEST_CASE("forests: multinomial merge of component counts") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const auto trees = random_trees(std::uniform_int_distribution<int>(1, 3)(rng), 4, rng());
      Graph forest(0);
      std::vector<int> sizes;
      Integer product = 1;
      for (const Graph& t : trees) {
        forest = disjoint_union(forest, t);
        sizes.push_back(t.order());
        product *= acyclic_shelling_number(t);
      }
      if (forest.order() > kMaxShellingOrder) continue;
      CHECK(Integer(acyclic_shelling_number(forest)) == multinomial(sizes) * product);
    }
  }
}

TEST_SUITE("tree_shelling_number") {
  TEST_CASE("examples") {
    CHECK(tree_shelling_number(g("4:0-1,0-2,0-3")) == 3);
    CHECK(tree_shelling_number(g("2:0-1")) == 1);
    CHECK(tree_shelling_number(g("3:0-1,1-2,0-2")) == 0);
    for (int n = 3; n <= 12; ++n) {
      Graph path(n);
      for (int v = 0; v + 1 < n; ++v) path = path.with_edge(v, v + 1);
      CHECK(tree_shelling_number(path) == (1L << (n - 3)));
    }
  }

  TEST_CASE("matches leaf-removal oracle and s^a = c(m) s on trees") {
    for (const Graph& t : random_trees(200, 8, 5)) {
      CHECK(tree_shelling_number(t) == oracle::tree_shellings(t));
      const int m = t.order();
      const long factor = m == 1 ? 1 : (m == 2 ? 2 : 4);
      CHECK(acyclic_shelling_number(t) == factor * tree_shelling_number(t));
    }
  }

  TEST_CASE("matches the oracle on every graph with n <= 5") {
    for (int n = 0; n <= 5; ++n) {
      for (const Graph& h : oracle::labelled_graphs(n)) {
        CHECK(tree_shelling_number(h) == oracle::tree_shellings(h));
      }
    }
  }
}

TEST_SUITE("verbose_contribution") {
  TEST_CASE("examples") {
    const Graph edge = g("2:0-1");
    for (const Shelling& s : enumerate_shellings(edge)) {
      CHECK(verbose_contribution(edge, s).to_string() == "aa:1 ba:1");
    }
    CHECK(verbose_contribution(g("4:"), Shelling{{2, 0, 3, 1}}).to_string() == "aaaa:1");
    const Graph triangle = g("3:0-1,1-2,0-2");
    for (const Shelling& s : enumerate_shellings(triangle)) {
      CHECK(verbose_contribution(triangle, s).to_string() == "aaa:1 aba:1 baa:2 bba:2");
    }
  }

  TEST_CASE("rejects non-permutations") {
    CHECK_THROWS(verbose_contribution(g("3:0-1"), Shelling{{0, 0, 1}}));
    CHECK_THROWS(verbose_contribution(g("3:0-1"), Shelling{{0, 1}}));
  }

  TEST_CASE("sum over shellings matches the oracle for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
      for (const Graph& h : enumerate_graphs(n)) {
        VerboseVector sum(n);
        for (const Shelling& s : enumerate_shellings(h)) sum += verbose_contribution(h, s);
        CHECK(sum == oracle::to_verbose(n, oracle::verbose(h)));
      }
    }
  }

  TEST_CASE("optional local factors equal the expanded sum per shelling") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 5)(rng);
      Graph regular(n), optional(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          const int r = std::uniform_int_distribution<int>(0, 2)(rng);
          if (r == 1) regular = regular.with_edge(u, v);
          if (r == 2) optional = optional.with_edge(u, v);
        }
      }
      const OptionalGraph og(regular, optional);
      const auto c = optional.edges();
      for (const Shelling& s : enumerate_shellings(regular)) {
        VerboseVector expanded(n);
        for (std::uint32_t b = 0; b < (1U << c.size()); ++b) {
          Graph h = regular;
          for (std::size_t k = 0; k < c.size(); ++k) {
            if ((b >> k) & 1U) h = h.with_edge(c[k].u, c[k].v);
          }
          const Integer sign = ((c.size() - std::popcount(b)) % 2) ? -1 : 1;
          expanded += sign * verbose_contribution(h, s);
        }
        CHECK(verbose_contribution(og, s) == expanded);
      }
    }
  }
}

TEST_SUITE("semi-concise flags") {
  TEST_CASE("a-run lengths") {
    CHECK(a_run_lengths(Word::parse("aabbaaa")) == std::vector<int>{2, 0, 3});
    CHECK(a_run_lengths(Word::parse("ba")) == std::vector<int>{0, 1});
    CHECK(a_run_lengths(Word::parse("aaa")) == std::vector<int>{3});
    CHECK(a_run_lengths(Word::parse("")) == std::vector<int>{0});
  }

  TEST_CASE("examples") {
    for (const Graph& h : {g("3:"), g("3:0-1,1-2"), g("4:0-1,0-2,0-3,1-2")}) {
      CHECK(count_semiconcise_flags(h, Word::all_a(h.order())) == 1);
    }
    // either endpoint may carry the b; f^v_ba(edge) = 2 with run weight 0! 1! = 1
    CHECK(count_semiconcise_flags(g("2:0-1"), Word::parse("ba")) == 2);
    CHECK(count_semiconcise_flags(g("2:"), Word::parse("ba")) == 0);
  }

  TEST_CASE("length mismatch is rejected") {
    CHECK_THROWS(count_semiconcise_flags(g("3:0-1"), Word::parse("ab")));
  }

  TEST_CASE("verbose coefficient is run-factorial times the flag count, n <= 5") {
    for (int n = 0; n <= 5; ++n) {
      for (const Graph& h : enumerate_graphs(n)) {
        const auto brute = oracle::verbose(h);
        for (std::uint32_t bits = 0; bits < brute.size(); ++bits) {
          const Word w(n, bits);
          Integer weight = 1;
          for (int d : a_run_lengths(w)) weight *= factorial(d);
          CHECK(Integer(brute[bits]) == weight * count_semiconcise_flags(h, w));
        }
      }
    }
  }
}

TEST_SUITE("words") {
  TEST_CASE("parse, print, order") {
    CHECK(Word::parse("aba").to_string() == "aba");
    CHECK(Word::parse("aba").bits() == 2);
    CHECK(Word::parse("aab") < Word::parse("aba"));
    CHECK(Word::parse("aba").is_b(1));
    CHECK(Word::parse("abba").b_count() == 2);
    CHECK(Word::parse("ab").concat(Word::parse("ba")).to_string() == "abba");
    CHECK_THROWS_AS(Word::parse("abc"), ParseError);
  }
}
