#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace graphflag;

namespace {

Graph g(std::string_view text) { return parse_graph(text).regular(); }

}  // namespace

TEST_SUITE("parse_graph") {
  TEST_CASE("edgeless graph") {
    const OptionalGraph og = parse_graph("3:");
    CHECK(og.order() == 3);
    CHECK(og.regular().edge_count() == 0);
    CHECK(og.is_plain());
  }

  TEST_CASE("path and optional triangle") {
    const Graph a4 = g("4:0-1,1-2,2-3");
    CHECK(a4.edge_count() == 3);
    CHECK(a4.has_edge(2, 3));
    CHECK(a4.has_edge(3, 2));
    CHECK_FALSE(a4.has_edge(0, 3));

    const OptionalGraph tri = parse_graph("3:?0-1,?1-2,?0-2");
    CHECK(tri.regular().edge_count() == 0);
    CHECK(tri.optional().edge_count() == 3);
    CHECK(format_graph(tri) == "3:?0-1,?0-2,?1-2");
  }

  TEST_CASE("reversed pairs and whitespace-free round trip") {
    CHECK(format_graph(parse_graph("3:2-0,1-0")) == "3:0-1,0-2");
    CHECK(format_graph(parse_graph("0:")) == "0:");
  }

  TEST_CASE("rejections carry positions") {
    CHECK_THROWS_AS(parse_graph("3:0-0"), ParseError);
    CHECK_THROWS_AS(parse_graph("3:0-3"), ParseError);
    CHECK_THROWS_AS(parse_graph("3:0-1,1-0"), ParseError);
    CHECK_THROWS_AS(parse_graph("3:0-1,?0-1"), ParseError);
    CHECK_THROWS_AS(parse_graph("3"), ParseError);
    CHECK_THROWS_AS(parse_graph("3:0-1,"), ParseError);
    CHECK_THROWS_AS(parse_graph("x:"), ParseError);
    try {
      parse_graph("3:0-1,1-1");
      FAIL("no exception");
    } catch (const ParseError& e) {
      CHECK(e.position() == 6);
      CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
  }

  TEST_CASE("too many vertices is a size limit") {
    CHECK_THROWS_AS(parse_graph("33:"), SizeLimitError);
  }
}

TEST_SUITE("complement") {
  TEST_CASE("examples") {
    CHECK(complement(g("3:")) == g("3:0-1,0-2,1-2"));
    CHECK(complement(g("4:0-1")).edge_count() == 5);
    CHECK(canonical_key(complement(g("4:0-1"))) == canonical_key(g("4:0-2,0-3,1-2,1-3,2-3")));
  }

  TEST_CASE("involution and class invariance for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
      for (const Graph& h : oracle::labelled_graphs(n)) {
        CHECK(complement(complement(h)) == h);
        CHECK(complement(h).edge_count() == pair_count(n) - h.edge_count());
      }
      std::map<CanonicalKey, CanonicalKey> image;
      for (const Graph& h : oracle::labelled_graphs(n)) {
        const auto [it, inserted] = image.emplace(canonical_key(h), canonical_key(complement(h)));
        if (!inserted) CHECK(it->second == canonical_key(complement(h)));
      }
    }
  }
}

TEST_SUITE("canonical_form") {
  TEST_CASE("relabelled paths agree") {
    CHECK(canonical_key(g("3:0-1,1-2")) == canonical_key(g("3:0-2,2-1")));
    CHECK(canonical_form(g("4:")).graph == g("4:"));
  }

  TEST_CASE("matches the minimum over all relabellings for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
      for (const Graph& h : oracle::labelled_graphs(n)) {
        const CanonicalForm form = canonical_form(h);
        CHECK(form.graph.adjacency_bits() == oracle::min_bits(h));
        CHECK(form.graph == h.relabelled(form.permutation));
        CHECK(canonical_form(form.graph).graph == form.graph);
      }
    }
  }

  TEST_CASE("isomorphism invariance under random relabellings") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 7)(rng);
      const Graph h = Graph::from_adjacency_bits(
          n, std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << pair_count(n)) - 1)(rng));
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_key(h.relabelled(perm)) == canonical_key(h));
    }
  }

  TEST_CASE("64 labelled 4-vertex graphs give 11 classes") {
    std::set<CanonicalKey> keys;
    for (const Graph& h : oracle::labelled_graphs(4)) keys.insert(canonical_key(h));
    CHECK(keys.size() == 11);
  }

  TEST_CASE("serialisation") {
    CHECK(canonical_key(g("3:0-1")).to_string() == "3:001");
    CHECK(canonical_key(g("0:")).to_string() == "0:");
  }

  TEST_CASE("optional keys distinguish colours") {
    const auto a = canonical_key(parse_graph("3:0-1,?1-2"));
    const auto b = canonical_key(parse_graph("3:?0-1,1-2"));
    const auto c = canonical_key(parse_graph("3:?0-1,?1-2"));
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(canonical_key(parse_graph("3:0-1")).regular == canonical_key(g("3:0-1")).bits);
  }

  TEST_CASE("size limit") { CHECK_THROWS_AS(canonical_form(Graph(11)), SizeLimitError); }
}

TEST_SUITE("enumerate_graphs") {
  TEST_CASE("class counts") {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
  }

  TEST_CASE("agrees with brute-force canonicalisation for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
      std::set<std::uint64_t> brute;
      for (const Graph& h : oracle::labelled_graphs(n)) brute.insert(oracle::min_bits(h));
      std::vector<std::uint64_t> listed;
      for (const Graph& h : enumerate_graphs(n)) listed.push_back(h.adjacency_bits());
      CHECK(listed == std::vector<std::uint64_t>(brute.begin(), brute.end()));
    }
  }

  TEST_CASE("deterministic and bounded") {
    CHECK(enumerate_graphs(5) == enumerate_graphs(5));
    CHECK_THROWS_AS(enumerate_graphs(8), SizeLimitError);
    CHECK_THROWS_AS(enumerate_graphs(-1), std::invalid_argument);
  }
}

TEST_SUITE("connected_partition") {
  TEST_CASE("examples") {
    CHECK(connected_partition(g("4:0-1,1-2,2-3")) == Partition{4});
    CHECK(connected_partition(g("4:0-1")) == Partition{2, 1, 1});
    CHECK(connected_partition(g("4:")) == Partition{1, 1, 1, 1});
    CHECK(connected_partition(g("0:")) == Partition{});
  }

  TEST_CASE("matches a DFS oracle") {
    for (const Graph& h : oracle::labelled_graphs(5)) {
      CHECK(connected_partition(h) == Partition(oracle::component_sizes(oracle::adjacency(h))));
      CHECK(is_acyclic(h) == !oracle::has_cycle(oracle::adjacency(h)));
    }
  }
}

TEST_SUITE("expand") {
  TEST_CASE("optional triangle") {
    GraphSum expected(3);
    expected.add(g("3:"), -1);
    expected.add(g("3:0-1"), 3);
    expected.add(g("3:0-1,1-2"), -3);
    expected.add(g("3:0-1,1-2,0-2"), 1);
    CHECK(expand(parse_graph("3:?0-1,?1-2,?0-2")) == expected);
  }

  TEST_CASE("no optional edges and a single optional edge") {
    CHECK(expand(parse_graph("3:0-1")) == GraphSum(g("3:0-1")));
    GraphSum edge(2);
    edge.add(g("2:0-1"), 1);
    edge.add(g("2:"), -1);
    CHECK(expand(parse_graph("2:?0-1")) == edge);
  }

  TEST_CASE("alternating sums vanish and coefficients are signed subsets") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = std::uniform_int_distribution<int>(2, 6)(rng);
      Graph regular(n), optional(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          const int r = std::uniform_int_distribution<int>(0, 2)(rng);
          if (r == 1) regular = regular.with_edge(u, v);
          if (r == 2) optional = optional.with_edge(u, v);
        }
      }
      const OptionalGraph og(regular, optional);
      const GraphSum s = expand(og);
      Integer total = 0;
      Integer mass = 0;
      for (const auto& [key, c] : s.terms()) {
        total += c;
        mass += abs(c);
      }
      if (optional.edge_count() > 0) CHECK(total == 0);
      CHECK(mass <= Integer(1) << optional.edge_count());

      // direct enumeration of (V, E u B) with sign (-1)^{|C|-|B|}
      GraphSum direct(n);
      const auto c = optional.edges();
      for (std::uint32_t b = 0; b < (1U << c.size()); ++b) {
        Graph h = regular;
        for (std::size_t k = 0; k < c.size(); ++k) {
          if ((b >> k) & 1U) h = h.with_edge(c[k].u, c[k].v);
        }
        direct.add(h, ((c.size() - std::popcount(b)) % 2) ? -1 : 1);
      }
      CHECK(s == direct);
    }
  }
}

TEST_SUITE("GraphSum") {
  TEST_CASE("arithmetic drops zeros and rejects mixed orders") {
    GraphSum s(g("3:0-1"), 2);
    s.add(g("3:1-2"), -2);
    CHECK(s.empty());
    GraphSum t(g("3:0-1"));
    CHECK((t + t) == Integer(2) * t);
    CHECK((t - t).empty());
    CHECK_THROWS_AS(t.add(g("4:"), 1), std::invalid_argument);
  }

  TEST_CASE("disjoint union of sums") {
    const GraphSum a = expand(parse_graph("2:?0-1"));
    const GraphSum b(g("1:"));
    GraphSum expected(3);
    expected.add(g("3:0-1"), 1);
    expected.add(g("3:"), -1);
    CHECK(disjoint_union(a, b) == expected);
  }
}

TEST_SUITE("partitions") {
  TEST_CASE("canonical order for n = 4") {
    const std::vector<Partition> expected{{1, 1, 1, 1}, {2, 1, 1}, {3, 1}, {2, 2}, {4}};
    CHECK(enumerate_partitions(4) == expected);
  }

  TEST_CASE("counts, uniqueness and sortedness") {
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
      const auto parts = enumerate_partitions(n);
      CHECK(static_cast<long>(parts.size()) == expected[n]);
      CHECK(partition_count(n) == expected[n]);
      CHECK(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size());
      for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
        CHECK(anchor_word(parts[k]) < anchor_word(parts[k + 1]));
      }
      for (const Partition& p : parts) {
        CHECK(p.total() == n);
        CHECK(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
      }
    }
  }

  TEST_CASE("anchor words") {
    CHECK(anchor_word(Partition{2, 1, 1}).to_string() == "aaba");
    CHECK(anchor_word(Partition{5}).to_string() == "bbbba");
    CHECK(anchor_word(Partition{1, 1, 1}).to_string() == "aaa");
  }

  TEST_CASE("parsing and printing") {
    CHECK(Partition::parse("[3+1]") == Partition{3, 1});
    CHECK(Partition::parse("1+3") == Partition{3, 1});
    CHECK(Partition::parse("[]") == Partition{});
    CHECK(Partition{2, 1, 1}.to_string() == "[2+1+1]");
    CHECK_THROWS(Partition::parse("[3+0]"));
    CHECK_THROWS(Partition::parse("[a]"));
  }
}
