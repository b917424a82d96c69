#include "graphflag/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "graphflag/errors.hpp"
#include "graphflag/polytope.hpp"
#include "graphflag/shelling.hpp"

namespace graphflag {

namespace {

// Collects the first few failures of a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& text) { extra_ += (extra_.empty() ? "" : ", ") + text; }
  bool passed() const { return failures_ == 0; }
  std::string detail() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed: " << notes_;
    if (!extra_.empty()) out << "; " << extra_;
    return out.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string notes_;
  std::string extra_;
};

Graph graph(std::string_view text) { return parse_graph(text).regular(); }

VerboseVector verbose_from_text(int n, std::string_view text) {
  VerboseVector v(n);
  std::istringstream in{std::string(text)};
  std::string term;
  while (in >> term) {
    const auto colon = term.find(':');
    v.add(Word::parse(term.substr(0, colon)), Integer(term.substr(colon + 1)));
  }
  return v;
}

Integer power_of_two(int k) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return z;
}

std::vector<Graph> classes_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    for (Graph& g : enumerate_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

const std::vector<Graph>& three_vertex_graphs() {
  static const std::vector<Graph> graphs{graph("3:"), graph("3:0-1"), graph("3:0-1,1-2"),
                                         graph("3:0-1,1-2,0-2")};
  return graphs;
}

void criterion_1(Checker& c, const AcceptanceOptions&) {
  const char* expected[] = {"aaa:6", "aaa:6 aba:2 baa:4", "aaa:6 aba:4 baa:8 bba:4",
                            "aaa:6 aba:6 baa:12 bba:12"};
  for (int k = 0; k < 4; ++k) {
    const VerboseVector v = verbose_flag_vector(three_vertex_graphs()[k]);
    c.expect(v == verbose_from_text(3, expected[k]),
             "3_" + std::to_string(k) + " gave " + v.to_string());
  }
}

GraphSum three_vertex_relation() {
  const auto& g = three_vertex_graphs();
  GraphSum s(3);
  const int coefficient[] = {1, -3, 3, -1};
  for (int k = 0; k < 4; ++k) s.add(g[k], coefficient[k]);
  return s;
}

void criterion_2(Checker& c, const AcceptanceOptions&) {
  const GraphSum relation = three_vertex_relation();
  c.expect(verbose_flag_vector(relation).is_zero(), "verbose form nonzero");
  c.expect(concise_flag_vector(relation).is_zero(), "concise form nonzero");
  c.expect(subgraph_flag_vector(relation).is_zero(), "subgraph form nonzero");
  c.expect(expand(parse_graph("3:?0-1,?1-2,?0-2")) == Integer(-1) * relation,
           "optional triangle does not expand to the relation");
}

void criterion_3(Checker& c, const AcceptanceOptions&) {
  struct Row {
    Graph g;
    int values[5];  // [1+1+1+1] [2+1+1] [2+2] [3+1] [4]
  };
  const Graph c4 = graph("4:0-1,1-2,2-3,0-3");
  const std::vector<Row> table{
      {graph("4:"), {1, 0, 0, 0, 0}},
      {graph("4:0-1"), {1, 1, 0, 0, 0}},
      {graph("4:0-1,2-3"), {1, 2, 1, 0, 0}},
      {graph("4:0-1,1-2"), {1, 2, 0, 1, 0}},
      {graph("4:0-1,1-2,2-3"), {1, 3, 1, 2, 2}},
      {graph("4:0-1,1-2,0-2"), {1, 3, 0, 3, 0}},
      {graph("4:0-1,0-2,0-3"), {1, 3, 0, 3, 3}},
      {complement(graph("4:0-1,1-2")), {1, 4, 1, 5, 7}},
      {c4, {1, 4, 2, 4, 8}},
      {complement(graph("4:0-1")), {1, 5, 2, 8, 18}},
      {complement(graph("4:")), {1, 6, 3, 12, 36}},
  };
  const Partition columns[] = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  std::set<CanonicalKey> keys;
  for (const Row& row : table) {
    keys.insert(canonical_key(row.g));
    const ConciseVector v = concise_flag_vector(row.g);
    ConciseVector expected(4);
    for (int k = 0; k < 5; ++k) expected.add(columns[k], row.values[k]);
    c.expect(v == expected, format_graph(row.g) + " gave " + v.to_string());
  }
  c.expect(keys.size() == 11 && enumerate_graphs(4).size() == 11,
           "table rows are not the 11 isomorphism classes");
}

void criterion_4(Checker& c, const AcceptanceOptions&) {
  const HullReport report = delta_vertices(4);
  c.expect(report.points.size() == 11, "expected 11 points");
  c.expect(report.distinct_count() == 11, "points are not distinct");
  c.expect(report.vertex_count() == 11, "not every point is a vertex");
  for (const HullPoint& p : report.points) {
    if (!p.vertex) continue;
    // separator . q + offset >= 0 on the other points and < 0 on p
    auto value = [&](const std::vector<Integer>& q) {
      Rational s = p.separator_offset;
      for (std::size_t k = 0; k < q.size(); ++k) s += p.separator[k] * Rational(q[k]);
      return s;
    };
    bool ok = value(p.coordinates) < 0;
    for (const HullPoint& q : report.points) {
      if (&q != &p && value(q.coordinates) < 0) ok = false;
    }
    c.expect(ok, "separator of " + p.key.to_string() + " does not verify");
  }
}

void criterion_5(Checker& c, const AcceptanceOptions&) {
  const std::size_t expected[] = {1, 2, 3, 5, 7, 11};
  for (int n = 1; n <= 6; ++n) {
    const std::size_t dim = span_dimension(n);
    const std::size_t p = enumerate_partitions(n).size();
    c.expect(dim == p && p == expected[n - 1] && partition_count(n) == static_cast<long>(p),
             "n=" + std::to_string(n) + " span " + std::to_string(dim) + " vs p(n) " +
                 std::to_string(p));
  }
}

void criterion_6(Checker& c, const AcceptanceOptions&) {
  for (const Graph& g : classes_up_to(5)) {
    c.expect(verbose_flag_vector(g, VerboseMethod::recursion) ==
                 verbose_flag_vector(g, VerboseMethod::shelling_sum),
             "methods disagree on " + format_graph(g));
  }
}

void criterion_7(Checker& c, const AcceptanceOptions& options) {
  for (const Graph& g : classes_up_to(5)) {
    const VerboseVector v = verbose_flag_vector(g);
    const VerboseVector t = complement_transform(v);
    c.expect(t == verbose_flag_vector(complement(g)), "conjugation fails on " + format_graph(g));
    c.expect(complement_transform(t) == v, "transform not an involution on " + format_graph(g));
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coefficient(-50, 50);
  for (int n = 0; n <= 6; ++n) {
    VerboseVector v(n);
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) v.add_at(w, coefficient(rng));
    c.expect(complement_transform(complement_transform(v)) == v,
             "transform not an involution on a random vector of length " + std::to_string(n));
  }
}

void criterion_8(Checker& c, const AcceptanceOptions&) {
  for (int n = 2; n <= 4; ++n) {
    VerboseVector sum(n);
    const std::uint64_t labelled = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t bits = 0; bits < labelled; ++bits) {
      sum += verbose_flag_vector(Graph::from_adjacency_bits(n, bits));
    }
    c.expect(sum == total_flag_vector(n), "n=" + std::to_string(n) + " brute force differs");
  }
}

// Random optional-edge graph whose optional set contains a cycle.
OptionalGraph random_optional_cycle_graph(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(3, 6)(rng);
  const int k = std::uniform_int_distribution<int>(3, n)(rng);
  std::vector<int> vertices(n);
  for (int v = 0; v < n; ++v) vertices[v] = v;
  std::shuffle(vertices.begin(), vertices.end(), rng);
  Graph optional(n);
  for (int i = 0; i < k; ++i) {
    const int u = vertices[i];
    const int v = vertices[(i + 1) % k];
    optional = optional.with_edge(std::min(u, v), std::max(u, v));
  }
  Graph regular(n);
  std::bernoulli_distribution extra_optional(0.15);
  std::bernoulli_distribution regular_edge(0.4);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (optional.has_edge(u, v)) continue;
      if (optional.edge_count() < 8 && extra_optional(rng)) {
        optional = optional.with_edge(u, v);
      } else if (regular_edge(rng)) {
        regular = regular.with_edge(u, v);
      }
    }
  }
  return OptionalGraph(regular, optional);
}

void criterion_9(Checker& c, const AcceptanceOptions& options) {
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < 50; ++trial) {
    const OptionalGraph og = random_optional_cycle_graph(rng);
    const std::string name = format_graph(og);
    c.expect(verbose_flag_vector(og).is_zero(), "direct verbose nonzero on " + name);
    c.expect(verbose_flag_vector(expand(og)).is_zero(), "expanded verbose nonzero on " + name);
    c.expect(concise_flag_vector(og).is_zero(), "concise nonzero on " + name);
  }
}

void criterion_10(Checker& c, const AcceptanceOptions&) {
  for (int n = 3; n <= 7; ++n) {
    const Partition whole{n};
    c.expect(concise_flag_vector(optional_path(n)) == ConciseVector::unit(whole, power_of_two(n - 3)),
             "optional A_" + std::to_string(n));
    c.expect(concise_flag_vector(optional_d_graph(n)) ==
                 ConciseVector::unit(whole, power_of_two(n - 2) - 1),
             "optional D_" + std::to_string(n));
  }
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& p : enumerate_partitions(n)) {
      c.expect(concise_flag_vector(basis_graph(p)) == ConciseVector::unit(p),
               "basis graph of " + p.to_string());
    }
    const auto m = anchor_matrix(n);
    for (std::size_t r = 0; r < m.size(); ++r) {
      c.expect(m[r][r] != 0, "zero diagonal at n=" + std::to_string(n));
      for (std::size_t col = 0; col < r; ++col) {
        c.expect(m[r][col] == 0, "anchor matrix not upper triangular at n=" + std::to_string(n));
      }
    }
  }
}

void criterion_11(Checker& c, const AcceptanceOptions& options) {
  for (const Graph& g : classes_up_to(5)) {
    const std::string name = format_graph(g);
    const ConciseVector concise = concise_flag_vector(g);
    const VerboseVector verbose = verbose_flag_vector(g);
    c.expect(verbose_from_concise(concise, options.factors) == verbose,
             "verbose_from_concise differs on " + name);
    try {
      c.expect(concise_from_verbose(verbose, SpanCheck::full, options.factors) == concise,
               "concise_from_verbose differs on " + name);
    } catch (const OutsideSpanError& e) {
      c.expect(false, "concise_from_verbose rejected " + name);
    }
    try {
      c.expect(scale_subgraph_to_concise(subgraph_flag_vector(g), options.factors) == concise,
               "subgraph scaling differs on " + name);
    } catch (const std::logic_error& e) {
      c.expect(false, "subgraph scaling inexact on " + name);
    }
  }
}

Integer run_factorial_product(const Word& w) {
  Integer product = 1;
  for (int d : a_run_lengths(w)) product *= factorial(d);
  return product;
}

void criterion_12(Checker& c, const AcceptanceOptions& options) {
  for (const Graph& g : classes_up_to(5)) {
    const VerboseVector v = verbose_flag_vector(g);
    const int n = g.order();
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
      const Word w(n, bits);
      c.expect(v[w] == run_factorial_product(w) * count_semiconcise_flags(g, w),
               "identity fails for " + w.to_string() + " on " + format_graph(g));
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << pair_count(7)) - 1);
  const Word w = Word::parse("aabbaaa");
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = Graph::from_adjacency_bits(7, bits(rng));
    const Integer value = verbose_flag_vector(g)[w];
    c.expect(value % 12 == 0, "aabbaaa coefficient not divisible by 12 on " + format_graph(g));
    c.expect(value == 12 * Integer(count_semiconcise_flags(g, w)),
             "aabbaaa identity fails on " + format_graph(g));
  }
}

void criterion_13(Checker& c, const AcceptanceOptions&) {
  const NullspaceReport three = nullspace_report(3);
  c.expect(three.kernel_dim == 1 && three.class_count == 4, "n=3 kernel dimension");
  c.expect(three.cycle_span_dim == 1 && three.spans, "n=3 optional triangle does not span");
  if (three.kernel.size() == 1) {
    const GraphSum relation = three_vertex_relation();
    const GraphSum& k = three.kernel.front();
    c.expect(k == relation || k == Integer(-1) * relation, "n=3 kernel is not the triangle relation");
  }
  const NullspaceReport four = nullspace_report(4);
  c.expect(four.class_count == 11 && four.partition_count == 5 && four.kernel_dim == 6,
           "n=4 kernel dimension");
  c.expect(four.cycle_span_dim <= four.kernel_dim, "n=4 cycle span exceeds kernel");
  for (const NullspaceReport* r : {&three, &four}) {
    for (const GraphSum& k : r->kernel) {
      c.expect(concise_flag_vector(k).is_zero() && verbose_flag_vector(k).is_zero(),
               "kernel element with nonzero flag vector");
    }
  }
  c.note("n=4 cycle span " + std::to_string(four.cycle_span_dim) + " of " +
         std::to_string(four.kernel_dim) + (four.spans ? " (spans)" : " (does not span)"));
}

struct Criterion {
  const char* name;
  std::function<void(Checker&, const AcceptanceOptions&)> run;
  double time_limit;  // seconds, 0 for none
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"verbose vectors of the 3-vertex graphs", criterion_1, 1},
      {"3-vertex linear relation in all three forms", criterion_2, 0},
      {"concise vectors of the 4-vertex graphs", criterion_3, 5},
      {"all 4-vertex points are distinct hull vertices", criterion_4, 10},
      {"span dimension equals p(n) for n = 1..6", criterion_5, 600},
      {"recursion and shelling-sum agree for n <= 5", criterion_6, 0},
      {"complement transform conjugation and involution", criterion_7, 0},
      {"total flag vector matches brute force for n = 2..4", criterion_8, 0},
      {"optional-cycle graphs have zero verbose vector", criterion_9, 0},
      {"basis graphs, A_n/D_n and triangular anchor matrix", criterion_10, 0},
      {"verbose/concise/subgraph conversions round-trip", criterion_11, 0},
      {"semi-concise identity and divisibility by 12", criterion_12, 0},
      {"nullspace dimensions at n = 3 and 4", criterion_13, 0},
  };
  return list;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  const Criterion& criterion = criteria()[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = criterion.name;
  Checker checker;
  const auto start = std::chrono::steady_clock::now();
  try {
    criterion.run(checker, options);
  } catch (const std::exception& e) {
    checker.expect(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = checker.passed();
  result.detail = checker.detail();
  if (criterion.time_limit > 0 && result.seconds > criterion.time_limit) {
    result.passed = false;
    result.detail += "; exceeded " + std::to_string(criterion.time_limit) + " s";
  }
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) results.push_back(run_criterion(id, options));
  return results;
}

}  // namespace graphflag
