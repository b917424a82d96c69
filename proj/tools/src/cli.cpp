#include "graphflag_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphflag/graphflag.hpp"

namespace graphflag::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  json data = json::object();
  std::string text;
};

// Integers that fit in 64 bits become json numbers, larger ones decimal strings.
json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const Rational& q) {
  if (q.get_den() == 1) return to_json(Integer(q.get_num()));
  return q.get_str();
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const VerboseVector& v) {
  json out = json::object();
  const auto coeffs = v.coefficients();
  for (std::uint32_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w] != 0) out[Word(v.length(), w).to_string()] = to_json(coeffs[w]);
  }
  return out;
}

json to_json(const ConciseVector& v) {
  json out = json::array();
  for (const auto& [p, c] : v.terms()) {
    out.push_back({{"partition", to_json(p)}, {"coefficient", to_json(c)}});
  }
  return out;
}

json to_json(const EdgeWordVector& v) {
  json out = json::object();
  const auto coeffs = v.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out[EdgeWordVector::word_at(v.length(), k)] = to_json(coeffs[k]);
  }
  return out;
}

json to_json(const GraphSum& s) {
  json out = json::array();
  for (const auto& [key, c] : s.terms()) {
    out.push_back({{"graph", format_graph(key.graph())}, {"coefficient", to_json(c)}});
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<OptionalGraph> read_graphs(const std::string& graph, const std::string& file) {
  if (graph.empty() == file.empty()) throw UsageError("exactly one of --graph and --graph-file is required");
  if (!graph.empty()) return {parse_graph(graph)};
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read --graph-file " + file);
  std::vector<OptionalGraph> graphs;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    try {
      graphs.push_back(parse_graph(body));
    } catch (const ParseError& e) {
      throw ParseError(file + " line " + std::to_string(line_number) + ": " + e.what(), e.position());
    }
  }
  return graphs;
}

Graph plain_graph(const std::string& text, const char* command) {
  const OptionalGraph og = parse_graph(text);
  if (!og.is_plain()) throw UsageError(std::string(command) + " does not accept optional edges");
  return og.regular();
}

// --- commands ---------------------------------------------------------------

struct FlagvecArgs {
  std::string form = "verbose";
  std::string graph;
  std::string file;
  std::optional<std::string> method;
};

Output cmd_flagvec(const FlagvecArgs& a) {
  if (a.method && a.form != "verbose") throw UsageError("--method applies only to --form verbose");
  const VerboseMethod method =
      a.method.value_or("recursion") == "shelling" ? VerboseMethod::shelling_sum : VerboseMethod::recursion;
  Output o;
  o.data["command"] = "flagvec";
  o.data["form"] = a.form;
  if (a.form == "verbose") o.data["method"] = a.method.value_or("recursion");
  o.data["results"] = json::array();
  const auto graphs = read_graphs(a.graph, a.file);
  for (const OptionalGraph& g : graphs) {
    std::string text;
    json value;
    if (a.form == "verbose") {
      const VerboseVector v = verbose_flag_vector(g, method);
      text = v.to_string();
      value = to_json(v);
    } else {
      const ConciseVector v = a.form == "concise" ? concise_flag_vector(g)
                              : g.is_plain()      ? subgraph_flag_vector(g.regular())
                                                  : subgraph_flag_vector(expand(g));
      text = v.to_string();
      value = to_json(v);
    }
    o.data["results"].push_back({{"graph", format_graph(g)}, {"vector", value}});
    o.text += a.file.empty() ? text + '\n' : format_graph(g) + '\t' + text + '\n';
  }
  return o;
}

Output cmd_complement(const std::string& graph, bool transform) {
  const Graph g = plain_graph(graph, "complement");
  const Graph c = complement(g);
  Output o;
  o.data["command"] = "complement";
  o.data["graph"] = format_graph(g);
  o.data["complement"] = format_graph(c);
  o.data["canonical"] = canonical_key(c).to_string();
  o.text = "graph: " + format_graph(g) + "\ncomplement: " + format_graph(c) +
           "\ncanonical: " + canonical_key(c).to_string() + '\n';
  if (transform) {
    const VerboseVector v = verbose_flag_vector(g);
    const VerboseVector t = complement_transform(v);
    const bool matches = t == verbose_flag_vector(c);
    o.data["verbose"] = to_json(v);
    o.data["transformed"] = to_json(t);
    o.data["matches"] = matches;
    o.text += "verbose: " + v.to_string() + "\ntransformed: " + t.to_string() +
              "\nmatches: " + (matches ? "true" : "false") + '\n';
  }
  return o;
}

Output cmd_rank(int n) {
  const std::size_t r = span_dimension(n);
  Output o;
  o.data["command"] = "rank";
  o.data["n"] = n;
  o.data["classes"] = enumerate_graphs(n).size();
  o.data["partitions"] = enumerate_partitions(n).size();
  o.data["rank"] = r;
  for (const auto& [key, value] : o.data.items()) {
    if (key != "command") o.text += key + ": " + value.dump() + '\n';
  }
  return o;
}

Output cmd_hull(int n, const std::string& mode) {
  const HullReport report = mode == "facets" ? delta_hull(n) : delta_vertices(n);
  Output o;
  o.text = to_text(report);
  o.data["command"] = "hull";
  o.data["n"] = n;
  json coords = json::array();
  for (const Partition& p : report.coordinates) coords.push_back(to_json(p));
  o.data["coordinates"] = coords;
  o.data["points"] = report.points.size();
  o.data["distinct"] = report.distinct_count();
  o.data["vertices"] = report.vertex_count();
  json points = json::array();
  for (const HullPoint& p : report.points) {
    json c = json::array();
    for (const Integer& z : p.coordinates) c.push_back(to_json(z));
    points.push_back({{"key", p.key.to_string()},
                      {"coordinates", c},
                      {"vertex", p.vertex},
                      {"distinct", p.distinct}});
  }
  o.data["point_list"] = points;
  if (report.facets) {
    json facets = json::array();
    for (const Inequality& f : *report.facets) {
      json c = json::array();
      for (const Integer& z : f.coefficients) c.push_back(to_json(z));
      facets.push_back({{"coefficients", c}, {"offset", to_json(f.offset)}});
    }
    o.data["facets"] = facets.size();
    o.data["facet_list"] = facets;
  }
  return o;
}

Output cmd_nullspace(int n) {
  const NullspaceReport r = nullspace_report(n);
  Output o;
  o.text = to_text(r);
  o.data["command"] = "nullspace";
  o.data["n"] = r.n;
  o.data["class_count"] = r.class_count;
  o.data["partition_count"] = r.partition_count;
  o.data["kernel_dim"] = r.kernel_dim;
  o.data["cycle_span_dim"] = r.cycle_span_dim;
  o.data["spans"] = r.spans;
  o.data["relations_examined"] = r.relations_examined;
  json kernel = json::array();
  for (const GraphSum& s : r.kernel) kernel.push_back(to_json(s));
  o.data["kernel"] = kernel;
  return o;
}

Output cmd_average(int n, const std::optional<std::string>& word) {
  const VerboseVector total = total_flag_vector(n);
  Integer graphs;
  mpz_ui_pow_ui(graphs.get_mpz_t(), 2, static_cast<unsigned long>(pair_count(n)));
  Output o;
  o.data["command"] = "average";
  o.data["n"] = n;
  o.data["labelled_graphs"] = to_json(graphs);
  o.text = "n: " + std::to_string(n) + "\nlabelled_graphs: " + graphs.get_str() + '\n';
  auto mean = [&](const Integer& t) {
    Rational q(t, graphs);
    q.canonicalize();
    return q;
  };
  if (word) {
    const Word w = Word::parse(*word);
    if (w.length() != n) throw UsageError("--word must have length " + std::to_string(n));
    o.data["word"] = *word;
    o.data["total"] = to_json(total[w]);
    o.data["mean"] = to_json(mean(total[w]));
    o.text += "word: " + *word + "\ntotal: " + total[w].get_str() + "\nmean: " + mean(total[w]).get_str() + '\n';
  } else {
    json words = json::array();
    const auto coeffs = total.coefficients();
    for (std::uint32_t b = 0; b < coeffs.size(); ++b) {
      if (coeffs[b] == 0) continue;
      const std::string w = Word(n, b).to_string();
      words.push_back({{"word", w}, {"total", to_json(coeffs[b])}, {"mean", to_json(mean(coeffs[b]))}});
      o.text += w + ' ' + coeffs[b].get_str() + ' ' + mean(coeffs[b]).get_str() + '\n';
    }
    o.data["words"] = words;
  }
  return o;
}

Output cmd_enumerate(int n) {
  const auto classes = enumerate_graphs(n);
  Output o;
  o.data["command"] = "enumerate";
  o.data["n"] = n;
  o.data["count"] = classes.size();
  o.text = "n: " + std::to_string(n) + "\ncount: " + std::to_string(classes.size()) + '\n';
  json list = json::array();
  for (const Graph& g : classes) {
    const std::string key = canonical_key(g).to_string();
    const Partition p = connected_partition(g);
    list.push_back({{"key", key},
                    {"graph", format_graph(g)},
                    {"edges", g.edge_count()},
                    {"partition", to_json(p)}});
    o.text += key + ' ' + format_graph(g) + ' ' + std::to_string(g.edge_count()) + ' ' + p.to_string() + '\n';
  }
  o.data["classes"] = list;
  return o;
}

Output cmd_basis(const std::string& text) {
  const Partition p = Partition::parse(text);
  for (int part : p.parts()) check_limit("basis part size", part, kMaxBasisPart);
  const auto terms = basis_terms(p);
  const GraphSum expanded = basis_graph(p);
  const ConciseVector concise = concise_flag_vector(expanded);
  Output o;
  o.data["command"] = "basis";
  o.data["partition"] = to_json(p);
  o.data["anchor_word"] = anchor_word(p).to_string();
  o.text = "partition: " + p.to_string() + "\nanchor_word: " + anchor_word(p).to_string() + '\n';
  json list = json::array();
  for (const auto& [c, g] : terms) {
    list.push_back({{"coefficient", to_json(c)}, {"graph", format_graph(g)}});
    o.text += "term: " + c.get_str() + ' ' + format_graph(g) + '\n';
  }
  o.data["terms"] = list;
  o.data["expanded"] = to_json(expanded);
  o.data["concise"] = to_json(concise);
  o.text += "expanded: " + format_sum(expanded) + "\nconcise: " + concise.to_string() + '\n';
  return o;
}

Output cmd_edgeflag(const std::string& graph) {
  const Graph g = plain_graph(graph, "edgeflag");
  const EdgeWordVector v = edge_flag_vector(g);
  Output o;
  o.data["command"] = "edgeflag";
  o.data["graph"] = format_graph(g);
  o.data["vector"] = to_json(v);
  o.text = v.to_string() + '\n';
  return o;
}

ComponentFactors parse_factors(const std::string& text) {
  std::vector<std::int64_t> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--factors expects three integers such as 1,2,4");
    }
  }
  if (values.size() != 3) throw UsageError("--factors expects three integers such as 1,2,4");
  return {values[0], values[1], values[2]};
}

struct SelftestOutput {
  Output output;
  bool passed = true;
};

SelftestOutput cmd_selftest(const std::string& factors, int criterion, bool timings) {
  AcceptanceOptions options;
  if (!factors.empty()) options.factors = parse_factors(factors);
  std::vector<CriterionResult> results;
  if (criterion) {
    if (criterion < 1 || criterion > kCriterionCount) {
      throw UsageError("--criterion must lie in 1.." + std::to_string(kCriterionCount));
    }
    results.push_back(run_criterion(criterion, options));
  } else {
    results = run_acceptance(options);
  }
  SelftestOutput s;
  Output& o = s.output;
  o.data["command"] = "selftest";
  json list = json::array();
  int passed = 0;
  for (const CriterionResult& r : results) {
    passed += r.passed;
    json entry = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (timings) entry["seconds"] = r.seconds;
    list.push_back(entry);
    std::ostringstream line;
    line << '[' << (r.passed ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.name;
    if (timings) line << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    line << " - " << r.detail;
    o.text += line.str() + '\n';
  }
  o.data["criteria"] = list;
  o.data["passed"] = passed;
  o.data["total"] = results.size();
  o.text += std::to_string(passed) + " of " + std::to_string(results.size()) + " criteria passed\n";
  s.passed = passed == static_cast<int>(results.size());
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag vectors of graphs: exact computation and polytope analysis", "graphflag"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.fallthrough();

  FlagvecArgs flagvec;
  auto* flagvec_cmd = app.add_subcommand("flagvec", "Flag vector of one or more graphs");
  flagvec_cmd->add_option("--form", flagvec.form)->check(CLI::IsMember({"verbose", "concise", "subgraph"}));
  auto* graph_opt = flagvec_cmd->add_option("--graph", flagvec.graph, "Graph such as 3:0-1,?1-2");
  auto* file_opt = flagvec_cmd->add_option("--graph-file", flagvec.file, "One graph per line, # comments");
  graph_opt->excludes(file_opt);
  flagvec_cmd->add_option("--method", flagvec.method)->check(CLI::IsMember({"recursion", "shelling"}));

  std::string complement_graph;
  bool transform = false;
  auto* complement_cmd = app.add_subcommand("complement", "Complement graph and verbose transform");
  complement_cmd->add_option("--graph", complement_graph)->required();
  complement_cmd->add_flag("--transform", transform);

  int n = 0;
  auto* rank_cmd = app.add_subcommand("rank", "Rank of the concise vectors of all n-vertex graphs");
  rank_cmd->add_option("--n", n)->required();

  std::string mode = "vertices";
  auto* hull_cmd = app.add_subcommand("hull", "Vertices or facets of the flag-vector convex hull");
  hull_cmd->add_option("--n", n)->required();
  hull_cmd->add_option("--mode", mode)->check(CLI::IsMember({"vertices", "facets"}));

  auto* nullspace_cmd = app.add_subcommand("nullspace", "Formal sums with zero flag vector");
  nullspace_cmd->add_option("--n", n)->required();

  std::optional<std::string> word;
  auto* average_cmd = app.add_subcommand("average", "Total flag vector over all labelled graphs");
  average_cmd->add_option("--n", n)->required();
  average_cmd->add_option("--word", word);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Isomorphism classes of n-vertex graphs");
  enumerate_cmd->add_option("--n", n)->required();

  std::string partition;
  auto* basis_cmd = app.add_subcommand("basis", "Formal sum whose concise vector is one partition");
  basis_cmd->add_option("--partition", partition)->required();

  std::string edge_graph;
  auto* edgeflag_cmd = app.add_subcommand("edgeflag", "Edge flag vector");
  edgeflag_cmd->add_option("--graph", edge_graph)->required();

  std::string factors;
  int criterion = 0;
  bool timings = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest_cmd->add_option("--factors", factors, "Component factors c(1),c(2),c(3+)");
  selftest_cmd->add_option("--criterion", criterion, "Run a single criterion");
  selftest_cmd->add_flag("--timings", timings, "Report per-criterion run times");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Output o;
    int code = kExitOk;
    if (*flagvec_cmd) {
      o = cmd_flagvec(flagvec);
    } else if (*complement_cmd) {
      o = cmd_complement(complement_graph, transform);
    } else if (*rank_cmd) {
      o = cmd_rank(n);
    } else if (*hull_cmd) {
      o = cmd_hull(n, mode);
    } else if (*nullspace_cmd) {
      o = cmd_nullspace(n);
    } else if (*average_cmd) {
      o = cmd_average(n, word);
    } else if (*enumerate_cmd) {
      o = cmd_enumerate(n);
    } else if (*basis_cmd) {
      o = cmd_basis(partition);
    } else if (*edgeflag_cmd) {
      o = cmd_edgeflag(edge_graph);
    } else {
      SelftestOutput s = cmd_selftest(factors, criterion, timings);
      o = std::move(s.output);
      if (!s.passed) code = kExitSelftestFailed;
    }
    if (format == "json") {
      out << o.data.dump(2) << '\n';
    } else {
      out << o.text;
    }
    return code;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutsideSpanError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace graphflag::cli
