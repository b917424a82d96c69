#include <sstream>

#include "graphflag/polytope.hpp"

namespace graphflag {

namespace {

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += values[k].get_str();
  }
  return out;
}

}  // namespace

std::string to_text(const HullReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << '\n';
  out << "coordinates:";
  for (const Partition& p : report.coordinates) out << ' ' << p.to_string();
  out << '\n';
  out << "points: " << report.points.size() << '\n';
  out << "distinct: " << report.distinct_count() << '\n';
  out << "vertices: " << report.vertex_count() << '\n';
  for (const HullPoint& p : report.points) {
    out << p.key.to_string() << ' ' << join(p.coordinates) << ' '
        << (p.vertex ? "vertex" : "interior") << (p.distinct ? "" : " duplicate") << '\n';
  }
  if (report.facets) {
    out << "facets: " << report.facets->size() << '\n';
    for (const Inequality& f : *report.facets) out << f.to_string() << '\n';
  }
  return out.str();
}

std::string to_text(const NullspaceReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << '\n';
  out << "class_count: " << report.class_count << '\n';
  out << "partition_count: " << report.partition_count << '\n';
  out << "kernel_dim: " << report.kernel_dim << '\n';
  out << "cycle_span_dim: " << report.cycle_span_dim << '\n';
  out << "spans: " << (report.spans ? "true" : "false") << '\n';
  out << "relations_examined: " << report.relations_examined << '\n';
  for (const GraphSum& s : report.kernel) out << "kernel: " << format_sum(s) << '\n';
  return out.str();
}

}  // namespace graphflag
