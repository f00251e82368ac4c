#include "neumaier/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "neumaier/error.hpp"

namespace neumaier::graph {

namespace {

std::vector<std::size_t> parse_fields(const std::string& line, std::size_t line_no) {
  std::vector<std::size_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::size_t value = 0;
    const auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw InputError("graph file line " + std::to_string(line_no) + ": expected non-negative integers");
    }
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = edge_list(g);
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw InputError("graph file: missing header line");
  const auto header = parse_fields(line, line_no);
  if (header.size() != 2) throw InputError("graph file line 1: header must be 'v m'");
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  if (n > 0 && m > n * (n - 1) / 2) throw InputError("graph file line 1: too many edges for v");

  Graph g(n);
  std::size_t prev_u = 0, prev_v = 0;
  for (std::size_t i = 0; i < m; ++i) {
    ++line_no;
    if (!std::getline(in, line)) {
      throw InputError("graph file: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    const auto f = parse_fields(line, line_no);
    const std::string where = "graph file line " + std::to_string(line_no) + ": ";
    if (f.size() != 2) throw InputError(where + "edge must be 'u v'");
    const auto [u, v] = std::pair{f[0], f[1]};
    if (u >= v) throw InputError(where + "endpoints must satisfy u < v");
    if (v >= n) throw InputError(where + "vertex out of range");
    if (i > 0 && std::pair{u, v} <= std::pair{prev_u, prev_v}) {
      throw InputError(where + "edges must be strictly increasing");
    }
    g.add_edge(u, v);
    prev_u = u;
    prev_v = v;
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!parse_fields(line, line_no).empty()) {
      throw InputError("graph file line " + std::to_string(line_no) + ": unexpected data after edges");
    }
  }
  return g;
}

Graph from_text(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file " + path);
  write_graph(out, g);
}

}  // namespace neumaier::graph
