#pragma once

// Plain-text edge-list format: a header line "v m" followed by m lines
// "u w" with 0 <= u < w < v, sorted lexicographically.

#include <iosfwd>
#include <string>

#include "neumaier/graph.hpp"

namespace neumaier::graph {

void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);

/// Strict parser: rejects unsorted, duplicate or out-of-range edges, a wrong
/// edge count and trailing garbage, all with InputError naming the line.
Graph read_graph(std::istream& in);
Graph from_text(const std::string& text);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace neumaier::graph
