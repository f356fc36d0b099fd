#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ktuple/graph.hpp"

namespace ktuple {

// Edge-list text format:
//   # optional comment lines
//   n <N>
//   <u> <v>        one edge per line, 0-indexed, whitespace separated
//
// Duplicate edges are dropped with a warning; self-loops, out-of-range
// endpoints and malformed lines throw GraphError naming the line.

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

ParsedGraph read_graph(std::istream& in);
ParsedGraph read_graph(std::string_view text);
ParsedGraph read_graph_file(const std::filesystem::path& path);

/// Canonical form: header line, then edges with u < v in lexicographic order.
std::string write_graph(const Graph& g);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace ktuple
