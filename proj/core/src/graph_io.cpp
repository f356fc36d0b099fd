#include "ktuple/graph_io.hpp"

#include <fstream>
#include <istream>
#include <array>
#include <optional>
#include <set>
#include <sstream>

#include "ktuple/errors.hpp"

namespace ktuple {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw GraphError("line " + std::to_string(line_no) + ": " + what);
}

bool is_blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Reads exactly `count` unsigned integers from the line, nothing else.
template <std::size_t count>
std::optional<std::array<unsigned long long, count>> scan_integers(std::istringstream& fields) {
  std::array<unsigned long long, count> values{};
  for (auto& value : values) {
    std::string token;
    if (!(fields >> token)) return std::nullopt;
    if (token.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    try {
      value = std::stoull(token);
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
  }
  std::string extra;
  if (fields >> extra) return std::nullopt;
  return values;
}

}  // namespace

ParsedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> warnings;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (!n) {
      std::string tag;
      fields >> tag;
      if (tag != "n") fail(line_no, "expected header 'n <N>'");
      auto parsed = scan_integers<1>(fields);
      if (!parsed) fail(line_no, "malformed header");
      if ((*parsed)[0] == 0) fail(line_no, "graph must have at least one vertex");
      n = static_cast<std::size_t>((*parsed)[0]);
      continue;
    }
    auto parsed = scan_integers<2>(fields);
    if (!parsed) fail(line_no, "malformed edge line '" + line + "'");
    auto [u, v] = *parsed;
    if (u >= *n || v >= *n) fail(line_no, "vertex index out of range (n = " + std::to_string(*n) + ")");
    if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(e.first) + " " +
                         std::to_string(e.second) + " ignored");
      continue;
    }
    edges.push_back(e);
  }
  if (!n) throw GraphError("missing header 'n <N>'");
  return ParsedGraph{Graph(*n, edges), std::move(warnings)};
}

ParsedGraph read_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

ParsedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path.string() + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace ktuple
