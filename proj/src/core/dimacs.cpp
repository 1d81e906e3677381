#include "dalli/dimacs.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace dalli {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool to_number(std::string_view s, long long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> forbidden;
  std::set<std::pair<Vertex, Vertex>> seen;

  auto vertex_arg = [&](std::string_view tok) {
    long long x = 0;
    if (!to_number(tok, x)) throw ParseError(ParseError::Kind::MalformedLine, line_no, "expected a vertex number");
    if (x < 1 || x > n) {
      throw ParseError(ParseError::Kind::OutOfRange, line_no, "vertex " + std::string(tok) + " out of range");
    }
    return static_cast<Vertex>(x - 1);
  };

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (have_header) throw ParseError(ParseError::Kind::MalformedHeader, line_no, "second header line");
      if (tok.size() != 4 || tok[1] != "edge" || !to_number(tok[2], n) || !to_number(tok[3], m) ||
          n < 0 || m < 0) {
        throw ParseError(ParseError::Kind::MalformedHeader, line_no, "expected 'p edge <n> <m>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(ParseError::Kind::MissingHeader, line_no, "data before 'p edge' header");

    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(ParseError::Kind::MalformedLine, line_no, "expected 'e <u> <v>'");
      const Vertex u = vertex_arg(tok[1]);
      const Vertex v = vertex_arg(tok[2]);
      if (u == v) throw ParseError(ParseError::Kind::SelfLoop, line_no, "self-loop");
      if (!seen.insert(std::minmax(u, v)).second) {
        throw ParseError(ParseError::Kind::DuplicateEdge, line_no, "duplicate edge");
      }
      edges.push_back({u, v});
      if (static_cast<long long>(edges.size()) > m) {
        throw ParseError(ParseError::Kind::EdgeCountMismatch, line_no, "more edges than the header declares");
      }
    } else if (tok[0] == "f") {
      if (tok.size() != 2) throw ParseError(ParseError::Kind::MalformedLine, line_no, "expected 'f <u>'");
      forbidden.push_back(vertex_arg(tok[1]));
    } else {
      throw ParseError(ParseError::Kind::MalformedLine, line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(ParseError::Kind::MissingHeader, line_no, "no 'p edge' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(ParseError::Kind::EdgeCountMismatch, line_no,
                     "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::build(static_cast<std::size_t>(n), edges, make_vertex_set(std::move(forbidden)));
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  for (Vertex f : g.forbidden()) out << "f " << f + 1 << '\n';
  return out.str();
}

}  // namespace dalli
