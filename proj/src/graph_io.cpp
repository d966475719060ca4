#include "sepcover/graph_io.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <vector>

#include "sepcover/errors.hpp"
#include "text_lines.hpp"

namespace sepcover {

namespace {

std::uint64_t header_value(std::istream& in, const std::string& source, std::size_t& line_number,
                           detail::Line& line, std::string_view keyword) {
  if (!detail::next_line(in, line_number, line)) {
    throw ParseError(source, line_number + 1, 0, "missing '" + std::string(keyword) + "' line");
  }
  if (line.tokens[0].text != keyword) {
    throw ParseError(source, line.number, line.tokens[0].column,
                     "expected '" + std::string(keyword) + "', got '" +
                         std::string(line.tokens[0].text) + "'");
  }
  detail::expect_arity(source, line, 2);
  return detail::parse_count(source, line, line.tokens[1]);
}

}  // namespace

GraphSequence read_graph_sequence(std::istream& in, const std::string& source) {
  std::size_t line_number = 0;
  detail::Line line;
  if (!detail::next_line(in, line_number, line)) {
    throw ParseError(source, line_number + 1, 0, "empty input, expected 'graphseq v1'");
  }
  if (line.tokens.size() != 2 || line.tokens[0].text != "graphseq" || line.tokens[1].text != "v1") {
    throw ParseError(source, line.number, 1, "expected header 'graphseq v1'");
  }
  const std::uint64_t vertices = header_value(in, source, line_number, line, "vertices");
  if (vertices > std::numeric_limits<VertexId>::max()) {
    throw ParseError(source, line.number, line.tokens[1].column, "vertex count too large");
  }
  const std::uint64_t degree = header_value(in, source, line_number, line, "degree");
  const std::uint64_t horizon = header_value(in, source, line_number, line, "horizon");
  if (horizon > std::numeric_limits<Stage>::max() - 1) {
    throw ParseError(source, line.number, line.tokens[1].column, "horizon too large");
  }

  std::vector<Edge> edges;
  while (detail::next_line(in, line_number, line)) {
    if (line.tokens[0].text != "edge") {
      throw ParseError(source, line.number, line.tokens[0].column,
                       "unknown directive '" + std::string(line.tokens[0].text) + "'");
    }
    detail::expect_arity(source, line, 4);
    const auto u = detail::parse_count(source, line, line.tokens[1]);
    const auto v = detail::parse_count(source, line, line.tokens[2]);
    const auto birth = detail::parse_count(source, line, line.tokens[3]);
    if (u >= vertices) throw ParseError(source, line.number, line.tokens[1].column, "vertex out of range");
    if (v >= vertices) throw ParseError(source, line.number, line.tokens[2].column, "vertex out of range");
    if (birth > horizon) {
      throw ParseError(source, line.number, line.tokens[3].column, "birth after horizon");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), static_cast<Stage>(birth)});
  }
  return GraphSequence(vertices, degree, static_cast<Stage>(horizon), std::move(edges));
}

GraphSequence read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  return read_graph_sequence(in, path.string());
}

void write_graph_sequence(std::ostream& out, const GraphSequence& g) {
  out << kGraphFormatVersion << '\n'
      << "vertices " << g.universe_size() << '\n'
      << "degree " << g.max_degree_bound() << '\n'
      << "horizon " << g.horizon() << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << e.u << ' ' << e.v << ' ' << e.birth << '\n';
  }
}

}  // namespace sepcover
