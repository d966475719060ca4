#include "sepcover/involution_io.hpp"

#include <fstream>
#include <optional>
#include <vector>

#include "sepcover/errors.hpp"
#include "text_lines.hpp"

namespace sepcover {

namespace {

constexpr std::string_view kTupleSeparators = "(),";

std::uint64_t header_value(std::istream& in, const std::string& source, std::size_t& line_number,
                           detail::Line& line, std::string_view keyword) {
  if (!detail::next_line(in, line_number, line)) {
    throw ParseError(source, line_number + 1, 0, "missing '" + std::string(keyword) + "' line");
  }
  if (line.tokens[0].text != keyword) {
    throw ParseError(source, line.number, line.tokens[0].column,
                     "expected '" + std::string(keyword) + "', got '" + std::string(line.tokens[0].text) + "'");
  }
  detail::expect_arity(source, line, 2);
  return detail::parse_count(source, line, line.tokens[1]);
}

FinitePoint parse_point(const std::string& source, const detail::Line& line, std::size_t first,
                        std::size_t depth, std::size_t ground) {
  std::vector<std::uint32_t> elems;
  for (std::size_t i = first; i < first + depth; ++i) {
    const auto x = detail::parse_count(source, line, line.tokens[i]);
    if (x >= ground) throw ParseError(source, line.number, line.tokens[i].column, "element outside the ground set");
    if (!elems.empty() && x <= elems.back()) {
      throw ParseError(source, line.number, line.tokens[i].column, "point elements must be strictly increasing");
    }
    elems.push_back(static_cast<std::uint32_t>(x));
  }
  return FinitePoint::from_elements(elems, ground);
}

}  // namespace

InvolutionFamily read_involutions(std::istream& in, const std::string& source) {
  std::size_t line_number = 0;
  detail::Line line;
  if (!detail::next_line(in, line_number, line)) {
    throw ParseError(source, line_number + 1, 0, "empty input, expected 'invfam v1'");
  }
  if (line.tokens.size() != 2 || line.tokens[0].text != "invfam" || line.tokens[1].text != "v1") {
    throw ParseError(source, line.number, 1, "expected header 'invfam v1'");
  }
  const auto ground = header_value(in, source, line_number, line, "ground");
  if (ground > kMaxGround) throw ParseError(source, line.number, line.tokens[1].column, "ground size exceeds 64");
  const auto depth = header_value(in, source, line_number, line, "depth");
  if (depth == 0 || depth > ground) {
    throw ParseError(source, line.number, line.tokens[1].column, "depth must lie in [1, ground]");
  }

  std::optional<std::uint64_t> declared;
  std::vector<InvolutionFamily::Map> maps;
  bool first = true;
  while (detail::next_line(in, line_number, line, kTupleSeparators)) {
    if (first && line.tokens[0].text == "involutions") {
      detail::expect_arity(source, line, 2);
      declared = detail::parse_count(source, line, line.tokens[1]);
      maps.resize(*declared);
      first = false;
      continue;
    }
    first = false;
    if (line.tokens[0].text != "map") {
      throw ParseError(source, line.number, line.tokens[0].column,
                       "unknown directive '" + std::string(line.tokens[0].text) + "'");
    }
    const std::size_t arrow = 2 + depth;
    if (line.tokens.size() != 3 + 2 * depth || line.tokens[arrow].text != "->") {
      throw ParseError(source, line.number, 0,
                       "expected 'map <i> <" + std::to_string(depth) + "-tuple> -> <" +
                           std::to_string(depth) + "-tuple>'");
    }
    const auto index = detail::parse_count(source, line, line.tokens[1]);
    if (declared && index >= *declared) {
      throw ParseError(source, line.number, line.tokens[1].column,
                       "map index beyond the declared " + std::to_string(*declared) + " involutions");
    }
    const FinitePoint from = parse_point(source, line, 2, depth, ground);
    const FinitePoint to = parse_point(source, line, arrow + 1, depth, ground);
    if (index >= maps.size()) maps.resize(index + 1);
    for (const auto& [p, q] : maps[index]) {
      if (p == from) throw ParseError(source, line.number, line.tokens[2].column, "point mapped twice");
    }
    maps[index].emplace_back(from, to);
  }
  return InvolutionFamily(ground, depth, maps);
}

InvolutionFamily read_involutions_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  return read_involutions(in, path.string());
}

void write_involutions(std::ostream& out, const InvolutionFamily& invs) {
  out << kInvolutionFormatVersion << '\n'
      << "ground " << invs.ground() << '\n'
      << "depth " << invs.depth() << '\n'
      << "involutions " << invs.size() << '\n';
  for (std::size_t i = 0; i < invs.size(); ++i) {
    for (const auto& [p, q] : invs.listing(i)) {
      out << "map " << i << ' ' << p.to_string() << " -> " << q.to_string() << '\n';
    }
  }
}

}  // namespace sepcover
