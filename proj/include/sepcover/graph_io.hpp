#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sepcover/graph_sequence.hpp"

namespace sepcover {

inline constexpr const char* kGraphFormatVersion = "graphseq v1";

// Strict reader for the line-oriented graph sequence format:
//
//   graphseq v1
//   vertices <N>
//   degree <D>
//   horizon <H>
//   edge <u> <v> <birth>      (any number)
//
// Blank lines and `#` comments are skipped. Throws ParseError.
GraphSequence read_graph_sequence(std::istream& in, const std::string& source = "<graph>");
GraphSequence read_graph_file(const std::filesystem::path& path);

void write_graph_sequence(std::ostream& out, const GraphSequence& g);

}  // namespace sepcover
