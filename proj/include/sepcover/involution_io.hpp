#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "sepcover/fusion.hpp"

namespace sepcover {

inline constexpr const char* kInvolutionFormatVersion = "invfam v1";

// invfam v1
// ground <N>
// depth <K>
// involutions <M>          (optional; otherwise 1 + the largest map index)
// map <i> (a,b,c) -> (d,e,f)
//
// Unlisted points are fixed. Throws ParseError for malformed text and InvariantViolation
// when a map is not self-inverse.
InvolutionFamily read_involutions(std::istream& in, const std::string& source);
InvolutionFamily read_involutions_file(const std::filesystem::path& path);
void write_involutions(std::ostream& out, const InvolutionFamily& invs);

}  // namespace sepcover
