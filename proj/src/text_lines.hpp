#pragma once

// Line tokenizer shared by the text file readers. Internal to the library.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "sepcover/errors.hpp"

namespace sepcover::detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string text;
  std::vector<Token> tokens;
};

// Reads the next line that has at least one token. `#` starts a comment. Returns false at EOF.
// Tokens are split on whitespace; `extra_separators` are treated as whitespace as well.
inline bool next_line(std::istream& in, std::size_t& line_number, Line& line,
                      std::string_view extra_separators = {}) {
  while (std::getline(in, line.text)) {
    ++line_number;
    line.number = line_number;
    line.tokens.clear();
    std::string_view view = line.text;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto is_sep = [&](char c) {
      return c == ' ' || c == '\t' || c == '\r' || extra_separators.find(c) != std::string_view::npos;
    };
    std::size_t i = 0;
    while (i < view.size()) {
      while (i < view.size() && is_sep(view[i])) ++i;
      const std::size_t start = i;
      while (i < view.size() && !is_sep(view[i])) ++i;
      if (i > start) line.tokens.push_back({view.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) return true;
  }
  return false;
}

inline std::uint64_t parse_count(const std::string& source, const Line& line, const Token& tok) {
  std::uint64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(source, line.number, tok.column,
                     "expected a non-negative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

inline void expect_arity(const std::string& source, const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    const std::size_t column =
        line.tokens.size() > count ? line.tokens[count].column : line.text.size() + 1;
    throw ParseError(source, line.number, column,
                     "directive '" + std::string(line.tokens[0].text) + "' expects " +
                         std::to_string(count - 1) + " argument(s)");
  }
}

}  // namespace sepcover::detail
