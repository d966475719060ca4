#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sepcover {

// Malformed input text. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

// A structural invariant of some module was violated by otherwise well-formed input.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string module, const std::string& what)
      : std::runtime_error("[" + module + "] " + what), module_(std::move(module)) {}

  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

// Parameters that cannot be satisfied (empty region list, horizon too short, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sepcover
