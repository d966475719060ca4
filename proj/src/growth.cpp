#include "sepcover/growth.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "sepcover/errors.hpp"
#include "text_lines.hpp"

namespace sepcover {

namespace {

// max(v + 2, 2 (v + 1)) with saturation.
std::uint64_t required_successor(std::uint64_t v) {
  if (v == kSaturated || v > (kSaturated - 2) / 2) return kSaturated;
  return std::max(v + 2, 2 * (v + 1));
}

}  // namespace

GrowthFunction::GrowthFunction(std::vector<std::uint64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("growth function needs at least f(0)");
}

std::uint64_t GrowthFunction::operator()(Stage n) const {
  if (n >= values_.size()) {
    throw std::out_of_range("growth function queried at " + std::to_string(n) + " past horizon " +
                            std::to_string(horizon()));
  }
  return values_[n];
}

GrowthFunction canonical_f(Stage horizon, std::uint64_t f0) {
  std::vector<std::uint64_t> values(static_cast<std::size_t>(horizon) + 1);
  values[0] = f0;
  for (std::size_t n = 1; n < values.size(); ++n) values[n] = required_successor(values[n - 1]);
  return GrowthFunction(std::move(values));
}

std::optional<Stage> first_growth_violation(const GrowthFunction& f) {
  const auto v = f.values();
  for (std::size_t n = 0; n + 1 < v.size(); ++n) {
    if (v[n + 1] == kSaturated) continue;
    if (v[n] == kSaturated || v[n + 1] < required_successor(v[n])) return static_cast<Stage>(n);
  }
  return std::nullopt;
}

bool validate_f(const GrowthFunction& f) { return !first_growth_violation(f).has_value(); }

GrowthFunction parse_growth_spec(const std::string& spec, Stage horizon) {
  constexpr std::string_view kCanonical = "canonical:";
  constexpr std::string_view kFile = "file:";
  if (spec.starts_with(kCanonical)) {
    const std::string rest = spec.substr(kCanonical.size());
    detail::Line line;
    line.number = 1;
    line.text = rest;
    const detail::Token tok{line.text, kCanonical.size() + 1};
    return canonical_f(horizon, detail::parse_count("--f", line, tok));
  }
  if (spec.starts_with(kFile)) {
    const std::string path = spec.substr(kFile.size());
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, 0, "cannot open file");
    std::vector<std::uint64_t> values;
    std::size_t line_number = 0;
    detail::Line line;
    while (detail::next_line(in, line_number, line)) {
      for (const auto& tok : line.tokens) {
        values.push_back(tok.text == "inf" ? kSaturated : detail::parse_count(path, line, tok));
      }
    }
    if (values.empty()) throw ParseError(path, line_number, 0, "no values");
    if (values.size() > static_cast<std::size_t>(horizon) + 1) values.resize(horizon + 1);
    while (values.size() < static_cast<std::size_t>(horizon) + 1) values.push_back(values.back());
    return GrowthFunction(std::move(values));
  }
  throw ConfigError("growth function must be 'canonical:<f0>' or 'file:<path>', got '" + spec + "'");
}

std::string format_growth_value(std::uint64_t v) {
  return v == kSaturated ? std::string("inf") : std::to_string(v);
}

}  // namespace sepcover
