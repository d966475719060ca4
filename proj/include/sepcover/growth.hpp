#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepcover/graph_sequence.hpp"

namespace sepcover {

inline constexpr const char* kGrowthFormatVersion = "growth v1";

// Value standing for "exceeds every graph distance". Doubling overflows 64 bits after
// 63 stages, while any finite graph has diameter below its vertex count, so saturated
// values keep the separation and diameter statements meaningful. Equal to
// kUnboundedRadius, so it can be passed to BFS directly.
inline constexpr std::uint64_t kSaturated = kUnboundedRadius;

// The separation schedule f(0), ..., f(horizon).
class GrowthFunction {
 public:
  GrowthFunction() : values_{0} {}
  // Throws std::invalid_argument when `values` is empty.
  explicit GrowthFunction(std::vector<std::uint64_t> values);

  std::uint64_t operator()(Stage n) const;
  Stage horizon() const { return static_cast<Stage>(values_.size() - 1); }
  std::span<const std::uint64_t> values() const { return values_; }

  static bool saturated(std::uint64_t v) { return v == kSaturated; }

 private:
  std::vector<std::uint64_t> values_;
};

// f(0) = f0, f(n+1) = max(f(n) + 2, 2 (f(n) + 1)), saturating at kSaturated.
GrowthFunction canonical_f(Stage horizon, std::uint64_t f0 = 0);

// First n with f(n+1) < max(f(n) + 2, 2 (f(n) + 1)); saturated f(n+1) always passes and a
// saturated f(n) requires a saturated successor.
std::optional<Stage> first_growth_violation(const GrowthFunction& f);

bool validate_f(const GrowthFunction& f);

// Parses "canonical:<f0>" or "file:<path>" (whitespace-separated values, `#` comments,
// "inf" for a saturated value; the last value repeats up to `horizon`). Throws ConfigError
// or ParseError.
GrowthFunction parse_growth_spec(const std::string& spec, Stage horizon);

std::string format_growth_value(std::uint64_t v);

}  // namespace sepcover
