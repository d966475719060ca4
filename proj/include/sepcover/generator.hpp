#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "sepcover/graph_sequence.hpp"

namespace sepcover {

struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t vertices = 0;
  std::size_t degree_bound = 1;
  std::size_t stages = 1;                // births are drawn from [0, stages)
  std::optional<std::size_t> edges;      // default vertices * degree_bound / 4
  std::optional<Stage> horizon;          // default stages - 1 + 2 * vertices
};

// Rejection process: draw a random pair and a random birth, keep the edge unless it repeats
// a pair or pushes an endpoint past the degree bound at some stage. Deterministic per seed.
// Throws ConfigError for infeasible parameters or when the edge target is not reached
// within the attempt budget.
GraphSequence gen_random(const GeneratorParams& params);

}  // namespace sepcover
