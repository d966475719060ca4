#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sepcover/graph_sequence.hpp"

namespace sepcover {

// G_n^k: x ~ y iff x != y and dist_{G_n}(x, y) <= k.
struct PowerGraphSpec {
  const GraphSequence* base = nullptr;
  Stage stage = 0;
  Radius k = 0;
};

struct Coloring {
  std::vector<std::uint32_t> assignment;  // colour of each vertex
  std::size_t num_colors = 0;

  // Colour classes in colour order, each sorted ascending.
  std::vector<std::vector<VertexId>> classes() const;
};

// Greedy sequential colouring: each vertex in `order` takes the least colour not used by
// an already-coloured neighbour. `for_each_neighbor(v, f)` must call f(w) for every
// neighbour w of v. Uses at most 1 + (max degree) colours.
template <class ForEachNeighbor>
Coloring greedy_coloring(std::size_t vertex_count, std::span<const VertexId> order,
                         ForEachNeighbor&& for_each_neighbor) {
  constexpr std::uint32_t kUncolored = UINT32_MAX;
  Coloring result;
  result.assignment.assign(vertex_count, kUncolored);
  // blocked[c] == stamp means colour c is taken by a neighbour of the current vertex
  std::vector<std::size_t> blocked;
  std::size_t stamp = 0;
  for (const VertexId v : order) {
    ++stamp;
    for_each_neighbor(v, [&](VertexId w) {
      const std::uint32_t c = result.assignment[w];
      if (c != kUncolored && w != v) blocked[c] = stamp;
    });
    std::uint32_t c = 0;
    while (c < blocked.size() && blocked[c] == stamp) ++c;
    if (c == blocked.size()) blocked.push_back(0);
    result.assignment[v] = c;
  }
  result.num_colors = blocked.size();
  return result;
}

std::vector<VertexId> identity_order(std::size_t n);

// Greedy colouring of G_n^k along `order` (ascending ids when empty). Throws
// std::invalid_argument when `order` is not a permutation of the universe.
Coloring color_power_graph(const PowerGraphSpec& spec, std::span<const VertexId> order = {});

// max_x |ball(x, k) \ {x}|, the degree of G_n^k.
std::size_t power_graph_degree(const GraphSequence& g, Stage n, Radius k);

// A pair of distinct members of s at G_n-distance <= k, if any (smaller id first).
std::optional<std::pair<VertexId, VertexId>> find_separation_violation(
    const GraphSequence& g, Stage n, Radius k, std::span<const VertexId> s);

// True iff every two distinct members of s are at G_n-distance > k.
bool verify_separated(const GraphSequence& g, Stage n, Radius k, std::span<const VertexId> s);

}  // namespace sepcover
