#include "sepcover/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sepcover/errors.hpp"

namespace sepcover {

GraphSequence gen_random(const GeneratorParams& p) {
  if (p.degree_bound == 0) throw ConfigError("degree bound must be at least 1");
  if (p.stages == 0) throw ConfigError("at least one stage is required");
  if (p.vertices > std::numeric_limits<VertexId>::max()) throw ConfigError("too many vertices");
  const std::size_t edges = p.edges.value_or(p.vertices * p.degree_bound / 4);
  const std::size_t capacity = p.vertices < 2 ? 0 : std::min(p.vertices * p.degree_bound / 2,
                                                             p.vertices * (p.vertices - 1) / 2);
  if (edges > capacity) {
    throw ConfigError(std::to_string(edges) + " edges do not fit " + std::to_string(p.vertices) +
                      " vertices with degree bound " + std::to_string(p.degree_bound));
  }
  const std::uint64_t horizon = p.horizon ? *p.horizon : p.stages - 1 + 2 * static_cast<std::uint64_t>(p.vertices);
  if (horizon + 1 < p.stages) throw ConfigError("horizon shorter than the birth range");
  if (horizon >= std::numeric_limits<Stage>::max()) throw ConfigError("horizon too large");

  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<VertexId> pick_vertex(0, p.vertices == 0 ? 0 : static_cast<VertexId>(p.vertices - 1));
  std::uniform_int_distribution<Stage> pick_birth(0, static_cast<Stage>(p.stages - 1));
  std::vector<std::size_t> degree(p.vertices, 0);
  std::set<std::pair<VertexId, VertexId>> pairs;
  std::vector<Edge> out;
  const std::size_t budget = 100 * edges + 1000;
  for (std::size_t attempt = 0; out.size() < edges; ++attempt) {
    if (attempt == budget) {
      throw ConfigError("rejection sampling stalled at " + std::to_string(out.size()) + " of " +
                        std::to_string(edges) + " edges");
    }
    VertexId u = pick_vertex(rng);
    VertexId v = pick_vertex(rng);
    const Stage birth = pick_birth(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    // every edge is present from its birth to the horizon, so the last stage has the largest degrees
    if (degree[u] >= p.degree_bound || degree[v] >= p.degree_bound) continue;
    if (!pairs.emplace(u, v).second) continue;
    ++degree[u];
    ++degree[v];
    out.push_back({u, v, birth});
  }
  return GraphSequence(p.vertices, p.degree_bound, static_cast<Stage>(horizon), std::move(out));
}

}  // namespace sepcover
