#pragma once

// Brute-force reference computations for the tests. Nothing here calls into the library's
// BFS, colouring, union-find or enumeration code.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sepcover/ellentuck.hpp"
#include "sepcover/graph_sequence.hpp"

namespace oracle {

inline constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max() / 4;

// Floyd-Warshall over G_n.
inline std::vector<std::vector<std::uint64_t>> distances(const sepcover::GraphSequence& g, sepcover::Stage n) {
  const std::size_t size = g.universe_size();
  std::vector<std::vector<std::uint64_t>> d(size, std::vector<std::uint64_t>(size, kInf));
  for (std::size_t i = 0; i < size; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) {
    if (e.birth <= n && e.u != e.v) {
      d[e.u][e.v] = 1;
      d[e.v][e.u] = 1;
    }
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < size; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

// Floyd-Warshall on an explicit edge list over `size` vertices.
inline std::vector<std::vector<std::uint64_t>> distances(std::size_t size,
                                                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::vector<std::uint64_t>> d(size, std::vector<std::uint64_t>(size, kInf));
  for (std::size_t i = 0; i < size; ++i) d[i][i] = 0;
  for (const auto& [u, v] : edges) {
    d[u][v] = 1;
    d[v][u] = 1;
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < size; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

inline std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Random points of the given depths inside [0, ground), with random edges kept only while
// both endpoints stay below the degree bound.
inline sepcover::PointGraph random_point_graph(std::mt19937_64& rng, std::size_t ground, std::size_t min_depth,
                                               std::size_t max_depth, std::size_t degree_bound,
                                               std::size_t attempts) {
  sepcover::PointGraph g(degree_bound);
  std::uniform_int_distribution<std::size_t> pick_depth(min_depth, max_depth);
  auto random_point = [&] {
    std::vector<std::uint32_t> pool(ground);
    for (std::uint32_t i = 0; i < ground; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(pick_depth(rng), ground));
    std::sort(pool.begin(), pool.end());
    return sepcover::FinitePoint::from_elements(pool, ground);
  };
  for (std::size_t i = 0; i < attempts; ++i) g.try_add_edge(random_point(), random_point());
  return g;
}

}  // namespace oracle
