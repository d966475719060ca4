#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepcover/coloring.hpp"
#include "sepcover/generator.hpp"

using namespace sepcover;

namespace {

GraphSequence path(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 0});
  return GraphSequence(n, 2, 0, edges);
}

// Greedy colouring computed from the Floyd-Warshall matrix.
std::vector<std::uint32_t> reference_greedy(const std::vector<std::vector<std::uint64_t>>& d, Radius k,
                                            const std::vector<VertexId>& order) {
  std::vector<std::uint32_t> color(d.size(), UINT32_MAX);
  for (const VertexId v : order) {
    std::vector<bool> used(d.size() + 1, false);
    for (VertexId w = 0; w < d.size(); ++w) {
      if (w != v && d[v][w] <= k && color[w] != UINT32_MAX) used[color[w]] = true;
    }
    std::uint32_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
  }
  return color;
}

}  // namespace

TEST_SUITE("coloring") {
  TEST_CASE("greedy colouring examples") {
    const GraphSequence tri(3, 2, 0, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
    const Coloring c3 = color_power_graph({&tri, 0, 1});
    CHECK(c3.assignment == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(c3.num_colors == 3);

    const GraphSequence p4 = path(4);
    const Coloring c = color_power_graph({&p4, 0, 1});
    CHECK(c.assignment == std::vector<std::uint32_t>{0, 1, 0, 1});
    CHECK(c.num_colors == 2);
    CHECK(c.assignment == reference_greedy(oracle::distances(p4, 0), 1, identity_order(4)));
    CHECK(c.classes() == std::vector<std::vector<VertexId>>{{0, 2}, {1, 3}});

    const GraphSequence empty(5, 0, 0, {});
    for (const Radius k : {Radius{0}, Radius{4}, kUnboundedRadius}) {
      const Coloring e = color_power_graph({&empty, 0, k});
      CHECK(e.num_colors == 1);
      CHECK(e.assignment == std::vector<std::uint32_t>(5, 0));
    }

    const GraphSequence none(0, 0, 0, {});
    CHECK(color_power_graph({&none, 0, 3}).num_colors == 0);
  }

  TEST_CASE("order must be a permutation") {
    const GraphSequence p4 = path(4);
    const std::vector<VertexId> short_order{0, 1, 2};
    const std::vector<VertexId> repeated{0, 1, 1, 3};
    CHECK_THROWS_AS(color_power_graph({&p4, 0, 1}, short_order), std::invalid_argument);
    CHECK_THROWS_AS(color_power_graph({&p4, 0, 1}, repeated), std::invalid_argument);
  }

  TEST_CASE("separation checks") {
    const GraphSequence p5 = path(5);
    const std::vector<VertexId> far{0, 4};
    const std::vector<VertexId> near{0, 3};
    const std::vector<VertexId> single{2};
    CHECK(verify_separated(p5, 0, 3, far));
    CHECK_FALSE(verify_separated(p5, 0, 3, near));
    CHECK(verify_separated(p5, 0, 100, single));
    const auto pair = find_separation_violation(p5, 0, 3, std::vector<VertexId>{3, 0, 4});
    REQUIRE(pair.has_value());
    CHECK(pair->first < pair->second);
  }

  TEST_CASE("classes are separated, counts bounded, order irrelevant to properness") {
    std::mt19937_64 rng(777);
    for (int round = 0; round < 25; ++round) {
      GeneratorParams p;
      p.seed = rng();
      p.vertices = 10 + rng() % 90;
      p.degree_bound = 1 + rng() % 4;
      p.stages = 3;
      const GraphSequence g = gen_random(p);
      const Stage n = static_cast<Stage>(rng() % 3);
      const auto d = oracle::distances(g, n);
      for (Radius k = 0; k <= 4; ++k) {
        auto order = identity_order(g.universe_size());
        if (round % 2 == 1) std::shuffle(order.begin(), order.end(), rng);
        const Coloring c = color_power_graph({&g, n, k}, order);
        CHECK(c.assignment == reference_greedy(d, k, order));
        std::size_t max_ball = 0;
        for (VertexId x = 0; x < g.universe_size(); ++x) {
          std::size_t ball = 0;
          for (VertexId y = 0; y < g.universe_size(); ++y) ball += (y != x && d[x][y] <= k) ? 1 : 0;
          max_ball = std::max(max_ball, ball);
        }
        CHECK(power_graph_degree(g, n, k) == max_ball);
        CHECK(c.num_colors <= 1 + max_ball);
        for (const auto& cls : c.classes()) {
          for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) CHECK(d[cls[i]][cls[j]] > k);
          }
          CHECK(verify_separated(g, n, k, cls));
        }
      }
    }
  }
}
