#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sepcover/generator.hpp"
#include "sepcover/graph_sequence.hpp"

using namespace sepcover;

namespace {

GraphSequence path(std::size_t n, std::size_t degree = 2) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 0});
  return GraphSequence(n, degree, 4, edges);
}

}  // namespace

TEST_SUITE("graph_core") {
  TEST_CASE("neighbors follow birth indices") {
    const GraphSequence tri(3, 2, 2, {{0, 1, 0}, {1, 2, 1}, {0, 2, 1}});
    CHECK(tri.neighbors(0, 0) == std::vector<VertexId>{1});
    CHECK(tri.neighbors(1, 0) == std::vector<VertexId>{1, 2});
    CHECK_THROWS_AS(tri.neighbors(3, 0), std::out_of_range);

    const GraphSequence empty(5, 0, 3, {});
    for (Stage n = 0; n <= 3; ++n) CHECK(empty.neighbors(n, 4).empty());
  }

  TEST_CASE("balls and distance queries") {
    const GraphSequence p = path(4);
    CHECK(p.ball(0, 0, 2) == std::vector<VertexId>{0, 1, 2});
    CHECK(p.ball(0, 2, 0) == std::vector<VertexId>{2});

    std::vector<Edge> cyc;
    for (VertexId i = 0; i < 6; ++i) cyc.push_back({i, static_cast<VertexId>((i + 1) % 6), 0});
    const GraphSequence c6(6, 2, 0, cyc);
    CHECK(c6.ball(0, 0, 3).size() == 6);
    CHECK(c6.ball(0, 0, 2).size() == 5);

    const GraphSequence p3 = path(3);
    CHECK_FALSE(p3.dist_leq(0, 0, 2, 1));
    CHECK(p3.dist_leq(0, 0, 2, 2));

    const GraphSequence split(4, 1, 0, {{0, 1, 0}, {2, 3, 0}});
    CHECK_FALSE(split.dist_leq(0, 0, 3, 1000000));
    CHECK_FALSE(split.distance(0, 0, 3).has_value());
    CHECK(split.distance(0, 2, 3) == 1U);
  }

  TEST_CASE("constructor rejects out-of-range data") {
    CHECK_THROWS_AS(GraphSequence(2, 1, 0, {{0, 2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(GraphSequence(2, 1, 0, {{0, 1, 1}}), std::invalid_argument);
  }

  TEST_CASE("validate reports the stage where a degree bound breaks") {
    std::vector<Edge> star;
    for (VertexId leaf = 1; leaf <= 5; ++leaf) star.push_back({0, leaf, leaf - 1});
    const ValidationReport r = validate(GraphSequence(6, 4, 4, star));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::DegreeBound);
    CHECK(r.violations[0].vertex == 0);
    CHECK(r.violations[0].stage == 4);
    CHECK(r.violations[0].degree == 5);

    CHECK(validate(GraphSequence(3, 2, 0, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}})).valid());
    CHECK(validate(GraphSequence(0, 0, 0, {})).valid());

    const ValidationReport loops = validate(GraphSequence(3, 3, 0, {{1, 1, 0}, {0, 2, 0}, {2, 0, 0}}));
    CHECK(loops.violations.size() == 2);
  }

  TEST_CASE("ball agrees with all-pairs shortest paths on random sequences") {
    std::mt19937_64 rng(20240611);
    for (int round = 0; round < 20; ++round) {
      GeneratorParams p;
      p.seed = rng();
      p.vertices = 20 + rng() % 180;
      p.degree_bound = 1 + rng() % 4;
      p.stages = 1 + rng() % 6;
      p.edges = p.vertices * p.degree_bound * (1 + rng() % 3) / 8;
      const GraphSequence g = gen_random(p);
      std::vector<std::vector<std::uint64_t>> prev;
      for (Stage n = 0; n < p.stages; ++n) {
        const auto d = oracle::distances(g, n);
        for (VertexId x = 0; x < g.universe_size(); x += 7) {
          for (const Radius k : {Radius{0}, Radius{1}, Radius{3}, kUnboundedRadius}) {
            std::vector<VertexId> expect;
            for (VertexId y = 0; y < g.universe_size(); ++y) {
              if (d[x][y] != oracle::kInf && d[x][y] <= k) expect.push_back(y);
            }
            CHECK(g.ball(n, x, k) == expect);
          }
          if (n > 0) {
            const auto before = g.neighbors(n - 1, x);
            const auto after = g.neighbors(n, x);
            CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
            for (VertexId y = 0; y < g.universe_size(); ++y) CHECK(d[x][y] <= prev[x][y]);
          }
        }
        prev = d;
      }
    }
  }
}
