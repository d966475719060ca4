#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "sepcover/errors.hpp"
#include "sepcover/generator.hpp"
#include "sepcover/graph_io.hpp"

using namespace sepcover;

namespace {

std::string text_of(const GraphSequence& g) {
  std::ostringstream out;
  write_graph_sequence(out, g);
  return out.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generator is deterministic per seed") {
    GeneratorParams p;
    p.seed = 17;
    p.vertices = 50;
    p.degree_bound = 3;
    p.stages = 4;
    CHECK(text_of(gen_random(p)) == text_of(gen_random(p)));
    GeneratorParams q = p;
    q.seed = 18;
    CHECK(text_of(gen_random(p)) != text_of(gen_random(q)));
  }

  TEST_CASE("degree bound one gives a partial matching") {
    GeneratorParams p;
    p.seed = 3;
    p.vertices = 40;
    p.degree_bound = 1;
    p.stages = 1;
    const GraphSequence g = gen_random(p);
    CHECK(g.edges().size() == 10);
    std::set<VertexId> seen;
    for (const auto& e : g.edges()) {
      CHECK(e.birth == 0);
      CHECK(seen.insert(e.u).second);
      CHECK(seen.insert(e.v).second);
    }
    CHECK(validate(g).valid());
  }

  TEST_CASE("edge cases and infeasible parameters") {
    GeneratorParams p;
    const GraphSequence empty = gen_random(p);
    CHECK(empty.universe_size() == 0);
    CHECK(empty.edges().empty());
    std::istringstream in(text_of(empty));
    CHECK(read_graph_sequence(in, "t").universe_size() == 0);

    GeneratorParams dense;
    dense.vertices = 4;
    dense.degree_bound = 1;
    dense.edges = 3;
    CHECK_THROWS_AS(gen_random(dense), ConfigError);
    GeneratorParams zero;
    zero.vertices = 4;
    zero.degree_bound = 0;
    CHECK_THROWS_AS(gen_random(zero), ConfigError);
    GeneratorParams late;
    late.vertices = 4;
    late.stages = 5;
    late.horizon = 2;
    CHECK_THROWS_AS(gen_random(late), ConfigError);
  }

  TEST_CASE("random sequences respect every declared bound") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
      GeneratorParams p;
      p.seed = rng();
      p.vertices = 2 + rng() % 300;
      p.degree_bound = 1 + rng() % 4;
      p.stages = 1 + rng() % 12;
      const GraphSequence g = gen_random(p);
      CHECK(g.edges().size() == p.vertices * p.degree_bound / 4);
      CHECK(g.horizon() == p.stages - 1 + 2 * p.vertices);
      CHECK(g.max_degree_bound() == p.degree_bound);
      CHECK(validate(g).valid());
      for (const auto& e : g.edges()) CHECK(e.birth < p.stages);
    }
  }
}
