#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sepcover/covers.hpp"
#include "sepcover/generator.hpp"
#include "sepcover/hierarchy.hpp"

using namespace sepcover;

namespace {

CoverSequence user_covers(std::size_t universe, std::vector<std::vector<VertexId>> sets) {
  CoverSequence c;
  c.universe_size = universe;
  c.covers = std::move(sets);
  c.provenance.assign(c.covers.size(), {});
  for (auto& p : c.provenance) p.source = CoverProvenance::Source::UserSupplied;
  return c;
}

const GraphSequence& path3() {
  static const GraphSequence g(3, 2, 1, {{0, 1, 0}, {1, 2, 0}});
  return g;
}

std::set<std::pair<VertexId, VertexId>> edge_set(const std::vector<HierarchyEdge>& edges) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (const auto& e : edges) out.insert({e.u, e.v});
  return out;
}

}  // namespace

TEST_SUITE("hierarchy") {
  TEST_CASE("empty covers give empty stages") {
    const Hierarchy h = build_hierarchy(path3(), canonical_f(1), user_covers(3, {{}, {}}), 0);
    CHECK(h.edges().empty());
    CHECK(h.components(1).size() == 3);
    CHECK(verify_unique_cover_point(h, h.covers()));
    for (const auto& c : component_diameters(h, 1)) CHECK(c.diameter == 0);
  }

  TEST_CASE("path with one cover point") {
    const Hierarchy h = build_hierarchy(path3(), canonical_f(1), user_covers(3, {{}, {1}}), 0);
    CHECK(std::vector<VertexId>(h.base_set().begin(), h.base_set().end()) == std::vector<VertexId>{0, 1, 2});
    CHECK(h.edges_at(0).empty());
    CHECK(edge_set(h.edges_at(1)) == std::set<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
    const auto& cert = h.certificate(1);
    REQUIRE(cert.components.size() == 1);
    CHECK(cert.components[0].diameter == 2);
    CHECK(cert.components[0].members == std::vector<VertexId>{0, 1, 2});
    CHECK(cert.bound == 2);
    CHECK(cert.component_count == 1);
    CHECK(diameter_claim_violations(h).empty());
    CHECK(verify_unique_cover_point(h, h.covers()));

    const CaptureReport r = verify_capture(path3(), h);
    CHECK(r.captured == 2);
    CHECK(r.all_captured());
    CHECK(r.witness_mismatches == 0);
    CHECK(r.connectivity_consistent);
    for (const auto& e : r.edges) CHECK(e.witness == 1U);
  }

  TEST_CASE("threshold restricts the base set") {
    const Hierarchy h = build_hierarchy(path3(), canonical_f(1), user_covers(3, {{}, {1}}), 1);
    CHECK(std::vector<VertexId>(h.base_set().begin(), h.base_set().end()) == std::vector<VertexId>{1});
    CHECK(h.edges().empty());
    CHECK(verify_capture(path3(), h).base_edges == 0);
  }

  TEST_CASE("an edge born after its only cover never enters") {
    const GraphSequence g(2, 1, 3, {{0, 1, 3}});
    const Hierarchy h = build_hierarchy(g, canonical_f(3), user_covers(2, {{}, {}, {0}, {}}), 0);
    CHECK(h.edges().empty());
    const CaptureReport r = verify_capture(g, h);
    REQUIRE(r.edges.size() == 1);
    CHECK(r.edges[0].status == CaptureStatus::HorizonUncaptured);
    CHECK_FALSE(r.all_captured());
    CHECK(r.witness_mismatches == 0);
    CHECK(r.connectivity_consistent);
  }

  TEST_CASE("corrupted covers") {
    const CoverSequence bad = user_covers(3, {{}, {0, 2}});
    try {
      build_hierarchy(path3(), canonical_f(1), bad, 0);
      FAIL("expected rejection");
    } catch (const HierarchyInputError& e) {
      REQUIRE(e.cover_violation().has_value());
      CHECK(e.cover_violation()->index == 1);
      CHECK(e.cover_violation()->x == 0);
      CHECK(e.cover_violation()->y == 2);
    }
    const Hierarchy h = build_hierarchy(path3(), canonical_f(1), bad, 0, {.validate_inputs = false});
    CHECK_FALSE(verify_unique_cover_point(h, bad));

    const GrowthFunction slow({0, 1});
    try {
      build_hierarchy(path3(), slow, user_covers(3, {{}, {1}}), 0);
      FAIL("expected rejection");
    } catch (const HierarchyInputError& e) {
      CHECK(e.growth_violation() == 0U);
    }
    CHECK_THROWS_AS(build_hierarchy(path3(), canonical_f(1), user_covers(3, {{}, {}, {}}), 0), ConfigError);
  }

  TEST_CASE("component diameters") {
    std::vector<Edge> star;
    for (VertexId leaf = 1; leaf <= 4; ++leaf) star.push_back({0, leaf, 0});
    const GraphSequence g(6, 4, 1, star);
    const Hierarchy h = build_hierarchy(g, canonical_f(1), user_covers(6, {{}, {0}}), 0);
    const auto comps = component_diameters(h, 1);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].members.size() == 5);
    CHECK(comps[0].diameter == 2);
    CHECK(comps[1].diameter == 0);

    const GraphSequence one(2, 1, 1, {{0, 1, 0}});
    const Hierarchy h1 = build_hierarchy(one, canonical_f(1), user_covers(2, {{}, {1}}), 0);
    CHECK(component_diameters(h1, 1)[0].diameter == 1);
  }

  TEST_CASE("update rule, diameters and capture on random full-cycle instances") {
    std::mt19937_64 rng(4242);
    for (int round = 0; round < 15; ++round) {
      GeneratorParams p;
      p.seed = rng();
      p.vertices = 15 + rng() % 60;
      p.degree_bound = 1 + rng() % 4;
      p.stages = 1 + rng() % 5;
      p.horizon = static_cast<Stage>(p.stages + 6 * p.vertices);
      const GraphSequence g = gen_random(p);
      const GrowthFunction f = canonical_f(g.horizon());
      Stage max_birth = 0;
      for (const auto& e : g.edges()) max_birth = std::max(max_birth, e.birth);
      const CoverSequence covers = build_covers_full_cycle(g, f, 1, {.first_index = 1, .final_sweep_from = max_birth});
      const std::size_t m = round % 3 == 2 ? 2 : 1;
      const Hierarchy h = build_hierarchy(g, f, covers, m);

      std::vector<bool> in_b(g.universe_size(), false);
      for (const VertexId x : h.base_set()) in_b[x] = true;

      // Replay the update rule edge by edge.
      std::set<std::pair<VertexId, VertexId>> expect;
      for (Stage n = 0; n <= h.last_stage(); ++n) {
        if (n > 0) {
          std::vector<bool> in_cover(g.universe_size(), false);
          for (const VertexId x : covers.covers[n]) in_cover[x] = true;
          for (const auto& e : g.edges()) {
            if (e.birth <= n && in_b[e.u] && in_b[e.v] && (in_cover[e.u] || in_cover[e.v])) {
              expect.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
            }
          }
        }
        const auto at = h.edges_at(n);
        CHECK(edge_set(at) == expect);

        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(expect.begin(), expect.end());
        const auto d = oracle::distances(g.universe_size(), pairs);
        const auto dg = oracle::distances(g, n);
        std::uint64_t max_diam = 0;
        for (const VertexId x : h.base_set()) {
          for (const VertexId y : h.base_set()) {
            if (d[x][y] == oracle::kInf) continue;
            max_diam = std::max(max_diam, d[x][y]);
            CHECK(dg[x][y] != oracle::kInf);
          }
        }
        CHECK(h.certificate(n).max_diameter == max_diam);
        CHECK(max_diam <= f(n));

        if (n > 0) {
          const auto before = h.components(n - 1);
          const auto after = h.components(n);
          for (const auto& comp : before) {
            const auto owner = std::find_if(after.begin(), after.end(), [&](const auto& c) {
              return std::binary_search(c.begin(), c.end(), comp.front());
            });
            REQUIRE(owner != after.end());
            CHECK(std::includes(owner->begin(), owner->end(), comp.begin(), comp.end()));
          }
        }
      }
      CHECK(diameter_claim_violations(h).empty());
      CHECK(verify_unique_cover_point(h, covers));
      const CaptureReport r = verify_capture(g, h);
      CHECK(r.all_captured());
      CHECK(r.witness_mismatches == 0);
      CHECK(r.connectivity_consistent);
    }
  }
}
