#include "sepcover/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sepcover {

std::vector<std::vector<VertexId>> Coloring::classes() const {
  std::vector<std::vector<VertexId>> out(num_colors);
  for (VertexId v = 0; v < assignment.size(); ++v) out[assignment[v]].push_back(v);
  return out;
}

std::vector<VertexId> identity_order(std::size_t n) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  return order;
}

Coloring color_power_graph(const PowerGraphSpec& spec, std::span<const VertexId> order) {
  if (spec.base == nullptr) throw std::invalid_argument("power graph without a base graph");
  const GraphSequence& g = *spec.base;
  g.check_stage(spec.stage);
  const std::size_t n = g.universe_size();

  std::vector<VertexId> default_order;
  if (order.empty() && n > 0) {
    default_order = identity_order(n);
    order = default_order;
  }
  if (order.size() != n) throw std::invalid_argument("ordering is not a permutation of the universe");
  std::vector<bool> seen(n, false);
  for (const VertexId v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("ordering is not a permutation of the universe");
    seen[v] = true;
  }

  BallSearch search(g);
  return greedy_coloring(n, order, [&](VertexId v, auto&& visit) {
    for (const VertexId w : search.run(spec.stage, v, spec.k)) visit(w);
  });
}

std::size_t power_graph_degree(const GraphSequence& g, Stage n, Radius k) {
  BallSearch search(g);
  std::size_t best = 0;
  for (VertexId x = 0; x < g.universe_size(); ++x) {
    best = std::max(best, search.run(n, x, k).size() - 1);
  }
  return best;
}

std::optional<std::pair<VertexId, VertexId>> find_separation_violation(
    const GraphSequence& g, Stage n, Radius k, std::span<const VertexId> s) {
  g.check_stage(n);
  std::vector<bool> member(g.universe_size(), false);
  for (const VertexId x : s) {
    g.check_vertex(x);
    member[x] = true;
  }
  BallSearch search(g);
  for (const VertexId x : s) {
    for (const VertexId y : search.run(n, x, k)) {
      if (y != x && member[y]) return std::make_pair(std::min(x, y), std::max(x, y));
    }
  }
  return std::nullopt;
}

bool verify_separated(const GraphSequence& g, Stage n, Radius k, std::span<const VertexId> s) {
  return !find_separation_violation(g, n, k, s).has_value();
}

}  // namespace sepcover
