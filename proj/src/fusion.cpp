#include "sepcover/fusion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sepcover {

InvolutionFamily::InvolutionFamily(std::size_t ground, std::size_t depth, const std::vector<Map>& maps)
    : ground_(ground), depth_(depth), maps_(maps.size()) {
  if (ground > kMaxGround) throw std::invalid_argument("ground size exceeds 64");
  const Mask universe = ground_mask(ground);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (const auto& [p, q] : maps[i]) {
      for (const FinitePoint x : {p, q}) {
        if (x.depth() != depth || !is_subset(x.mask(), universe)) {
          throw std::invalid_argument("involution " + std::to_string(i) + ": point " + x.to_string() +
                                      " is not a depth-" + std::to_string(depth) + " point of [0, " +
                                      std::to_string(ground) + ")");
        }
      }
      if (p == q) continue;
      const auto [it, inserted] = maps_[i].emplace(p, q);
      if (!inserted && it->second != q) {
        throw std::invalid_argument("involution " + std::to_string(i) + ": point " + p.to_string() +
                                    " mapped twice");
      }
    }
    for (const auto& [p, q] : maps_[i]) {
      const auto back = maps_[i].find(q);
      if (back == maps_[i].end() || back->second != p) {
        throw InvariantViolation("ellentuck", "involution " + std::to_string(i) + " is not self-inverse at " +
                                                  p.to_string());
      }
    }
  }
}

FinitePoint InvolutionFamily::apply(std::size_t i, FinitePoint p) const {
  const auto it = maps_.at(i).find(p);
  return it == maps_[i].end() ? p : it->second;
}

InvolutionFamily::Map InvolutionFamily::listing(std::size_t i) const {
  Map out(maps_.at(i).begin(), maps_[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

PointGraph InvolutionFamily::graph(std::size_t i) const {
  PointGraph g(1);
  for (const auto& [p, q] : listing(i)) {
    if (p < q) g.add_edge(p, q);
  }
  return g;
}

PipelineResult fusion_pipeline(const InvolutionFamily& invs, std::span<const std::size_t> targets) {
  const std::size_t m = invs.size();
  if (m > 0 && targets.size() != 1 && targets.size() != m) {
    throw ConfigError("expected 1 or " + std::to_string(m) + " stage targets, got " +
                      std::to_string(targets.size()));
  }
  PipelineResult out;
  Mask a = ground_mask(invs.ground());
  out.trace.push_back({0, a, 0});
  for (std::size_t n = 0; n < m; ++n) {
    const std::size_t target = targets.size() == 1 ? targets[0] : targets[n];
    if (target <= n || target > mask_size(a)) {
      throw ConfigError("stage " + std::to_string(n) + ": target " + std::to_string(target) +
                        " must lie in (" + std::to_string(n) + ", " + std::to_string(mask_size(a)) + "]");
    }
    const Mask t = smallest_elements(a, n);
    const PointGraph g = invs.graph(n);
    const E0Result r = e0_shrink(Cylinder::at_depth(t, a & ~t, invs.depth()), g, target - n);

    StageOutcome outcome;
    outcome.stage = static_cast<Stage>(n);
    outcome.stem = t;
    outcome.target = target;
    outcome.involution_edges = g.edge_count();
    outcome.star_edges = r.star_edges;
    outcome.star_max_degree = r.star_max_degree;
    outcome.colors = r.colors;
    outcome.found = r.reservoir.has_value();
    out.stages.push_back(outcome);
    if (!r.reservoir) {
      out.failed_stage = static_cast<Stage>(n);
      return out;
    }
    a = t | *r.reservoir;
    out.trace.push_back({static_cast<Stage>(n + 1), a, smallest_elements(a, n + 1)});
  }
  return out;
}

namespace {

std::vector<std::uint32_t> members(std::uint64_t bits) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < 64; ++x) {
    if ((bits >> x) & 1U) out.push_back(x);
  }
  return out;
}

void combinations(const std::vector<std::uint32_t>& pool, std::size_t k, std::size_t from,
                  std::vector<std::uint32_t>& current, std::vector<std::vector<std::uint32_t>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    combinations(pool, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

PipelineCheck verify_pipeline(const InvolutionFamily& invs, const std::vector<FusionState>& trace) {
  PipelineCheck out;
  if (trace.empty()) return out;
  const auto final_set = members(trace.back().reservoir);
  std::vector<std::vector<std::uint32_t>> points;
  std::vector<std::uint32_t> scratch;
  combinations(final_set, invs.depth(), 0, scratch, points);

  const std::size_t stages = std::min(invs.size(), trace.size() - 1);
  for (std::size_t n = 0; n < stages; ++n) {
    auto prefix = members(trace[n].reservoir);
    prefix.resize(std::min(prefix.size(), n));

    std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> phi;
    for (const auto& [p, q] : invs.listing(n)) phi[members(p.mask())] = members(q.mask());

    for (const auto& b : points) {
      const auto it = phi.find(b);
      if (it == phi.end() || !(b < it->second)) continue;
      const auto& c = it->second;
      if (!std::includes(final_set.begin(), final_set.end(), c.begin(), c.end())) continue;
      ++out.edges_checked;
      std::vector<std::uint32_t> diff;
      std::set_symmetric_difference(b.begin(), b.end(), c.begin(), c.end(), std::back_inserter(diff));
      if (!std::includes(prefix.begin(), prefix.end(), diff.begin(), diff.end())) ++out.violations;
    }
  }
  return out;
}

Mask fusion_limit(const std::vector<FusionState>& trace) {
  if (trace.empty()) return 0;
  for (std::size_t n = 0; n < trace.size(); ++n) {
    const FusionState& s = trace[n];
    if (s.stage != n) throw FusionError(static_cast<Stage>(n), "stage index " + std::to_string(s.stage));
    if (s.frozen != smallest_elements(s.reservoir, n) || mask_size(s.frozen) != n) {
      throw FusionError(s.stage, "frozen prefix " + format_set(s.frozen) + " is not the " + std::to_string(n) +
                                     " smallest elements of " + format_set(s.reservoir));
    }
    if (n > 0) {
      const FusionState& prev = trace[n - 1];
      if (!is_subset(s.reservoir, prev.reservoir)) {
        throw FusionError(s.stage, "reservoir " + format_set(s.reservoir) + " is not inside " +
                                       format_set(prev.reservoir));
      }
      if (smallest_elements(s.reservoir, n - 1) != prev.frozen) {
        throw FusionError(s.stage, "frozen prefix " + format_set(prev.frozen) + " not preserved");
      }
    }
  }
  Mask limit = trace.front().reservoir;
  for (const FusionState& s : trace) limit = (limit & s.reservoir) | s.frozen;
  for (const FusionState& s : trace) {
    if (!is_subset(limit, s.reservoir)) {
      throw FusionError(s.stage, "limit " + format_set(limit) + " is not inside " + format_set(s.reservoir));
    }
  }
  return limit;
}

std::vector<FusionState> constant_trace(Mask reservoir, std::size_t stages) {
  std::vector<FusionState> out;
  for (std::size_t n = 0; n < stages; ++n) {
    out.push_back({static_cast<Stage>(n), reservoir, smallest_elements(reservoir, n)});
  }
  return out;
}

std::optional<std::pair<Stage, Mask>> Bookkeeping::cover_source(std::uint64_t index) const {
  for (const StageEnumeration& s : stages) {
    if (index >= s.first_cover_index && index - s.first_cover_index < s.subsets.size()) {
      return std::make_pair(s.stage, s.subsets[index - s.first_cover_index]);
    }
  }
  return std::nullopt;
}

Bookkeeping kn_bookkeeping(const std::vector<FusionState>& trace) {
  Bookkeeping out;
  out.k.push_back(0);
  for (std::size_t n = 0; n < trace.size(); ++n) {
    StageEnumeration e;
    e.stage = static_cast<Stage>(n);
    e.prefix = smallest_elements(trace[n].reservoir, n);
    for_each_subset(e.prefix, [&](Mask s) { e.subsets.push_back(s); });
    std::sort(e.subsets.begin(), e.subsets.end(), lex_less);
    e.first_cover_index = out.k.back() + 1;
    out.k.push_back(out.k.back() + e.subsets.size());
    out.stages.push_back(std::move(e));
  }
  return out;
}

}  // namespace sepcover
