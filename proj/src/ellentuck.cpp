#include "sepcover/ellentuck.hpp"

#include <algorithm>
#include <stdexcept>

#include "sepcover/coloring.hpp"
#include "sepcover/errors.hpp"

namespace sepcover {

namespace {

void check_order(Mask stem, Mask reservoir) {
  if ((stem & reservoir) != 0 || (stem != 0 && reservoir != 0 && 63 - std::countl_zero(stem) >= std::countr_zero(reservoir))) {
    throw std::invalid_argument("cylinder requires max t < min A, got t = " + format_set(stem) +
                                ", A = " + format_set(reservoir));
  }
}

}  // namespace

Cylinder Cylinder::at_depth(Mask stem, Mask reservoir, std::size_t depth) {
  check_order(stem, reservoir);
  return Cylinder{stem, reservoir, depth, false};
}

Cylinder Cylinder::lifted_at(Mask stem, Mask reservoir, std::size_t depth) {
  check_order(stem, reservoir);
  return Cylinder{stem, reservoir, depth, true};
}

Cylinder Cylinder::with_reservoir(Mask r) const {
  Cylinder out = *this;
  out.reservoir = r;
  return out;
}

std::size_t Cylinder::min_extension() const {
  const std::size_t t = mask_size(stem);
  return depth > t ? depth - t : 0;
}

std::size_t Cylinder::max_extension() const { return lifted ? depth : min_extension(); }

bool Cylinder::contains(FinitePoint p) const {
  const Mask m = p.mask();
  if (!is_subset(stem, m) || !is_subset(m, stem | reservoir)) return false;
  if (!lifted && depth <= mask_size(stem)) return false;
  const std::size_t ext = mask_size(m & ~stem);
  return ext >= min_extension() && ext <= max_extension();
}

PointList cylinder_points(const Cylinder& c) {
  PointList out;
  const std::size_t t = mask_size(c.stem);
  const std::size_t a = mask_size(c.reservoir);
  if (!c.lifted && (c.depth <= t || c.depth > t + a)) {
    out.depth_out_of_range = true;
    return out;
  }
  const std::size_t hi = std::min(c.max_extension(), a);
  for (std::size_t k = c.min_extension(); k <= hi; ++k) {
    for (const Mask x : subsets_of_size(c.reservoir, k)) out.points.emplace_back(c.stem | x);
  }
  if (c.lifted) std::sort(out.points.begin(), out.points.end());
  return out;
}

bool PointGraph::try_add_edge(FinitePoint a, FinitePoint b) {
  if (a == b || adjacent(a, b)) return false;
  if (degree(a) >= degree_bound_ || degree(b) >= degree_bound_) return false;
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  ++edge_count_;
  return true;
}

void PointGraph::add_edge(FinitePoint a, FinitePoint b) {
  if (a == b) throw std::invalid_argument("loop at " + a.to_string());
  if (adjacent(a, b)) throw std::invalid_argument("repeated edge " + a.to_string() + " " + b.to_string());
  if (!try_add_edge(a, b)) {
    throw std::invalid_argument("edge " + a.to_string() + " " + b.to_string() + " exceeds degree bound " +
                                std::to_string(degree_bound_));
  }
}

bool PointGraph::adjacent(FinitePoint a, FinitePoint b) const {
  const auto nb = neighbors(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

std::span<const FinitePoint> PointGraph::neighbors(FinitePoint a) const {
  const auto it = adj_.find(a);
  if (it == adj_.end()) return {};
  return it->second;
}

std::size_t PointGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& [p, nb] : adj_) best = std::max(best, nb.size());
  return best;
}

std::vector<FinitePoint> PointGraph::points() const {
  std::vector<FinitePoint> out;
  out.reserve(adj_.size());
  for (const auto& [p, nb] : adj_) {
    if (!nb.empty()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<FinitePoint, FinitePoint>> PointGraph::edges() const {
  std::vector<std::pair<FinitePoint, FinitePoint>> out;
  out.reserve(edge_count_);
  for (const auto& [p, nb] : adj_) {
    for (const FinitePoint q : nb) {
      if (p < q) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct ShrinkSearch {
  const Cylinder& c;
  const PointColoring& coloring;
  std::size_t target;
  std::vector<std::uint32_t> elems;
  std::size_t lo;
  std::size_t hi;

  // New points t ∪ X ∪ {a}, X ⊆ chosen, must match `color` (set by the first point seen).
  bool extend_ok(Mask chosen, std::uint32_t a, std::optional<std::uint32_t>& color) const {
    bool ok = true;
    for_each_subset(chosen, [&](Mask x) {
      if (!ok) return;
      const std::size_t size = mask_size(x) + 1;
      if (size < lo || size > hi) return;
      const std::uint32_t col = coloring(FinitePoint(c.stem | x | (Mask{1} << a)));
      if (!color) {
        color = col;
      } else if (*color != col) {
        ok = false;
      }
    });
    return ok;
  }

  std::optional<Mask> dfs(std::size_t next, Mask chosen, std::size_t count, std::optional<std::uint32_t> color) const {
    if (count == target) return chosen;
    for (std::size_t i = next; i + (target - count) <= elems.size(); ++i) {
      std::optional<std::uint32_t> col = color;
      if (!extend_ok(chosen, elems[i], col)) continue;
      if (auto found = dfs(i + 1, chosen | (Mask{1} << elems[i]), count + 1, col)) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Mask> monochromatic_shrink(const Cylinder& c, const PointColoring& coloring,
                                         std::size_t target_size) {
  ShrinkSearch search{c, coloring, target_size, mask_elements(c.reservoir), c.min_extension(),
                      c.max_extension()};
  if (target_size > search.elems.size()) return std::nullopt;
  if (!c.lifted && c.depth <= mask_size(c.stem)) {
    // no points at all
    return smallest_elements(c.reservoir, target_size);
  }
  std::optional<std::uint32_t> color;
  if (search.lo == 0) color = coloring(FinitePoint(c.stem));
  return search.dfs(0, 0, 0, color);
}

bool is_independent(const Cylinder& c, const PointGraph& g) {
  for (const FinitePoint p : cylinder_points(c).points) {
    for (const FinitePoint q : g.neighbors(p)) {
      if (c.contains(q)) return false;
    }
  }
  return true;
}

IndependentResult independent_cylinder(const Cylinder& c, const PointGraph& g, std::size_t target_size) {
  const auto pts = cylinder_points(c).points;
  std::unordered_map<FinitePoint, VertexId, FinitePointHash> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<VertexId>(i));
  const auto order = identity_order(pts.size());
  const Coloring col = greedy_coloring(pts.size(), order, [&](VertexId v, auto&& visit) {
    for (const FinitePoint q : g.neighbors(pts[v])) {
      if (const auto it = index.find(q); it != index.end()) visit(it->second);
    }
  });

  IndependentResult out;
  out.colors = col.num_colors;
  out.reservoir = monochromatic_shrink(
      c,
      [&](FinitePoint p) {
        const auto it = index.find(p);
        if (it == index.end()) throw std::logic_error("point " + p.to_string() + " outside the cylinder");
        return col.assignment[it->second];
      },
      target_size);
  if (out.reservoir && !is_independent(c.with_reservoir(*out.reservoir), g)) {
    throw InvariantViolation("ellentuck", "monochromatic reservoir " + format_set(*out.reservoir) +
                                              " is not independent");
  }
  return out;
}

PointGraph star_graph(const Cylinder& c, const PointGraph& g) {
  PointGraph star;
  for (const FinitePoint b : cylinder_points(c).points) {
    for_each_subset(c.stem, [&](Mask r) {
      for (const FinitePoint e : g.neighbors(FinitePoint(b.mask() & ~r))) {
        for_each_subset(c.stem, [&](Mask s) {
          const FinitePoint cand(e.mask() | s);
          if ((cand.mask() & ~s) != e.mask() || cand == b || !c.contains(cand)) return;
          star.try_add_edge(b, cand);
        });
      }
    });
  }
  return star;
}

std::vector<E0Edge> e0_violations(Mask stem, Mask reservoir, std::size_t depth, const PointGraph& g) {
  std::vector<E0Edge> out;
  const Mask span = stem | reservoir;
  for (const auto& [a, b] : g.edges()) {
    if (a.depth() != depth || b.depth() != depth) continue;
    if (!is_subset(a.mask(), span) || !is_subset(b.mask(), span)) continue;
    if (((a.mask() ^ b.mask()) & ~stem) != 0) out.push_back({a, b});
  }
  return out;
}

E0Result e0_shrink(const Cylinder& c, const PointGraph& g, std::size_t target_size) {
  const Cylinder lifted = Cylinder::lifted_at(c.stem, c.reservoir, c.depth);
  const PointGraph star = star_graph(lifted, g);
  const IndependentResult ind = independent_cylinder(lifted, star, target_size);
  E0Result out;
  out.reservoir = ind.reservoir;
  out.star_edges = star.edge_count();
  out.star_max_degree = star.max_degree();
  out.colors = ind.colors;
  if (out.reservoir) {
    const auto bad = e0_violations(c.stem, *out.reservoir, c.depth, g);
    if (!bad.empty()) {
      throw InvariantViolation("ellentuck", "edge " + bad.front().a.to_string() + " " +
                                                bad.front().b.to_string() + " survives outside the stem");
    }
  }
  return out;
}

}  // namespace sepcover
