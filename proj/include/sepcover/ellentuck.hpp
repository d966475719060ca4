#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sepcover/finite_point.hpp"

namespace sepcover {

// [t, A] truncated at depth K. A plain cylinder holds the K-point supersets of t inside
// t ∪ A. A lifted cylinder holds t ∪ X for every X ⊆ A with K - |t| <= |X| <= K; it is
// the cylinder a point graph G* lives on when the stem is removed again (see star_graph).
struct Cylinder {
  Mask stem = 0;
  Mask reservoir = 0;
  std::size_t depth = 0;
  bool lifted = false;

  // Throws std::invalid_argument unless max t < min A.
  static Cylinder at_depth(Mask stem, Mask reservoir, std::size_t depth);
  static Cylinder lifted_at(Mask stem, Mask reservoir, std::size_t depth);

  Cylinder with_reservoir(Mask r) const;

  // Bounds on |X| for points t ∪ X (before clipping to |A|).
  std::size_t min_extension() const;
  std::size_t max_extension() const;

  bool contains(FinitePoint p) const;
};

struct PointList {
  std::vector<FinitePoint> points;
  // Set when a plain cylinder violates |t| < K <= |t| + |A|; points is then empty.
  bool depth_out_of_range = false;
};

// All points in lexicographic order. For a plain cylinder the count is C(|A|, K - |t|).
PointList cylinder_points(const Cylinder& c);

// Symmetric, loop-free graph on finite points (mixed depths allowed) with a declared
// degree bound.
class PointGraph {
 public:
  explicit PointGraph(std::size_t degree_bound = SIZE_MAX) : degree_bound_(degree_bound) {}

  std::size_t degree_bound() const { return degree_bound_; }

  // False, leaving the graph unchanged, for loops, repeated edges, or a degree overflow.
  bool try_add_edge(FinitePoint a, FinitePoint b);
  // Throws std::invalid_argument where try_add_edge would return false.
  void add_edge(FinitePoint a, FinitePoint b);

  bool adjacent(FinitePoint a, FinitePoint b) const;
  std::span<const FinitePoint> neighbors(FinitePoint a) const;
  std::size_t degree(FinitePoint a) const { return neighbors(a).size(); }
  std::size_t max_degree() const;
  std::size_t edge_count() const { return edge_count_; }

  // Points with at least one neighbour, in lexicographic order.
  std::vector<FinitePoint> points() const;
  // Each edge once, smaller point first, in lexicographic order.
  std::vector<std::pair<FinitePoint, FinitePoint>> edges() const;

 private:
  std::size_t degree_bound_;
  std::size_t edge_count_ = 0;
  std::unordered_map<FinitePoint, std::vector<FinitePoint>, FinitePointHash> adj_;
};

using PointColoring = std::function<std::uint32_t(FinitePoint)>;

// Least (lexicographic) A' ⊆ A with |A'| = target_size such that every point of the
// sub-cylinder with reservoir A' has the same colour. nullopt when none exists.
std::optional<Mask> monochromatic_shrink(const Cylinder& c, const PointColoring& coloring,
                                         std::size_t target_size);

// True iff no edge of g joins two points of c.
bool is_independent(const Cylinder& c, const PointGraph& g);

struct IndependentResult {
  std::optional<Mask> reservoir;
  std::size_t colors = 0;  // colours used by the greedy colouring of g on the cylinder
};

// Greedy colouring of g on the cylinder points (lexicographic order), then
// monochromatic_shrink. A returned reservoir has been checked independent.
IndependentResult independent_cylinder(const Cylinder& c, const PointGraph& g, std::size_t target_size);

// G* on the points of c: (B, C) is an edge iff B != C and (B \ r, C \ s) ∈ g for some r, s ⊆ t.
PointGraph star_graph(const Cylinder& c, const PointGraph& g);

struct E0Edge {
  FinitePoint a;
  FinitePoint b;
};

// Depth-K edges of g inside t ∪ reservoir whose symmetric difference leaves the stem.
std::vector<E0Edge> e0_violations(Mask stem, Mask reservoir, std::size_t depth, const PointGraph& g);

struct E0Result {
  std::optional<Mask> reservoir;
  std::size_t star_edges = 0;
  std::size_t star_max_degree = 0;
  std::size_t colors = 0;
};

// Works on the lifted cylinder over c's stem and reservoir. A returned A' satisfies
// B △ C ⊆ t for every depth-K edge (B, C) of g with B, C ⊆ t ∪ A'; this is re-checked
// before returning.
E0Result e0_shrink(const Cylinder& c, const PointGraph& g, std::size_t target_size);

}  // namespace sepcover
