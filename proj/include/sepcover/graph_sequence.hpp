#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sepcover {

using VertexId = std::uint32_t;
using Stage = std::uint32_t;
using Radius = std::uint64_t;

// Radius larger than any graph distance; BFS with this radius covers the whole component.
inline constexpr Radius kUnboundedRadius = std::numeric_limits<Radius>::max();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Stage birth = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Increasing sequence G_0 ⊆ G_1 ⊆ ... ⊆ G_horizon on the vertex universe [0, N).
// Edge (u, v, b) belongs to every G_n with n >= b. The degree bound is a declared
// promise; use validate() to check it. Immutable after construction.
class GraphSequence {
 public:
  struct Incidence {
    VertexId neighbor;
    Stage birth;
  };

  GraphSequence() = default;

  // Throws std::invalid_argument for endpoints outside the universe or births past
  // the horizon. Self-loops and repeated pairs are accepted and show up in validate().
  GraphSequence(std::size_t universe_size, std::size_t max_degree_bound, Stage horizon,
                std::vector<Edge> edges);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t max_degree_bound() const { return max_degree_bound_; }
  Stage horizon() const { return horizon_; }
  // Largest birth index, 0 for an edgeless sequence.
  Stage max_birth() const { return max_birth_; }

  // Edges as given (u, v swapped so that u <= v), sorted by (u, v, birth).
  std::span<const Edge> edges() const { return edges_; }

  // Distinct non-loop neighbours of x with their earliest birth, ordered by birth.
  std::span<const Incidence> incidences(VertexId x) const { return adjacency_[x]; }

  // G_n-neighbours of x in ascending order.
  std::vector<VertexId> neighbors(Stage n, VertexId x) const;

  // {y : dist_{G_n}(x, y) <= radius} in ascending order.
  std::vector<VertexId> ball(Stage n, VertexId x, Radius radius) const;

  bool dist_leq(Stage n, VertexId x, VertexId y, Radius k) const;

  // Shortest-path distance in G_n, std::nullopt when unreachable.
  std::optional<std::uint64_t> distance(Stage n, VertexId x, VertexId y) const;

  void check_stage(Stage n) const;
  void check_vertex(VertexId x) const;

 private:
  std::size_t universe_size_ = 0;
  std::size_t max_degree_bound_ = 0;
  Stage horizon_ = 0;
  Stage max_birth_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Truncated breadth-first search with reusable scratch space. One instance per thread.
class BallSearch {
 public:
  explicit BallSearch(const GraphSequence& g);

  // Visits the ball of the given radius around x in G_n. The returned span lists the
  // vertices in BFS order and stays valid until the next call.
  std::span<const VertexId> run(Stage n, VertexId x, Radius radius);

  // Depth of a vertex reached by the last run(); only meaningful for listed vertices.
  std::uint64_t depth(VertexId y) const { return depth_[y]; }
  bool reached(VertexId y) const { return mark_[y] == epoch_; }

 private:
  const GraphSequence* graph_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint64_t> depth_;
  std::vector<VertexId> order_;
  std::uint32_t epoch_ = 0;
};

struct Violation {
  enum class Kind { SelfLoop, DuplicatePair, DegreeBound };

  Kind kind;
  VertexId vertex;
  // Other endpoint for SelfLoop/DuplicatePair; unused for DegreeBound.
  VertexId other;
  // First stage at which the violation is present.
  Stage stage;
  // Degree reached at `stage` for DegreeBound.
  std::size_t degree;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const GraphSequence& g);

}  // namespace sepcover
