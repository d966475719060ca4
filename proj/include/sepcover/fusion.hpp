#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sepcover/ellentuck.hpp"
#include "sepcover/errors.hpp"
#include "sepcover/finite_point.hpp"
#include "sepcover/graph_sequence.hpp"

namespace sepcover {

// φ_0, ..., φ_{M-1}, each a self-inverse permutation of the depth-K points of [0, N).
// Only moved points are stored.
class InvolutionFamily {
 public:
  using Map = std::vector<std::pair<FinitePoint, FinitePoint>>;

  // maps[i] lists (p, φ_i(p)) for moved points; both directions must be present.
  // Throws std::invalid_argument for points of the wrong depth or outside the ground set,
  // and InvariantViolation when some φ_i is not self-inverse.
  InvolutionFamily(std::size_t ground, std::size_t depth, const std::vector<Map>& maps);

  std::size_t ground() const { return ground_; }
  std::size_t depth() const { return depth_; }
  std::size_t size() const { return maps_.size(); }

  FinitePoint apply(std::size_t i, FinitePoint p) const;
  // Moved points of φ_i as (p, φ_i(p)), by p.
  Map listing(std::size_t i) const;
  // graph(φ_i) with degree bound 1.
  PointGraph graph(std::size_t i) const;

 private:
  std::size_t ground_;
  std::size_t depth_;
  std::vector<std::unordered_map<FinitePoint, FinitePoint, FinitePointHash>> maps_;
};

// A_n with its frozen prefix r_n(A_n), the n smallest elements.
struct FusionState {
  Stage stage = 0;
  Mask reservoir = 0;
  Mask frozen = 0;
};

struct StageOutcome {
  Stage stage = 0;
  Mask stem = 0;
  std::size_t target = 0;  // |A_{n+1}|
  std::size_t involution_edges = 0;
  std::size_t star_edges = 0;
  std::size_t star_max_degree = 0;
  std::size_t colors = 0;
  bool found = false;
};

struct PipelineResult {
  std::vector<FusionState> trace;  // A_0, ..., A_M on success
  std::vector<StageOutcome> stages;
  std::optional<Stage> failed_stage;

  bool success() const { return !failed_stage.has_value(); }
  Mask final_reservoir() const { return trace.back().reservoir; }
};

// Starts from A_0 = [0, N). Stage n freezes t = r_n(A_n) and shrinks A_n \ t with e0_shrink
// for graph(φ_n), keeping |A_{n+1}| = targets[n] (a single target applies to every stage).
// Throws ConfigError unless n < targets[n] <= |A_n| at every stage.
PipelineResult fusion_pipeline(const InvolutionFamily& invs, std::span<const std::size_t> targets);

struct PipelineCheck {
  std::size_t edges_checked = 0;
  std::size_t violations = 0;
  bool ok() const { return violations == 0; }
};

// For every n < M and every depth-K point B inside the final reservoir with φ_n(B) != B
// also inside, checks B △ φ_n(B) ⊆ r_n(A_n). Shares no code with fusion_pipeline.
PipelineCheck verify_pipeline(const InvolutionFamily& invs, const std::vector<FusionState>& trace);

class FusionError : public InvariantViolation {
 public:
  FusionError(Stage stage, const std::string& what)
      : InvariantViolation("ellentuck", "stage " + std::to_string(stage) + ": " + what), stage_(stage) {}
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

// ∩ A_n together with the frozen prefixes, after checking A_{n+1} ⊆ A_n, that each
// frozen prefix is r_n(A_n) and stays the n smallest elements later on, and that the
// limit lies inside every A_k. Throws FusionError naming the first bad stage.
Mask fusion_limit(const std::vector<FusionState>& trace);

// A_0 = reservoir at every stage.
std::vector<FusionState> constant_trace(Mask reservoir, std::size_t stages);

struct StageEnumeration {
  Stage stage = 0;
  Mask prefix = 0;                  // r_n(A_n)
  std::vector<Mask> subsets;        // every s ⊆ r_n(A_n), lexicographic
  std::uint64_t first_cover_index = 0;  // s_j gets cover index first_cover_index + j
};

struct Bookkeeping {
  std::vector<std::uint64_t> k;  // k_0, ..., k_L for a trace of L states
  std::vector<StageEnumeration> stages;

  // Stage and subset scheduled at cover index `index` (>= 1).
  std::optional<std::pair<Stage, Mask>> cover_source(std::uint64_t index) const;
};

// k_n = sum over i < n of |{s : s ⊆ r_i(A_i)}|, with ≤_fin read as inclusion.
Bookkeeping kn_bookkeeping(const std::vector<FusionState>& trace);

}  // namespace sepcover
