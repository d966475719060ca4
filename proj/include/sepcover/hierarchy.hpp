#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sepcover/covers.hpp"
#include "sepcover/errors.hpp"
#include "sepcover/graph_sequence.hpp"
#include "sepcover/growth.hpp"

namespace sepcover {

struct HierarchyEdge {
  VertexId u;  // u < v
  VertexId v;
  Stage birth;    // birth in the graph sequence
  Stage entered;  // first n with the edge in H_n
};

struct ComponentCertificate {
  VertexId representative;  // least vertex
  std::size_t size;
  std::uint64_t diameter;   // exact, measured inside H_n
  std::vector<VertexId> members;  // empty when the universe exceeds kFullMemberListLimit
};

// Components of H_n over the base set. Singletons (diameter 0) are only counted.
struct StageCertificate {
  Stage stage = 0;
  std::uint64_t bound = 0;  // f(n)
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  std::size_t singleton_count = 0;
  std::uint64_t max_diameter = 0;
  std::vector<ComponentCertificate> components;  // size >= 2, by representative
};

inline constexpr std::size_t kFullMemberListLimit = 10000;

struct BuildOptions {
  // When false the separation and growth checks are skipped ("verification-only" mode,
  // used to study corrupted inputs).
  bool validate_inputs = true;
};

// H_0 ⊆ H_1 ⊆ ... ⊆ H_N over the base set B = {x : x covered at least m times}.
class Hierarchy {
 public:
  std::size_t universe_size() const { return universe_size_; }
  Stage last_stage() const { return static_cast<Stage>(certificates_.size() - 1); }
  std::size_t threshold() const { return threshold_; }

  std::span<const VertexId> base_set() const { return base_set_; }
  bool in_base(VertexId x) const { return in_base_[x]; }

  // All edges of H_N ordered by (entered, u, v).
  std::span<const HierarchyEdge> edges() const { return edges_; }
  std::vector<HierarchyEdge> edges_at(Stage n) const;

  const StageCertificate& certificate(Stage n) const { return certificates_.at(n); }
  std::span<const StageCertificate> certificates() const { return certificates_; }

  const GrowthFunction& f() const { return f_; }
  const CoverSequence& covers() const { return covers_; }

  // Partition of the base set into H_n-components, each sorted, ordered by least member.
  std::vector<std::vector<VertexId>> components(Stage n) const;

  // Adjacency lists of H_n over the whole universe.
  std::vector<std::vector<VertexId>> adjacency(Stage n) const;

 private:
  friend Hierarchy build_hierarchy(const GraphSequence&, const GrowthFunction&, const CoverSequence&,
                                   std::size_t, const BuildOptions&);

  std::size_t universe_size_ = 0;
  std::size_t threshold_ = 0;
  std::vector<VertexId> base_set_;
  std::vector<bool> in_base_;
  std::vector<HierarchyEdge> edges_;
  std::vector<StageCertificate> certificates_;
  GrowthFunction f_;
  CoverSequence covers_;
};

class HierarchyInputError : public InvariantViolation {
 public:
  HierarchyInputError(const std::string& what, std::optional<CoverViolation> cover,
                      std::optional<Stage> growth_index)
      : InvariantViolation("hierarchy", what), cover_(cover), growth_index_(growth_index) {}

  const std::optional<CoverViolation>& cover_violation() const { return cover_; }
  const std::optional<Stage>& growth_violation() const { return growth_index_; }

 private:
  std::optional<CoverViolation> cover_;
  std::optional<Stage> growth_index_;
};

// H_0 = ∅; H_{n+1} = H_n ∪ {(x, y) ∈ G_{n+1}|_B : x ∈ B_{n+1} or y ∈ B_{n+1}}.
// Throws HierarchyInputError for a non-separated cover or an f violating the growth
// recurrence, and ConfigError when covers run past the graph or f horizon.
Hierarchy build_hierarchy(const GraphSequence& g, const GrowthFunction& f, const CoverSequence& covers,
                          std::size_t m = 1, const BuildOptions& options = {});

struct ComponentDiameter {
  std::vector<VertexId> members;
  std::uint64_t diameter;
};

// Exact diameters by BFS from every vertex of every H_n-component (base set only).
std::vector<ComponentDiameter> component_diameters(const Hierarchy& h, Stage n);

struct DiameterViolation {
  Stage stage;
  VertexId representative;
  std::uint64_t diameter;
  std::uint64_t bound;
};

// Every certified H_n-component diameter compared against f(n).
std::vector<DiameterViolation> diameter_claim_violations(const Hierarchy& h);

enum class CaptureStatus { Captured, HorizonUncaptured };

struct EdgeCapture {
  VertexId u;
  VertexId v;
  Stage birth;
  CaptureStatus status;
  std::optional<Stage> witness;  // first k >= max(birth, 1) with u or v in B_k
};

struct CaptureReport {
  std::size_t base_edges = 0;
  std::size_t captured = 0;
  std::size_t horizon_uncaptured = 0;
  std::vector<EdgeCapture> edges;
  // Edges whose witness index disagrees with the stage they entered H.
  std::size_t witness_mismatches = 0;
  // Same partition of B from H_N and from G restricted to B minus uncaptured edges.
  bool connectivity_consistent = true;

  bool all_captured() const { return horizon_uncaptured == 0; }
};

CaptureReport verify_capture(const GraphSequence& g, const Hierarchy& h);

// True iff every H_{n+1}-component contains at most one point of B_{n+1}, for all n.
bool verify_unique_cover_point(const Hierarchy& h, const CoverSequence& covers);

}  // namespace sepcover
