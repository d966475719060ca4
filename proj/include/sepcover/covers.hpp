#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sepcover/graph_sequence.hpp"
#include "sepcover/growth.hpp"
#include "sepcover/pairing.hpp"

namespace sepcover {

inline constexpr const char* kCoverFormatVersion = "cover-lines v1";
inline constexpr const char* kRegionFormatVersion = "region-lines v1";

struct CoverProvenance {
  enum class Source { Empty, Coloring, UserSupplied };

  Source source = Source::Empty;
  Stage colored_at = 0;    // stage M whose power graph G_M^{f(M)} was coloured
  std::uint64_t radius = 0;  // f(M)
  std::uint32_t color = 0;
  std::size_t sweep = 0;   // full-cycle sweep number, or g1(n) for region sweeps
  std::optional<std::size_t> region;  // g0(n) for region sweeps
};

struct SweepRecord {
  Stage first = 0;
  Stage last = 0;
  Stage colored_at = 0;
};

// B_0, ..., B_N. Each B_n is sorted ascending.
struct CoverSequence {
  std::size_t universe_size = 0;
  std::vector<std::vector<VertexId>> covers;
  std::vector<CoverProvenance> provenance;
  std::vector<SweepRecord> sweeps;  // filled by build_covers_full_cycle

  std::size_t size() const { return covers.size(); }
  Stage last_index() const { return covers.empty() ? 0 : static_cast<Stage>(covers.size() - 1); }
};

struct CoverageReport {
  std::size_t cover_count = 0;
  std::vector<std::size_t> counts;  // |{n : x in B_n}| per vertex
  std::size_t threshold = 0;
  std::vector<VertexId> threshold_set;  // limsup_set(threshold)

  std::vector<VertexId> limsup_set(std::size_t m) const;
  std::size_t min_count() const;
};

CoverageReport coverage(const CoverSequence& covers, std::size_t m);

struct RegionSweepPlan {
  std::vector<std::vector<VertexId>> regions;
  RegionPairing pairing;

  // Throws ConfigError for an empty region list.
  explicit RegionSweepPlan(std::vector<std::vector<VertexId>> regions);
};

// Checks that stages 0 .. stages-1 map injectively into [0, R) x N and that, per region,
// the sweep indices used form an initial segment.
bool verify_pairing_prefix(const RegionSweepPlan& plan, std::uint64_t stages);

// One colour class per stage n < stages: colour G_n^{f(n)} and keep the class meeting
// region U_{g0(n)} in the most vertices (least colour on ties).
CoverSequence build_covers_sweep(const GraphSequence& g, const GrowthFunction& f,
                                 const RegionSweepPlan& plan, std::size_t stages);

struct FullCycleOptions {
  // Index of the first sweep's first cover; earlier covers are empty (B_0 = ∅ by default).
  Stage first_index = 1;
  // Keep sweeping until some completed sweep starts at or after this index.
  Stage final_sweep_from = 0;
};

// Sweeps of consecutive covers. A sweep starting at n0 colours G_M^{f(M)} for the least M
// found with n0 + (#colours) - 1 <= M and emits every class in colour order at indices
// n0, n0 + 1, ...; a class of G_M^{f(M)} is f(n)-separated in G_n for n <= M because f is
// nondecreasing and distances only shrink with n. Throws ConfigError when the graph or f
// horizon is too short to place a sweep.
CoverSequence build_covers_full_cycle(const GraphSequence& g, const GrowthFunction& f,
                                      std::size_t sweeps, const FullCycleOptions& options = {});

struct CoverViolation {
  Stage index;
  VertexId x;
  VertexId y;
};

// First cover B_n that is not f(n)-separated in G_n, with an offending pair.
std::optional<CoverViolation> find_cover_violation(const GraphSequence& g, const GrowthFunction& f,
                                                   const CoverSequence& covers);

// Region index k is touched when some B_n with g0(n) = k meets U_k.
struct RegionTouch {
  std::size_t region;
  bool nonempty;
  bool touched;
  std::size_t stages_assigned;
};

std::vector<RegionTouch> region_touches(const CoverSequence& covers, const RegionSweepPlan& plan);

// `<keyword> <i>: v1 v2 ...`, indices consecutive from 0. Throws ParseError.
std::vector<std::vector<VertexId>> read_indexed_sets(std::istream& in, const std::string& source,
                                                     const std::string& keyword,
                                                     std::size_t universe_size);
void write_indexed_sets(std::ostream& out, const std::string& keyword,
                        const std::vector<std::vector<VertexId>>& sets);

CoverSequence read_covers(std::istream& in, const std::string& source, std::size_t universe_size);
CoverSequence read_covers_file(const std::filesystem::path& path, std::size_t universe_size);
void write_covers(std::ostream& out, const CoverSequence& covers);

std::vector<std::vector<VertexId>> read_regions_file(const std::filesystem::path& path,
                                                     std::size_t universe_size);

}  // namespace sepcover
