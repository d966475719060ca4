#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepcover/graph_sequence.hpp"
#include "sepcover/hierarchy.hpp"

namespace sepcover {

// rep_n(x) for every vertex x and stage n = 0..N: the least vertex of x's H_n-component.
// Vertices outside the base set keep rep_n(x) = x.
class LabelCode {
 public:
  LabelCode(std::size_t universe_size, std::size_t stages);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t stages() const { return stages_; }
  // Minimum bits that hold any vertex id, at least 1.
  std::size_t block_width() const { return block_width_; }

  VertexId rep(Stage n, VertexId x) const { return reps_[static_cast<std::size_t>(n) * universe_size_ + x]; }
  void set_rep(Stage n, VertexId x, VertexId r) { reps_[static_cast<std::size_t>(n) * universe_size_ + x] = r; }
  std::vector<VertexId> sequence(VertexId x) const;

 private:
  std::size_t universe_size_;
  std::size_t stages_;
  std::size_t block_width_;
  std::vector<VertexId> reps_;  // stage-major
};

LabelCode label_sequences(const Hierarchy& h);

class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-width big-endian blocks, one per stage. Throws EncodingError if a representative
// does not fit in `block_width` bits.
std::string encode_sequence(std::span<const VertexId> reps, std::size_t block_width);
std::vector<std::string> encode_binary(const LabelCode& code);
std::vector<std::string> encode_binary(const LabelCode& code, std::size_t block_width);

// Least n such that the sequences agree at every stage >= n; nullopt if they differ at the end.
std::optional<std::size_t> agreement_start(std::span<const VertexId> a, std::span<const VertexId> b);

struct ReductionReport {
  std::size_t base_size = 0;
  std::size_t pairs_checked = 0;
  // Pairs where H_N-connectivity and final-representative equality disagree.
  std::size_t label_mismatches = 0;
  // Pairs whose bit strings do not agree from exactly block_width * agreement_start.
  std::size_t bit_mismatches = 0;
  // Pairs where H_N-connectivity and the brute-force G-connectivity oracle disagree.
  std::size_t oracle_mismatches = 0;
  // Label sequences violating once-equal-always-equal or rep_n(x) in x's component.
  std::size_t code_invariant_violations = 0;

  bool ok() const {
    return label_mismatches == 0 && bit_mismatches == 0 && oracle_mismatches == 0 &&
           code_invariant_violations == 0;
  }
};

inline constexpr std::size_t kReductionPairLimit = 500;

// All-pairs check over the base set. Throws ConfigError when the base set exceeds
// kReductionPairLimit vertices.
ReductionReport verify_reduction(const GraphSequence& g, const Hierarchy& h, const LabelCode& code);

}  // namespace sepcover
