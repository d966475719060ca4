#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

namespace sepcover {

// Cantor pairing <a, b> = (a + b)(a + b + 1) / 2 + b.
std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b);

// Inverse of cantor_pair: n -> (g0, g1).
std::pair<std::uint64_t, std::uint64_t> cantor_pairing_inverse(std::uint64_t n);

// Bijection N -> [0, R) x N obtained by listing N x N in Cantor order and skipping pairs
// whose first coordinate is >= R. For R = 2 the first coordinate alternates 0, 1, 0, 1, ...
class RegionPairing {
 public:
  // Throws std::invalid_argument for zero regions.
  explicit RegionPairing(std::size_t regions);

  std::size_t regions() const { return regions_; }

  // (region index, sweep index) of stage n.
  std::pair<std::size_t, std::size_t> operator()(std::uint64_t n) const;

 private:
  std::size_t regions_;
};

}  // namespace sepcover
