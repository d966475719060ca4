#include "sepcover/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sepcover {

namespace {

std::uint64_t triangle(std::uint64_t w) { return w * (w + 1) / 2; }

}  // namespace

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) { return triangle(a + b) + b; }

std::pair<std::uint64_t, std::uint64_t> cantor_pairing_inverse(std::uint64_t n) {
  // Largest w with triangle(w) <= n; the floating estimate is corrected both ways.
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (triangle(w) > n) --w;
  while (triangle(w + 1) <= n) ++w;
  const std::uint64_t b = n - triangle(w);
  return {w - b, b};
}

RegionPairing::RegionPairing(std::size_t regions) : regions_(regions) {
  if (regions == 0) throw std::invalid_argument("region pairing needs at least one region");
}

std::pair<std::size_t, std::size_t> RegionPairing::operator()(std::uint64_t n) const {
  const std::uint64_t r = regions_;
  // Diagonal w holds min(w, r - 1) + 1 admissible pairs, ordered by increasing b.
  std::uint64_t w = 0;
  std::uint64_t before = 0;  // admissible pairs on diagonals < w
  const std::uint64_t full = triangle(r);  // pairs on diagonals 0 .. r-1
  if (n < full) {
    auto [d, p] = cantor_pairing_inverse(n);
    w = d + p;
    before = triangle(w);
  } else {
    w = r + (n - full) / r;
    before = full + (w - r) * r;
  }
  const std::uint64_t position = n - before;
  const std::uint64_t a = std::min<std::uint64_t>(w, r - 1) - position;
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(w - a)};
}

}  // namespace sepcover
