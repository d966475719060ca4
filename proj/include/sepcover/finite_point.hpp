#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sepcover {

// Finite subsets of the ground set [0, N) with N <= 64, stored as bit masks.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;

inline std::size_t mask_size(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
// [0, n)
inline Mask ground_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<std::uint32_t> mask_elements(Mask m);
Mask mask_of(std::span<const std::uint32_t> elements);
// The `count` smallest elements of m (all of m if it has fewer).
Mask smallest_elements(Mask m, std::size_t count);
// "{0,2,5}"
std::string format_set(Mask m);

// Order of the increasing element tuples, a proper prefix first.
bool lex_less(Mask a, Mask b);

// Subsets of `set` with exactly k elements, in lexicographic order.
std::vector<Mask> subsets_of_size(Mask set, std::size_t k);

// Calls visit(s) for every subset s of `set`, including 0 and `set`.
template <class Visit>
void for_each_subset(Mask set, Visit&& visit) {
  Mask s = 0;
  while (true) {
    visit(s);
    if (s == set) break;
    s = (s - set) & set;
  }
}

// A strictly increasing tuple of naturals below the ground size; its depth is the length.
class FinitePoint {
 public:
  FinitePoint() = default;
  explicit FinitePoint(Mask bits) : bits_(bits) {}

  // Throws std::invalid_argument unless the tuple is strictly increasing and below `ground`.
  static FinitePoint from_elements(std::span<const std::uint32_t> elements, std::size_t ground);

  Mask mask() const { return bits_; }
  std::size_t depth() const { return mask_size(bits_); }
  std::vector<std::uint32_t> elements() const { return mask_elements(bits_); }
  bool contains(std::uint32_t x) const { return x < 64 && ((bits_ >> x) & 1U) != 0; }

  // "(0,2,5)"
  std::string to_string() const;

  friend bool operator==(FinitePoint a, FinitePoint b) { return a.bits_ == b.bits_; }
  friend bool operator<(FinitePoint a, FinitePoint b) { return lex_less(a.bits_, b.bits_); }

 private:
  Mask bits_ = 0;
};

struct FinitePointHash {
  std::size_t operator()(FinitePoint p) const { return std::hash<Mask>{}(p.mask()); }
};

}  // namespace sepcover
