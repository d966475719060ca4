#include "sepcover/finite_point.hpp"

#include <stdexcept>

namespace sepcover {

std::vector<std::uint32_t> mask_elements(Mask m) {
  std::vector<std::uint32_t> out;
  out.reserve(mask_size(m));
  while (m != 0) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::span<const std::uint32_t> elements) {
  Mask m = 0;
  for (const auto x : elements) {
    if (x >= kMaxGround) throw std::invalid_argument("element " + std::to_string(x) + " exceeds 63");
    m |= Mask{1} << x;
  }
  return m;
}

Mask smallest_elements(Mask m, std::size_t count) {
  Mask out = 0;
  for (std::size_t i = 0; i < count && m != 0; ++i) {
    const Mask low = m & (~m + 1);
    out |= low;
    m ^= low;
  }
  return out;
}

namespace {

std::string join(Mask m, char open, char close) {
  std::string out(1, open);
  bool first = true;
  for (const auto x : mask_elements(m)) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  out += close;
  return out;
}

}  // namespace

std::string format_set(Mask m) { return join(m, '{', '}'); }

bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const int p = std::countr_zero(diff);
  const Mask above = p == 63 ? 0 : ~Mask{0} << (p + 1);
  if ((a >> p) & 1U) {
    // b lacks p: b is a prefix of a unless b continues above p
    return (b & above) != 0;
  }
  return (a & above) == 0;
}

std::vector<Mask> subsets_of_size(Mask set, std::size_t k) {
  const auto elems = mask_elements(set);
  std::vector<Mask> out;
  if (k > elems.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (const auto i : idx) m |= Mask{1} << elems[i];
    out.push_back(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == elems.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

FinitePoint FinitePoint::from_elements(std::span<const std::uint32_t> elements, std::size_t ground) {
  if (ground > kMaxGround) throw std::invalid_argument("ground size exceeds 64");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= ground) {
      throw std::invalid_argument("element " + std::to_string(elements[i]) + " outside the ground set");
    }
    if (i > 0 && elements[i] <= elements[i - 1]) {
      throw std::invalid_argument("point elements must be strictly increasing");
    }
  }
  return FinitePoint(mask_of(elements));
}

std::string FinitePoint::to_string() const { return join(bits_, '(', ')'); }

}  // namespace sepcover
