#include <doctest.h>

#include <algorithm>
#include <random>

#include "sepcover/finite_point.hpp"

using namespace sepcover;

TEST_SUITE("ellentuck") {
  TEST_CASE("points and masks") {
    const std::vector<std::uint32_t> e{0, 2, 5};
    const FinitePoint p = FinitePoint::from_elements(e, 6);
    CHECK(p.depth() == 3);
    CHECK(p.elements() == e);
    CHECK(p.to_string() == "(0,2,5)");
    CHECK(format_set(p.mask()) == "{0,2,5}");
    CHECK(format_set(0) == "{}");
    CHECK(p.contains(2));
    CHECK_FALSE(p.contains(3));
    CHECK_FALSE(p.contains(200));
    CHECK(FinitePoint().to_string() == "()");

    CHECK_THROWS_AS(FinitePoint::from_elements(std::vector<std::uint32_t>{2, 1}, 6), std::invalid_argument);
    CHECK_THROWS_AS(FinitePoint::from_elements(std::vector<std::uint32_t>{1, 1}, 6), std::invalid_argument);
    CHECK_THROWS_AS(FinitePoint::from_elements(std::vector<std::uint32_t>{6}, 6), std::invalid_argument);

    CHECK(ground_mask(0) == 0);
    CHECK(ground_mask(3) == 0b111);
    CHECK(ground_mask(64) == ~Mask{0});
    CHECK(smallest_elements(0b110110, 2) == 0b000110);
    CHECK(smallest_elements(0b110, 5) == 0b110);
    CHECK(mask_of(e) == p.mask());
    CHECK(is_subset(0b010, 0b110));
    CHECK_FALSE(is_subset(0b011, 0b110));
  }

  TEST_CASE("lexicographic order") {
    auto pt = [](std::vector<std::uint32_t> v) { return FinitePoint::from_elements(v, 10); };
    CHECK(pt({0, 2}) < pt({0, 3}));
    CHECK(pt({0, 9}) < pt({1, 2}));
    CHECK(pt({0}) < pt({0, 1}));
    CHECK(pt({}) < pt({0}));
    CHECK_FALSE(pt({1, 2}) < pt({1, 2}));

    // Against std::lexicographical_compare on element tuples.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
      const Mask a = rng() & ground_mask(12);
      const Mask b = rng() & ground_mask(12);
      const auto ea = mask_elements(a);
      const auto eb = mask_elements(b);
      CHECK(lex_less(a, b) == std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end()));
    }
  }

  TEST_CASE("subset enumeration") {
    const Mask set = 0b101101;
    const auto two = subsets_of_size(set, 2);
    CHECK(two.size() == 6);
    CHECK(std::is_sorted(two.begin(), two.end(), lex_less));
    CHECK(two.front() == 0b000101);
    CHECK(subsets_of_size(set, 0) == std::vector<Mask>{0});
    CHECK(subsets_of_size(set, 5).empty());

    std::vector<Mask> all;
    for_each_subset(set, [&](Mask s) { all.push_back(s); });
    CHECK(all.size() == 16);
    std::sort(all.begin(), all.end());
    CHECK(std::unique(all.begin(), all.end()) == all.end());
    for (const Mask s : all) CHECK(is_subset(s, set));

    std::size_t count = 0;
    for_each_subset(0, [&](Mask s) {
      CHECK(s == 0);
      ++count;
    });
    CHECK(count == 1);
  }
}
