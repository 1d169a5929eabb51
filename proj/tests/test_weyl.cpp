#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gosset/weyl.hpp"

using namespace gosset;

TEST_CASE("simple roots realize the rank-r diagram") {
  for (int r = 3; r <= 8; ++r) {
    const Surface s(r);
    const RootBasis basis = simple_roots(s);
    REQUIRE(basis.roots.size() == std::size_t(r));
    for (const auto& d : basis.roots) CHECK(is_root(s, d));

    // branch node: d_0 meets exactly d_3 = e_3 - e_4
    for (int i = 1; i < r; ++i) {
      const std::int64_t prod = intersect(basis.roots[0], basis.roots[std::size_t(i)]);
      CHECK(prod == (i == 3 ? 1 : 0));
    }
    // chain d_1 - d_2 - ... - d_{r-1}
    for (int i = 1; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        const std::int64_t prod = intersect(basis.roots[std::size_t(i)], basis.roots[std::size_t(j)]);
        CHECK(prod == (j == i + 1 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("reflection basics") {
  const Surface s6(6);
  const DivisorClass swap_root = s6.e(1) - s6.e(2);
  CHECK(reflect(s6.e(1), swap_root) == s6.e(2));
  CHECK(reflect(s6.e(2), swap_root) == s6.e(1));

  for (const auto& d : simple_roots(s6).roots)
    CHECK(reflect(s6.canonical_class(), d) == s6.canonical_class());

  // skew lines swap under the difference root
  const DivisorClass l1 = s6.e(1);
  const DivisorClass l2 = s6.h() - s6.e(2) - s6.e(3);
  REQUIRE(intersect(l1, l2) == 0);
  CHECK(is_root(s6, l1 - l2));
  CHECK(reflect(l1, l1 - l2) == l2);

  CHECK_THROWS_AS(reflect(s6.h(), s6.e(1)), std::invalid_argument);
}

TEST_CASE("reflections are involutive isometries") {
  std::mt19937_64 rng(99);
  for (int r = 3; r <= 8; ++r) {
    const Surface s(r);
    const ClassSet root_set = roots(s);
    auto random_class = [&] {
      DivisorClass d = DivisorClass::zero(r);
      for (int i = 0; i <= r; ++i) d[i] = std::int64_t(rng() % 19) - 9;
      return d;
    };
    for (int trial = 0; trial < 300; ++trial) {
      const DivisorClass& d = root_set.items[rng() % root_set.size()];
      const DivisorClass a = random_class();
      const DivisorClass b = random_class();
      CHECK(reflect(reflect(a, d), d) == a);
      CHECK(intersect(reflect(a, d), reflect(b, d)) == intersect(a, b));
    }
  }
}

TEST_CASE("orbit closures reproduce the class sets") {
  const Surface s6(6);
  const ClassSet line_orbit = orbit(s6, s6.e(6));
  const ClassSet line_set = lines(s6);
  REQUIRE(line_orbit.size() == 27);
  CHECK(std::equal(line_orbit.items.begin(), line_orbit.items.end(), line_set.items.begin()));

  const Surface s5(5);
  const ClassSet ruling_orbit = orbit(s5, s5.h() - s5.e(1));
  CHECK(ruling_orbit.size() == 10);
  CHECK(std::equal(ruling_orbit.items.begin(), ruling_orbit.items.end(),
                   rulings(s5).items.begin()));

  const ClassSet fixed = orbit(s6, s6.canonical_class());
  REQUIRE(fixed.size() == 1);
  CHECK(fixed.items[0] == s6.canonical_class());

  // the roots form a single orbit
  const ClassSet root_orbit = orbit(s6, simple_roots(s6).roots[0]);
  const ClassSet root_set = roots(s6);
  CHECK(root_orbit.size() == 72);
  CHECK(std::equal(root_orbit.items.begin(), root_orbit.items.end(), root_set.items.begin()));

  CHECK_THROWS_AS(orbit(s6, s6.h(), std::span<const DivisorClass>(&line_set.items[0], 1)),
                  std::invalid_argument);
}

TEST_CASE("weyl orders from the stabilizer chain") {
  const std::int64_t expected[] = {12, 120, 1920, 51840, 2903040, 696729600};
  for (int r = 3; r <= 8; ++r) CHECK(weyl_order(r) == expected[r - 3]);
  CHECK_THROWS_AS(weyl_order(9), std::invalid_argument);
  CHECK_THROWS_AS(weyl_order(2), std::invalid_argument);
}

TEST_CASE("skew lines are exactly the reflection-swapped pairs") {
  for (int r = 4; r <= 7; ++r) {
    const Surface s(r);
    const ClassSet line_set = lines(s);
    const ClassSet root_set = roots(s);

    for (std::size_t i = 0; i < line_set.size(); ++i) {
      for (std::size_t j = i + 1; j < line_set.size(); ++j) {
        const DivisorClass& l1 = line_set.items[i];
        const DivisorClass& l2 = line_set.items[j];
        if (intersect(l1, l2) == 0) {
          CHECK(is_root(s, l1 - l2));
          CHECK(reflect(l1, l1 - l2) == l2);
        }
      }
    }
    // converse at rank <= 7: a reflection moving a line lands on a skew line
    for (const auto& l : line_set.items) {
      for (const auto& d : root_set.items) {
        if (intersect(d, l) == 0) continue;
        const DivisorClass image = reflect(l, d);
        CHECK(intersect(l, image) == 0);
      }
    }
  }

  // the forward direction holds at rank 8 too
  const Surface s8(8);
  const ClassSet line_set = lines(s8);
  for (std::size_t i = 0; i < line_set.size(); ++i) {
    for (std::size_t j = i + 1; j < line_set.size(); ++j) {
      const DivisorClass& l1 = line_set.items[i];
      const DivisorClass& l2 = line_set.items[j];
      if (intersect(l1, l2) != 0) continue;
      REQUIRE(is_root(s8, l1 - l2));
      REQUIRE(reflect(l1, l1 - l2) == l2);
    }
  }
}

TEST_CASE("root-line products stay in the rank-dependent range") {
  for (int r = 3; r <= 8; ++r) {
    const Surface s(r);
    const std::int64_t top = r <= 7 ? 1 : 2;
    for (const auto& l : lines(s).items)
      for (const auto& d : roots(s).items) {
        const std::int64_t prod = intersect(l, d);
        CHECK(prod >= -top);
        CHECK(prod <= top);
      }
  }
}

TEST_CASE("reflections permute each class set") {
  const Surface s6(6);
  const ClassSet sets[] = {lines(s6), rulings(s6), exceptional_systems(s6)};
  for (const auto& set : sets) {
    for (const auto& d : simple_roots(s6).roots) {
      for (const auto& item : set.items) CHECK(set.contains(reflect(item, d)));
    }
  }
}
