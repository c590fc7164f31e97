#include <doctest.h>

#include <random>

#include "torifan/intersection.hpp"

using namespace torifan;

namespace {

Fan mk(int dim, std::vector<LatticeVector> rays, std::vector<std::vector<int>> cones) {
  Fan f;
  f.dim = dim;
  f.rays = std::move(rays);
  for (auto& c : cones) f.max_cones.push_back(Cone{std::move(c)});
  return f;
}

Fan p2() { return mk(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }

Fan p1xp1() {
  return mk(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Fan twisted_base(int a) {
  return mk(2, {{1, 0}, {-1, a}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Fan delta() {
  const Fan sigma =
      mk(3, {{1, 0, 1}, {0, 1, 0}, {-1, 3, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
         {{0, 1, 4},
          {0, 1, 5},
          {1, 2, 4},
          {1, 2, 5},
          {2, 3, 4},
          {2, 3, 5},
          {0, 3, 4},
          {0, 3, 5}});
  return star_subdivision(star_subdivision(sigma, LatticeVector{0, 1, 1}),
                          LatticeVector{0, 2, 1});
}

// Surface-only adjunction oracle: on a smooth complete surface fan the
// neighbours of a wall ray u satisfy prev + next = -(C^2) u, and the
// anticanonical degree of the wall's curve is C^2 + 2.
Rat anticanonical_degree_by_adjunction(const Fan& f, const WallCurve& w) {
  REQUIRE(f.dim == 2);
  REQUIRE(w.wall_rays.size() == 1);
  const LatticeVector& u = f.rays[static_cast<std::size_t>(w.wall_rays[0])];
  const LatticeVector sum = f.rays[static_cast<std::size_t>(w.extra_left)] +
                            f.rays[static_cast<std::size_t>(w.extra_right)];
  // sum = k u with k = -C^2.
  Rat k;
  bool set = false;
  for (int j = 0; j < 2; ++j) {
    if (u[j] == 0) {
      REQUIRE(sum[j] == 0);
      continue;
    }
    const Rat kj = make_rat(sum[j], u[j]);
    if (set) REQUIRE(kj == k);
    k = kj;
    set = true;
  }
  REQUIRE(set);
  return 2 - k;
}

}  // namespace

TEST_CASE("plane wall numbers: every line meets -K three times") {
  const auto d = anticanonical(p2());
  const auto curves = wall_curves(p2());
  REQUIRE(curves.size() == 3);
  for (const auto& w : curves) CHECK(wall_number(d, w) == 3);
  const auto nef = is_nef(d);
  CHECK(nef.value);
  CHECK(nef.min.value == 3);
  CHECK(is_ample(d).value);

  // Hyperplane class: degree one on every line.
  const InvariantDivisor h{p2(), {1, 0, 0}};
  for (const auto& w : curves) CHECK(wall_number(h, w) == 1);
  CHECK(is_ample(h).value);
}

TEST_CASE("quadric ruling fiber is nef but not ample") {
  const InvariantDivisor fiber{p1xp1(), {1, 0, 0, 0}};
  const auto curves = wall_curves(p1xp1());
  REQUIRE(curves.size() == 4);
  // Oracle: hand-solved covectors (-1,0), (0,0) across the four cones.
  CHECK(wall_number(fiber, curves[0]) == 0);
  CHECK(wall_number(fiber, curves[1]) == 1);
  CHECK(wall_number(fiber, curves[2]) == 0);
  CHECK(wall_number(fiber, curves[3]) == 1);
  const auto nef = is_nef(fiber);
  CHECK(nef.value);
  CHECK(nef.min.index == 0);
  CHECK(nef.min.value == 0);
  const auto ample = is_ample(fiber);
  CHECK_FALSE(ample.value);
  CHECK(ample.min.wall.wall_rays == std::vector<int>{0});
  CHECK(ample.min.value == 0);
}

TEST_CASE("twisted ruled surfaces: section degree drops with the twist") {
  for (int a = 0; a <= 5; ++a) {
    CAPTURE(a);
    const Fan f = twisted_base(a);
    const auto d = anticanonical(f);
    const auto curves = wall_curves(f);
    REQUIRE(curves.size() == 4);
    // Fibers over the two base charts.
    CHECK(wall_number(d, curves[0]) == 2);
    CHECK(wall_number(d, curves[1]) == 2);
    // Negative section {2} and positive section {3}.
    CHECK(wall_number(d, curves[2]) == 2 - a);
    CHECK(wall_number(d, curves[3]) == 2 + a);
    const auto nef = is_nef(d);
    CHECK(nef.value == (a <= 2));
    if (a >= 3) {
      CHECK(nef.min.wall.wall_rays == std::vector<int>{2});
      CHECK(nef.min.value == 2 - a);
    }
    CHECK(is_ample(d).value == (a <= 1));
  }
}

TEST_CASE("adjunction oracle agrees with every surface wall number") {
  const Fan fans[] = {p2(),
                      p1xp1(),
                      twisted_base(0),
                      twisted_base(1),
                      twisted_base(2),
                      twisted_base(3),
                      twisted_base(4),
                      twisted_base(5)};
  for (const Fan& f : fans) {
    const auto d = anticanonical(f);
    for (const auto& w : wall_curves(f))
      CHECK(wall_number(d, w) == anticanonical_degree_by_adjunction(f, w));
  }
}

TEST_CASE("subdivided threefold: -K is nef, never ample") {
  const Fan f = delta();
  const auto d = anticanonical(f);
  const auto curves = wall_curves(f);
  REQUIRE(curves.size() == 18);
  const auto nef = is_nef(d);
  CHECK(nef.value);
  // First wall {0,1} separates two cones with equal covectors.
  CHECK(nef.min.index == 0);
  CHECK(nef.min.wall.wall_rays == std::vector<int>{0, 1});
  CHECK(nef.min.value == 0);
  const auto ample = is_ample(d);
  CHECK_FALSE(ample.value);
  CHECK(ample.min.value == 0);
  // Spot value away from the flat walls.
  for (const auto& w : curves)
    if (w.wall_rays == std::vector<int>{0, 4}) CHECK(wall_number(d, w) == 1);
}

TEST_CASE("both apex pairings give the same number") {
  std::mt19937 engine(23);
  const Fan fans[] = {p2(), p1xp1(), twisted_base(3), delta()};
  for (const Fan& f : fans) {
    const auto curves = wall_curves(f);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rat> coeffs;
      for (std::size_t i = 0; i < f.rays.size(); ++i)
        coeffs.emplace_back(static_cast<long>(engine() % 11) - 5);
      const InvariantDivisor d{f, coeffs};
      const auto cd = cartier_data(d);
      for (const auto& w : curves) {
        const auto jump = cd.per_cone[static_cast<std::size_t>(w.left)] -
                          cd.per_cone[static_cast<std::size_t>(w.right)];
        const Rat right = pair(jump, f.rays[static_cast<std::size_t>(w.extra_right)]);
        const auto back = cd.per_cone[static_cast<std::size_t>(w.right)] -
                          cd.per_cone[static_cast<std::size_t>(w.left)];
        const Rat left = pair(back, f.rays[static_cast<std::size_t>(w.extra_left)]);
        REQUIRE(right == left);
        REQUIRE(wall_number(d, w) == right);
      }
    }
  }
}

TEST_CASE("character divisors are numerically trivial") {
  std::mt19937 engine(31);
  const Fan fans[] = {p2(), p1xp1(), twisted_base(4), delta()};
  for (const Fan& f : fans) {
    for (int trial = 0; trial < 10; ++trial) {
      RationalCovector m;
      for (int j = 0; j < f.dim; ++j)
        m.coords.emplace_back(static_cast<long>(engine() % 9) - 4);
      const auto d = character_divisor(f, m);
      for (const auto& w : wall_curves(f)) REQUIRE(wall_number(d, w) == 0);
    }
  }
}

TEST_CASE("nefness equals basepoint-freeness on random integral divisors") {
  std::mt19937 engine(47);
  const Fan fans[] = {p2(), p1xp1(), twisted_base(5), delta()};
  for (const Fan& f : fans) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rat> coeffs;
      for (std::size_t i = 0; i < f.rays.size(); ++i)
        coeffs.emplace_back(static_cast<long>(engine() % 11) - 5);
      const InvariantDivisor d{f, coeffs};
      REQUIRE(is_nef(d).value == is_basepoint_free(d).value);
    }
  }
}

TEST_CASE("wall machinery rejects bad inputs") {
  SUBCASE("fractional divisor") {
    const InvariantDivisor d{p2(), {make_rat(1, 2), 0, 0}};
    CHECK_THROWS_WITH_AS(static_cast<void>(is_nef(d)), doctest::Contains("Cartier"), Error);
  }
  SUBCASE("non-smooth cone") {
    const Fan f = mk(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_WITH_AS(static_cast<void>(is_nef(anticanonical(f))),
                         doctest::Contains("unimodular"), Error);
  }
  SUBCASE("incomplete fan") {
    const Fan f = mk(2, {{1, 0}, {0, 1}}, {{0, 1}});
    CHECK_THROWS_AS(static_cast<void>(is_nef(anticanonical(f))), Error);
  }
  SUBCASE("foreign wall") {
    WallCurve w;
    w.wall_rays = {0};
    w.left = 0;
    w.right = 9;
    w.extra_left = 0;
    w.extra_right = 1;
    CHECK_THROWS_WITH_AS(static_cast<void>(wall_number(anticanonical(p2()), w)),
                         doctest::Contains("belong"), Error);
  }
}
