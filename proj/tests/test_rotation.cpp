#include <variant>

#include "doctest.h"
#include "oracles.hpp"
#include "plmonster/rotation.hpp"
#include "plmonster/stein_thompson.hpp"

using namespace plm;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

const PLCircleMap g0 = irrational_candidate_g0();
const PLLineMap g0bar = g0_lift();
const PLLineMap z = center_generator_z();

}  // namespace

TEST_CASE("translation bracket examples") {
  for (std::int64_t n : {1, 2, 7, 50}) {
    CHECK(translation_bracket(z, n) == DisplacementInterval{R(1), R(1)});
  }
  CHECK(translation_bracket(g0bar, 1) == DisplacementInterval{R(1, 2), R(3, 4)});
  CHECK(translation_bracket(lift(rotation_map(R(1, 3)), 0), 2) ==
        DisplacementInterval{R(1, 3), R(1, 3)});
  CHECK_THROWS_AS(translation_bracket(z, 0), std::invalid_argument);
}

TEST_CASE("periodic witness examples") {
  auto half = rational_rot_test(rotation_map(R(1, 2)), 2);
  REQUIRE(half);
  CHECK(half->p == 1);
  CHECK(power(lift(rotation_map(R(1, 2)), 0), 2).evaluate(half->point) == half->point + R(1));
  CHECK_FALSE(rational_rot_test(g0, 1));
  auto id = rational_rot_test(PLCircleMap(), 1);
  REQUIRE(id);
  CHECK(id->p == 0);
}

TEST_CASE("rotation number of rigid and fixed-point maps") {
  auto r = rotation_number(rotation_map(R(2, 5)), 10, 10);
  REQUIRE(std::holds_alternative<RationalRotation>(r));
  CHECK(std::get<RationalRotation>(r).value() == R(2, 5));
  CHECK(std::get<RationalRotation>(r).q == 5);

  // fixes 0 and 1/2
  PLCircleMap f = PLCircleMap::from_points({R(0), R(1, 4), R(1, 2)}, {R(0), R(1, 8), R(1, 2)});
  auto fr = rotation_number(f, 1, 1);
  REQUIRE(std::holds_alternative<RationalRotation>(fr));
  CHECK(std::get<RationalRotation>(fr).value() == R(0));
  CHECK(f.evaluate(std::get<RationalRotation>(fr).witness) == std::get<RationalRotation>(fr).witness);

  CHECK_THROWS_AS(rotation_number(g0, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(rotation_number(g0, 20, 10), std::invalid_argument);
}

TEST_CASE("g0 is certified nonrational with a bracket around log_3 2") {
  auto r = rotation_number(g0, 50, 200);
  REQUIRE(std::holds_alternative<CertifiedNonrational>(r));
  const auto& c = std::get<CertifiedNonrational>(r);
  CHECK(c.max_denominator == 50);
  CHECK(c.bracket.width() <= R(1, 200));
  CHECK(c.bracket.contains(Rational::from_double(0.6309297535714574)));
  CHECK(oracle::brackets_log3_2(c.bracket.lo, c.bracket.hi));
  // Orbit average of the lift, an independent estimate of the same limit.
  Rational x = 0;
  for (int i = 0; i < 200; ++i) x = g0bar.evaluate(x);
  CHECK(c.bracket.contains(x / R(200)));
  // The bracket at depth 200 cannot contain a fraction of denominator <= 50.
  for (std::int64_t q = 1; q <= 50; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) CHECK_FALSE(c.bracket.contains(R(p, q)));
  }
}

TEST_CASE("log_3 2 oracle rejects wrong brackets") {
  CHECK_FALSE(oracle::brackets_log3_2(R(1, 2), R(5, 8)));
  CHECK_FALSE(oracle::brackets_log3_2(R(16, 25), R(2, 3)));
  CHECK(oracle::brackets_log3_2(R(5, 8), R(2, 3)));
}

TEST_CASE("conjugated rotations are detected exactly") {
  Rng rng(5);
  GroupDescriptor d = stein_thompson_23();
  for (int i = 0; i < 100; ++i) {
    std::int64_t q = rng.range(1, 40), p = rng.range(0, q - 1);
    PLCircleMap h = random_member(d, rng);
    PLCircleMap f = compose(compose(invert(h), rotation_map(R(p, q))), h);
    auto r = rotation_number(f, 40, 40);
    REQUIRE(std::holds_alternative<RationalRotation>(r));
    const auto& rr = std::get<RationalRotation>(r);
    CHECK(rr.value() == R(p, q));
    CHECK(power(lift(f, 0), rr.q).evaluate(rr.witness) == rr.witness + R(rr.p));
  }
}

TEST_CASE("is_power_of examples") {
  CHECK(is_power_of(power(g0bar, 3), g0bar) == std::optional<std::int64_t>(3));
  CHECK(is_power_of(power(g0bar, -7), g0bar) == std::optional<std::int64_t>(-7));
  CHECK_FALSE(is_power_of(z, g0bar));
  CHECK(is_power_of(PLLineMap(), g0bar) == std::optional<std::int64_t>(0));
  CHECK_FALSE(is_power_of(compose(g0bar, z), g0bar));
  PLCircleMap fixes_zero =
      PLCircleMap::from_points({R(0), R(1, 4), R(1, 2)}, {R(0), R(1, 8), R(1, 2)});
  CHECK_THROWS_AS(is_power_of(z, lift(fixes_zero, 0)), ZeroBracketError);
  CHECK_THROWS_AS(is_power_of(z, PLLineMap()), ZeroBracketError);
}

TEST_CASE("is_power_of recovers planted powers") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    std::int64_t k = rng.range(-20, 20);
    CHECK(is_power_of(power(g0bar, k), g0bar) == std::optional<std::int64_t>(k));
  }
}

TEST_CASE("is_translation examples") {
  CHECK(is_translation(z) == std::optional<std::int64_t>(1));
  CHECK(is_translation(power(z, -4)) == std::optional<std::int64_t>(-4));
  CHECK_FALSE(is_translation(g0bar));
  CHECK_FALSE(is_translation(lift(rotation_map(R(1, 2)), 0)));
}
