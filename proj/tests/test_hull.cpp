#include <doctest.h>

#include <random>

#include "lieprobe/errors.hpp"
#include "lieprobe/hull.hpp"
#include "support.hpp"

using namespace lieprobe;

namespace {

RationalPoint pt(std::initializer_list<long> v) {
  RationalPoint p;
  for (long x : v) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("small examples") {
  const std::vector<RationalPoint> line{pt({1}), pt({-1})};
  const HullVerdict a = hull_contains_zero(line);
  CHECK(a.contains_zero);
  CHECK(a.verified);
  CHECK(a.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  const std::vector<RationalPoint> half{pt({1, 1}), pt({1, 0})};
  const HullVerdict b = hull_contains_zero(half);
  CHECK_FALSE(b.contains_zero);
  CHECK(b.verified);
  REQUIRE(b.normal.size() == 2);
  for (const auto& c : b.normal) CHECK(c.is_integer());

  const std::vector<RationalPoint> tri{pt({2, 0}), pt({0, 2}), pt({-1, -1})};
  const HullVerdict c = hull_contains_zero(tri);
  CHECK(c.contains_zero);
  CHECK(c.weights == std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 2)});
}

TEST_CASE("degenerate inputs") {
  CHECK(hull_contains_zero({pt({0, 0})}).contains_zero);
  CHECK_FALSE(hull_contains_zero({pt({3, -1})}).contains_zero);
  CHECK(hull_contains_zero({pt({1, 1}), pt({1, 1}), pt({-2, -2})}).contains_zero);
  // segment passing beside the origin
  CHECK_FALSE(hull_contains_zero({pt({1, 1}), pt({-1, 1}), pt({1, 1})}).contains_zero);
  CHECK_THROWS_AS(hull_contains_zero({}), ValidationError);
  CHECK_THROWS_AS(hull_contains_zero({pt({1}), pt({1, 2})}), ValidationError);
}

TEST_CASE("tampered certificates are rejected") {
  const std::vector<RationalPoint> tri{pt({2, 0}), pt({0, 2}), pt({-1, -1})};
  HullVerdict v = hull_contains_zero(tri);
  v.weights[0] = Rational(1, 3);
  CHECK_FALSE(verify_certificate(tri, v));
  const std::vector<RationalPoint> half{pt({1, 1}), pt({1, 0})};
  HullVerdict w = hull_contains_zero(half);
  w.normal = {Rational(0), Rational(1)};
  CHECK_FALSE(verify_certificate(half, w));
}

TEST_CASE("verdicts match the enumeration oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 3), count(1, 12);
  int inside = 0, outside = 0;
  for (int t = 0; t < 300; ++t) {
    const auto pts = testing::random_points(rng, dim(rng), count(rng), t % 2 == 1);
    const HullVerdict v = hull_contains_zero(pts);
    CHECK(v.verified);
    CHECK(verify_certificate(pts, v));
    CHECK(v.contains_zero == testing::hull_oracle(pts));
    (v.contains_zero ? inside : outside)++;
  }
  CHECK(inside > 30);
  CHECK(outside > 30);
}

TEST_CASE("higher dimensions certify") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const auto pts = testing::random_points(rng, 5, 20, t % 3 == 0);
    const HullVerdict v = hull_contains_zero(pts);
    CHECK(verify_certificate(pts, v));
  }
}
