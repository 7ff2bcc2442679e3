#include <doctest.h>

#include "lieprobe/entry_polynomial.hpp"
#include "lieprobe/errors.hpp"
#include "lieprobe/probe.hpp"

using namespace lieprobe;

TEST_CASE("u12 on SU(2) is conjecture-consistent") {
  const auto f = expand(EntryPolynomial::parse("u12"), Group::SU, 2);
  const ProbeReport r = conjecture_probe(f, 6);
  REQUIRE(r.moments.size() == 6);
  for (const auto& m : r.moments) CHECK(m.is_zero());
  REQUIRE(r.hull.has_value());
  CHECK_FALSE(r.hull->contains_zero);
  CHECK(r.hull->verified);
  CHECK(r.verdict == ProbeVerdict::conjecture_consistent);
  CHECK(verdict_name(r.verdict) == "conjecture-consistent");
}

TEST_CASE("constant one does not satisfy the hypothesis") {
  const ProbeReport r = conjecture_probe(FiniteTypeFunction::constant(Group::SU, 3, ExactScalar(1)), 3);
  for (const auto& m : r.moments) CHECK(m == ExactScalar(1));
  CHECK(r.verdict == ProbeVerdict::not_applicable);
  CHECK(verdict_name(r.verdict) == "not applicable");
  CHECK(r.summary.find("hypothesis not satisfied") != std::string::npos);
}

TEST_CASE("centered |u11|^2 on SU(2)") {
  // |u11|^2 is uniform on [0, 1], so the moments are those of t - 1/2
  const auto f = expand(EntryPolynomial::parse("u11*conj(u11) - 1/2"), Group::SU, 2);
  const ProbeReport r = conjecture_probe(f, 4);
  CHECK(r.moments[0].is_zero());
  CHECK(r.moments[1] == ExactScalar(Rational(1, 12)));
  CHECK(r.moments[2].is_zero());
  CHECK(r.moments[3] == ExactScalar(Rational(1, 80)));
  CHECK(r.verdict == ProbeVerdict::not_applicable);
}

TEST_CASE("zero function and guards") {
  const ProbeReport r = conjecture_probe(FiniteTypeFunction(Group::SO, 3), 2);
  CHECK_FALSE(r.hull.has_value());
  CHECK(r.spectrum.empty());
  CHECK(r.verdict == ProbeVerdict::conjecture_consistent);
  CHECK_THROWS_AS(conjecture_probe(FiniteTypeFunction(Group::SO, 3), 0), ValidationError);
}

TEST_CASE("SO(3) off-diagonal entry") {
  // u12 on SO(3) has zero odd moments but a nonzero second moment
  const auto f = expand(EntryPolynomial::parse("u12"), Group::SO, 3);
  const ProbeReport r = conjecture_probe(f, 2);
  CHECK(r.moments[0].is_zero());
  CHECK(r.moments[1] == ExactScalar(Rational(1, 3)));
  CHECK(r.verdict == ProbeVerdict::not_applicable);
}
