#pragma once

#include <vector>

#include "lieprobe/rational.hpp"

namespace lieprobe {

using RationalPoint = std::vector<Rational>;

/// Outcome of the exact test 0 in conv(points).
///
/// Inside: `weights` are convex coefficients with sum_j w_j m_j = 0.
/// Outside: `normal` is an integer vector with normal . m_j > 0 for all j.
struct HullVerdict {
  bool contains_zero = false;
  std::vector<Rational> weights;
  std::vector<Rational> normal;
  bool verified = false;
};

/// Phase-one simplex with exact rational pivoting and Bland's rule. The
/// certificate is re-verified before returning.
HullVerdict hull_contains_zero(const std::vector<RationalPoint>& points);

/// Checks the certificate exactly against the points.
bool verify_certificate(const std::vector<RationalPoint>& points, const HullVerdict& v);

}  // namespace lieprobe
