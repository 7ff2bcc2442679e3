#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieprobe/haar.hpp"

namespace lieprobe {

struct CheckResult {
  std::string suite;
  std::string tag;     // identity that was checked, e.g. "euler/round-trip-matrix"
  bool passed = false;
  std::string detail;  // worst residual or counterexample
};

struct VerifyOptions {
  int n = 3;                  // largest rank exercised
  std::uint64_t seed = 0;
  std::size_t samples = 20000;
};

/// exact, generators, euler, haar, finite-type, abelian.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all".
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt);

/// Angles drawn uniformly from the interior of the nominal box, keeping a
/// relative margin from every edge.
EulerAngles random_interior(Group g, int n, RngStream& rng, double margin = 0.02);

/// Haar-random matrix from the QR decomposition of a Gaussian matrix,
/// independent of the Euler parametrization.
Matrix haar_random_matrix(Group g, int n, RngStream& rng);

}  // namespace lieprobe
