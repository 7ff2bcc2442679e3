#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieprobe/admissible.hpp"
#include "lieprobe/hull.hpp"

namespace lieprobe {

enum class ProbeVerdict {
  /// Some moment is nonzero, so the vanishing-moments hypothesis fails.
  not_applicable,
  /// All moments vanish and 0 lies outside the hull of the spectrum.
  conjecture_consistent,
  /// All moments vanish yet 0 lies in the hull of the spectrum.
  counterexample_candidate,
};

std::string verdict_name(ProbeVerdict v);

struct ProbeReport {
  Group group;
  int n;
  unsigned pmax;
  std::vector<ExactScalar> moments;  // P = 1..pmax
  Spectrum spectrum;
  std::optional<HullVerdict> hull;   // absent for the zero function
  ProbeVerdict verdict;
  std::string summary;
};

/// Exact moments of tilde(f) up to pmax, the spectrum and the hull verdict.
ProbeReport conjecture_probe(const FiniteTypeFunction& f, unsigned pmax);

}  // namespace lieprobe
