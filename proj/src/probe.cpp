#include "lieprobe/probe.hpp"

#include "lieprobe/errors.hpp"

namespace lieprobe {

std::string verdict_name(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::not_applicable: return "not applicable";
    case ProbeVerdict::conjecture_consistent: return "conjecture-consistent";
    case ProbeVerdict::counterexample_candidate: return "counterexample candidate";
  }
  return "unknown";
}

ProbeReport conjecture_probe(const FiniteTypeFunction& f, unsigned pmax) {
  if (pmax == 0) throw ValidationError("pmax must be positive");
  const AdmissibleFunction a = tilde(f);
  ProbeReport r{f.group(), f.rank(), pmax, {}, spectrum(a), std::nullopt, ProbeVerdict::not_applicable, ""};

  AdmissibleFunction power = a;
  int first_nonzero = 0;
  for (unsigned p = 1; p <= pmax; ++p) {
    if (p > 1) power = power * a;
    r.moments.push_back(integrate(power));
    if (first_nonzero == 0 && !r.moments.back().is_zero()) first_nonzero = static_cast<int>(p);
  }
  if (!r.spectrum.empty()) r.hull = hull_contains_zero({r.spectrum.begin(), r.spectrum.end()});

  if (first_nonzero != 0) {
    r.verdict = ProbeVerdict::not_applicable;
    r.summary = "hypothesis not satisfied: moment P=" + std::to_string(first_nonzero) + " is nonzero";
  } else if (!r.hull || !r.hull->contains_zero) {
    r.verdict = ProbeVerdict::conjecture_consistent;
    r.summary = r.hull ? "all moments vanish and 0 lies outside the convex hull of the spectrum"
                       : "zero function: all moments vanish and the spectrum is empty";
  } else {
    r.verdict = ProbeVerdict::counterexample_candidate;
    r.summary = "all moments up to P=" + std::to_string(pmax) +
                " vanish but 0 lies in the convex hull of the spectrum";
  }
  return r;
}

}  // namespace lieprobe
