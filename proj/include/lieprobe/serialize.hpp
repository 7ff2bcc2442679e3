#pragma once

#include <json.hpp>

#include "lieprobe/admissible.hpp"
#include "lieprobe/haar.hpp"
#include "lieprobe/hull.hpp"
#include "lieprobe/probe.hpp"

namespace lieprobe {

using Json = nlohmann::ordered_json;

/// "p/q" (or "p" for integers).
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// [[exponent, coefficient], ...] meaning sum of coefficient * e^{2 pi i exponent}.
Json cyclotomic_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

/// {"exact": [[pi_power, cyclotomic], ...], "re": ..., "im": ..., "value": [re, im]}
/// with decimal strings correct to `digits` places.
Json exact_json(const ExactScalar& x, int digits);
/// Reads the "exact" member (or a bare exact list).
ExactScalar exact_from_json(const Json& j);

/// {"n": n, "entries": [[re, im], ...]} row-major.
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json angles_json(const EulerAngles& a);
EulerAngles angles_from_json(const Json& j);

Json admissible_json(const AdmissibleFunction& f, int digits);
AdmissibleFunction admissible_from_json(const Json& j);

Json spectrum_json(const Spectrum& s);
std::vector<RationalPoint> points_from_json(const Json& j);
Json hull_json(const HullVerdict& v);
Json normalization_json(const NormalizationReport& r, int digits);
Json jacobian_json(const JacobianJ& j, int digits);
Json probe_json(const ProbeReport& r, int digits);

}  // namespace lieprobe
