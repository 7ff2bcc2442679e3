#include "lieprobe/serialize.hpp"

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

template <class F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json xpoly_json(const XPolynomial& p, int digits) {
  Json out = Json::array();
  for (const auto& [key, c] : p) out.push_back({{"x", key}, {"c", exact_json(c, digits)}});
  return out;
}

}  // namespace

Json rational_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational string such as \"1/2\"");
  return Rational::parse(j.get<std::string>());
}

Json cyclotomic_json(const Cyclotomic& c) {
  Json out = Json::array();
  for (const auto& [r, coeff] : c.terms()) out.push_back({rational_json(r), rational_json(coeff)});
  return out;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  return guarded("cyclotomic", [&] {
    if (!j.is_array()) throw ParseError("cyclotomic: expected a list of [exponent, coefficient]");
    std::map<Rational, Rational> terms;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 2) throw ParseError("cyclotomic: expected [exponent, coefficient]");
      terms[rational_from_json(t[0]).frac()] += rational_from_json(t[1]);
    }
    return Cyclotomic::from_terms(terms);
  });
}

Json exact_json(const ExactScalar& x, int digits) {
  Json exact = Json::array();
  for (const auto& [p, c] : x.terms()) exact.push_back({p, cyclotomic_json(c)});
  const ComplexDecimal d = x.to_complex(digits);
  return {{"exact", exact}, {"text", x.str()}, {"re", d.re}, {"im", d.im}, {"value", complex_json(d.value)}};
}

ExactScalar exact_from_json(const Json& j) {
  return guarded("exact scalar", [&] {
    const Json& list = j.is_object() ? j.at("exact") : j;
    if (!list.is_array()) throw ParseError("exact scalar: expected a list of [pi_power, cyclotomic]");
    ExactScalar out;
    for (const auto& t : list) {
      if (!t.is_array() || t.size() != 2) throw ParseError("exact scalar: expected [pi_power, cyclotomic]");
      out += ExactScalar::pi_power(t[0].get<int>(), cyclotomic_from_json(t[1]));
    }
    return out;
  });
}

Json matrix_json(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(complex_json(m(i, k)));
  return {{"n", m.rows()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const int n = j.at("n").get<int>();
    const Json& e = j.at("entries");
    if (n < 1 || e.size() != static_cast<std::size_t>(n * n))
      throw ValidationError("matrix: expected n*n entries");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Json& v = e[static_cast<std::size_t>(i * n + k)];
        m(i, k) = v.is_array() ? Complex(v.at(0).get<double>(), v.at(1).get<double>()) : Complex(v.get<double>(), 0);
      }
    return m;
  });
}

Json angles_json(const EulerAngles& a) {
  return {{"group", group_name(a.group)}, {"n", a.n}, {"phi", a.phi}, {"psi", a.psi}, {"omega", a.omega}};
}

EulerAngles angles_from_json(const Json& j) {
  return guarded("angles", [&] {
    EulerAngles a = EulerAngles::zeros(parse_group(j.at("group").get<std::string>()), j.at("n").get<int>());
    auto read = [&](const char* key, std::vector<double>& v) {
      if (!j.contains(key)) return;
      const auto vals = j.at(key).get<std::vector<double>>();
      if (vals.size() != v.size()) throw ValidationError(std::string("angles: wrong number of ") + key + " values");
      v = vals;
    };
    read("phi", a.phi);
    read("psi", a.psi);
    read("omega", a.omega);
    return a;
  });
}

Json admissible_json(const AdmissibleFunction& f, int digits) {
  Json terms = Json::array();
  for (const auto& [m, poly] : f.terms()) {
    Json mj = Json::array();
    for (const auto& q : m) mj.push_back(rational_json(q));
    terms.push_back({{"m", mj}, {"c", xpoly_json(poly, digits)}});
  }
  return {{"group", group_name(f.group())}, {"n", f.rank()},   {"x_vars", f.x_vars()},
          {"z_vars", f.z_vars()},           {"terms", terms}};
}

AdmissibleFunction admissible_from_json(const Json& j) {
  return guarded("admissible function", [&] {
    AdmissibleFunction f(parse_group(j.at("group").get<std::string>()), j.at("n").get<int>());
    if (j.contains("x_vars") && j.at("x_vars").get<int>() != f.x_vars())
      throw ValidationError("admissible function: x_vars does not match the group");
    if (j.contains("z_vars") && j.at("z_vars").get<int>() != f.z_vars())
      throw ValidationError("admissible function: z_vars does not match the group");
    for (const auto& t : j.at("terms")) {
      ZExponent m;
      for (const auto& q : t.at("m")) m.push_back(rational_from_json(q));
      for (const auto& c : t.at("c")) f.add_term(m, c.at("x").get<XKey>(), exact_from_json(c.at("c")));
    }
    return f;
  });
}

Json spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& m : s) {
    Json mj = Json::array();
    for (const auto& q : m) mj.push_back(rational_json(q));
    out.push_back(mj);
  }
  return out;
}

std::vector<RationalPoint> points_from_json(const Json& j) {
  return guarded("points", [&] {
    const Json& list = j.is_object() ? j.at("points") : j;
    if (!list.is_array()) throw ParseError("points: expected a list of rational vectors");
    std::vector<RationalPoint> pts;
    for (const auto& p : list) {
      RationalPoint v;
      for (const auto& q : p) v.push_back(rational_from_json(q));
      pts.push_back(std::move(v));
    }
    return pts;
  });
}

Json hull_json(const HullVerdict& v) {
  Json out = {{"contains_zero", v.contains_zero}, {"verified", v.verified}};
  Json cert = Json::array();
  for (const auto& q : v.contains_zero ? v.weights : v.normal) cert.push_back(rational_json(q));
  out[v.contains_zero ? "weights" : "normal"] = cert;
  return out;
}

Json normalization_json(const NormalizationReport& r, int digits) {
  Json levels = Json::array();
  for (const auto& l : r.levels)
    levels.push_back({{"level", l.level},
                      {"domain_integral", exact_json(l.domain_integral, digits)},
                      {"computed", exact_json(l.computed, digits)},
                      {"closed_form", exact_json(l.closed_form, digits)},
                      {"reference", exact_json(l.reference, digits)},
                      {"ratio_to_reference", exact_json(l.ratio, digits)}});
  return {{"group", group_name(r.group)},
          {"n", r.n},
          {"levels", levels},
          {"computed_total", exact_json(r.computed_total, digits)},
          {"domain_integral_total", exact_json(r.domain_integral_total, digits)},
          {"reference_total", exact_json(r.reference_total, digits)},
          {"ratio_to_reference", exact_json(r.ratio_total, digits)},
          {"exact_identity", r.exact_identity}};
}

Json jacobian_json(const JacobianJ& j, int digits) {
  Json powers = Json::array();
  for (const auto& [a, b] : j.powers) powers.push_back({{"x_power", a}, {"sqrt_power", b}});
  return {{"group", group_name(j.group)},
          {"n", j.n},
          {"constant", exact_json(j.constant, digits)},
          {"powers", powers},
          {"reference_constant", exact_json(j.reference_constant, digits)},
          {"ratio_to_reference", exact_json(j.ratio, digits)}};
}

Json probe_json(const ProbeReport& r, int digits) {
  Json moments = Json::array();
  for (std::size_t p = 0; p < r.moments.size(); ++p) {
    Json m = exact_json(r.moments[p], digits);
    m["P"] = p + 1;
    moments.push_back(m);
  }
  return {{"group", group_name(r.group)},
          {"n", r.n},
          {"pmax", r.pmax},
          {"moments", moments},
          {"spectrum", spectrum_json(r.spectrum)},
          {"hull", r.hull ? hull_json(*r.hull) : Json(nullptr)},
          {"verdict", verdict_name(r.verdict)},
          {"summary", r.summary}};
}

}  // namespace lieprobe
