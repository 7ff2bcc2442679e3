#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lieprobe/admissible.hpp"
#include "lieprobe/cli.hpp"
#include "lieprobe/entry_polynomial.hpp"
#include "lieprobe/generators.hpp"
#include "lieprobe/haar.hpp"
#include "lieprobe/hull.hpp"
#include "lieprobe/probe.hpp"
#include "lieprobe/serialize.hpp"
#include "lieprobe/verify.hpp"
#include "support.hpp"

using namespace lieprobe;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

bool run_criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) o.fail("runtime " + fmt(secs) + " s over the limit");
  std::printf("%s [%d] %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs, limit_s,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

double angle_error(const EulerAngles& a, const EulerAngles& b) {
  const auto x = a.flat(), y = b.flat();
  double e = 0;
  for (std::size_t i = 0; i < x.size(); ++i) e = std::max(e, std::abs(x[i] - y[i]));
  return e;
}

Outcome normalization_criterion() {
  Outcome o;
  std::string ratios;
  for (auto [g, top] : {std::pair{Group::SU, 4}, std::pair{Group::SO, 5}})
    for (int n = 2; n <= top; ++n) {
      const NormalizationReport r = normalization(g, n);
      if (!(r.computed_total * r.domain_integral_total == ExactScalar(1)) || !r.exact_identity)
        o.fail(group_name(g) + "(" + std::to_string(n) + ") identity is not exact");
      const ExactScalar want = g == Group::SU ? ExactScalar(Rational(1L << (n - 1))) : ExactScalar(1);
      if (!(r.ratio_total == want)) o.fail(group_name(g) + "(" + std::to_string(n) + ") unexpected ratio");
      std::ostringstream out, err;
      if (cli::run({"constants", "--group", group_name(g), "--n", std::to_string(n)}, out, err) != 0)
        o.fail("constants command failed");
      const ExactScalar reported =
          exact_from_json(Json::parse(out.str()).at("normalization").at("ratio_to_reference"));
      if (!(reported == r.ratio_total)) o.fail("constants command reports a different ratio");
      if (n == top) ratios += group_name(g) + "(" + std::to_string(n) + ") ratio " + r.ratio_total.str() + "; ";
    }
  if (o.ok) o.detail = ratios + "SU ratio is 2^(N-1), SO ratio is 1";
  return o;
}

Outcome parametrization_criterion() {
  Outcome o;
  RngStream rng(2024, 1);
  double unit = 0, angle_rt = 0, matrix_rt = 0;
  for (auto g : {Group::SU, Group::SO})
    for (int n = 2; n <= 4; ++n)
      for (int t = 0; t < 1000; ++t) {
        const EulerAngles a = random_interior(g, n, rng);
        const Matrix u = forward(a);
        unit = std::max({unit, unitarity_defect(u), determinant_defect(u)});
        const EulerAngles back = g == Group::SU ? su_inverse(u) : so_inverse(u);
        angle_rt = std::max(angle_rt, angle_error(a, back));
        matrix_rt = std::max(matrix_rt, (forward(back) - u).cwiseAbs().maxCoeff());
      }
  if (unit >= 1e-10) o.fail("unitarity/determinant defect " + fmt(unit));
  if (angle_rt >= 1e-9) o.fail("angle round trip " + fmt(angle_rt));
  if (matrix_rt >= 1e-9) o.fail("matrix round trip " + fmt(matrix_rt));
  if (o.ok) o.detail = "defect " + fmt(unit) + ", angle round trip " + fmt(angle_rt) + ", matrix round trip " + fmt(matrix_rt);
  return o;
}

Outcome identities_criterion() {
  Outcome o;
  RngStream rng(2024, 2);
  double worst = 0;
  for (int n = 2; n <= 4; ++n) {
    for (ShiftKind k : {ShiftKind::left_d2, ShiftKind::right_dn, ShiftKind::mid_su2, ShiftKind::dn_full,
                        ShiftKind::dn1_full}) {
      if (k == ShiftKind::dn1_full && n == 2) continue;  // needs a level below the top pair
      for (int t = 0; t < 100; ++t)
        worst = std::max(worst, shift_identity_residual(k, n, 2 * kPi * rng.uniform(), random_interior(Group::SU, n, rng)));
    }
    // the adjoint relations need 2 <= q < n (and q < p < n for relations 3 and 4)
    for (int rel = 1; rel <= 4; ++rel)
      for (int q = 2; q < n; ++q)
        for (int p = rel <= 2 ? 0 : q + 1; p < (rel <= 2 ? 1 : n); ++p)
          for (int t = 0; t < 100; ++t)
            worst = std::max(worst, ad_relation_residual(rel, p, q, n, 2 * kPi * rng.uniform(), 2 * kPi * rng.uniform()));
  }
  if (worst >= 1e-12) o.fail("max residual " + fmt(worst));
  else o.detail = "max residual " + fmt(worst);
  return o;
}

Outcome haar_criterion() {
  Outcome o;
  std::string detail;
  std::uint64_t seed = 40;
  for (auto [g, n] : {std::pair{Group::SU, 2}, std::pair{Group::SU, 3}, std::pair{Group::SO, 3}}) {
    const auto r = mc_integrate(
        [](const EulerAngles& a, std::span<Complex> v) {
          const Complex u11 = forward(a)(0, 0);
          v[0] = u11;
          v[1] = std::norm(u11);
        },
        2, g, n, 100000, seed++);
    const double z0 = std::abs(r.estimate[0]) / r.stderr_[0];
    const double z1 = std::abs(r.estimate[1] - 1.0 / n) / r.stderr_[1];
    if (z0 >= 4 || z1 >= 4) o.fail(group_name(g) + "(" + std::to_string(n) + ") deviates by " + fmt(std::max(z0, z1)) + " sigma");
    detail += group_name(g) + "(" + std::to_string(n) + ") " + fmt(std::max(z0, z1)) + " sigma; ";
  }
  const Complex q = quad_integrate([](const EulerAngles& a) { return Complex(std::pow(std::norm(forward(a)(0, 0)), 2)); },
                                   Group::SU, 2, 16);
  const double err = std::abs(q - 1.0 / 3);
  if (err >= 1e-6) o.fail("SU(2) quadrature error " + fmt(err));
  if (o.ok) o.detail = detail + "quadrature error " + fmt(err);
  return o;
}

Outcome density_criterion() {
  Outcome o;
  RngStream rng(2024, 5);
  std::string detail;
  for (auto [g, n] : {std::pair{Group::SU, 2}, std::pair{Group::SU, 3}, std::pair{Group::SO, 3}}) {
    double lo = 1e300, hi = 0;
    for (int t = 0; t < 50; ++t) {
      const EulerAngles a = random_interior(g, n, rng, 0.05);
      const double r = density_from_jacobian(a) / density(a);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const double spread = (hi - lo) / lo;
    if (spread >= 1e-4) o.fail(group_name(g) + "(" + std::to_string(n) + ") spread " + fmt(spread));
    detail += group_name(g) + "(" + std::to_string(n) + ") spread " + fmt(spread) + "; ";
  }
  if (o.ok) o.detail = detail;
  return o;
}

Outcome moment_criterion() {
  Outcome o;
  std::mt19937_64 gen(2024);
  double worst = 0;
  std::uint64_t seed = 1000;
  for (auto [g, n] : {std::pair{Group::SU, 2}, std::pair{Group::SU, 3}, std::pair{Group::SO, 3}})
    for (int t = 0; t < 50; ++t) {
      const FiniteTypeFunction f = testing::random_function(g, n, gen, 1 + t % 4);
      const CompiledFunction cf(f);
      const AdmissibleFunction a = tilde(f);
      const auto mc = mc_integrate(
          [&](const EulerAngles& ang, std::span<Complex> v) {
            v[0] = cf(ang);
            v[1] = v[0] * v[0];
            v[2] = v[1] * v[0];
          },
          3, g, n, 100000, seed++);
      for (unsigned p = 1; p <= 3; ++p) {
        const double d = std::abs(exact_moment(a, p).to_double() - mc.estimate[p - 1]);
        // floor for integrands with no sampling variance (constants)
        const double bound = 5 * mc.stderr_[p - 1] + 1e-12;
        worst = std::max(worst, d / bound * 5);
        if (d >= bound)
          o.fail(group_name(g) + "(" + std::to_string(n) + ") function " + std::to_string(t) + ", P=" +
                 std::to_string(p) + ": " + fmt(d / mc.stderr_[p - 1]) + " sigma");
      }
    }
  if (o.ok) o.detail = "450 comparisons, worst " + fmt(worst) + " sigma";
  return o;
}

Outcome hull_criterion() {
  Outcome o;
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 5), count(1, 20);
  int compared = 0, inside = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = dim(gen);
    const auto pts = testing::random_points(gen, d, count(gen), t % 2 == 1);
    const HullVerdict v = hull_contains_zero(pts);
    if (!verify_certificate(pts, v)) o.fail("certificate " + std::to_string(t) + " does not verify");
    inside += v.contains_zero ? 1 : 0;
    if (d <= 3) {
      ++compared;
      if (v.contains_zero != testing::hull_oracle(pts)) o.fail("verdict " + std::to_string(t) + " disagrees with the oracle");
    }
  }
  if (o.ok)
    o.detail = "100 certificates verified (" + std::to_string(inside) + " inside), " + std::to_string(compared) +
               " verdicts match enumeration";
  return o;
}

Outcome probe_criterion() {
  Outcome o;
  const ProbeReport r = conjecture_probe(expand(EntryPolynomial::parse("u12"), Group::SU, 2), 6);
  for (const auto& m : r.moments)
    if (!m.is_zero()) o.fail("u12 has a nonzero moment");
  if (!r.hull || r.hull->contains_zero) o.fail("0 should lie outside the hull for u12");
  if (r.verdict != ProbeVerdict::conjecture_consistent) o.fail("u12 verdict is " + verdict_name(r.verdict));
  const ProbeReport one = conjecture_probe(FiniteTypeFunction::constant(Group::SU, 2, ExactScalar(1)), 6);
  if (one.verdict != ProbeVerdict::not_applicable || one.summary.find("hypothesis not satisfied") == std::string::npos)
    o.fail("constant function is not reported as hypothesis not satisfied");
  if (o.ok) o.detail = "u12: " + verdict_name(r.verdict) + "; constant: " + one.summary;
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto c = [&](int id, const char* title, double limit, const std::function<Outcome()>& body) {
    if (!run_criterion(id, title, limit, body)) ++failed;
  };
  c(1, "exact normalization identities", 10, normalization_criterion);
  c(2, "parametrization unitarity and round trips", 30, parametrization_criterion);
  c(3, "shift identities and adjoint-action relations", 30, identities_criterion);
  c(4, "Haar Monte Carlo and quadrature", 120, haar_criterion);
  c(5, "density from the parametrization Jacobian", 60, density_criterion);
  c(6, "exact abelian moments equal group integrals", 600, moment_criterion);
  c(7, "hull certificates and enumeration oracle", 60, hull_criterion);
  c(8, "conjecture probe sanity", 10, probe_criterion);
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
