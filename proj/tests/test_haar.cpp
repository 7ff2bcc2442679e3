#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lieprobe/errors.hpp"
#include "lieprobe/haar.hpp"

using namespace lieprobe;

namespace {

constexpr double kPi = std::numbers::pi;

ExactScalar pi_over(long num, long den, int p) { return ExactScalar::pi_power(p, Cyclotomic(Rational(num, den))); }

}  // namespace

TEST_CASE("half-integer gamma and beta") {
  CHECK(gamma_half(2).exact() == ExactScalar(1));
  CHECK(gamma_half(8).exact() == ExactScalar(6));
  CHECK(gamma_half(1).q == Rational(1));
  CHECK(gamma_half(1).sqrt_pi_power == 1);
  CHECK(gamma_half(5).q == Rational(3, 4));
  CHECK(beta_half(1, 1).exact() == ExactScalar::pi_power(1));
  CHECK(sin_cos_integral(1, 1) == ExactScalar(Rational(1, 2)));
  CHECK(sin_cos_integral(0, 0) == pi_over(1, 2, 1));
  CHECK(sin_cos_integral(2, 0) == pi_over(1, 4, 1));
  for (int k = 0; k < 8; ++k) CHECK(sin_cos_integral(k, 1) == ExactScalar(Rational(1, k + 1)));
}

TEST_CASE("density values") {
  auto su2 = EulerAngles::from_flat(Group::SU, 2, {0.3, kPi / 4, 0.2});
  CHECK(density(su2) == doctest::Approx(0.5).epsilon(1e-15));
  auto so3 = EulerAngles::zeros(Group::SO, 3);
  so3.phi[1] = kPi / 2;
  CHECK(density(so3) == doctest::Approx(1.0));
  CHECK(density(EulerAngles::zeros(Group::SU, 3)) == 0.0);
  CHECK(density(EulerAngles::zeros(Group::SO, 3)) == 0.0);
}

TEST_CASE("normalization constants") {
  const auto so2 = normalization(Group::SO, 2);
  CHECK(so2.levels[0].computed == pi_over(1, 2, -1));
  CHECK(so2.levels[0].ratio == ExactScalar(1));
  const auto so3 = normalization(Group::SO, 3);
  CHECK(so3.levels[0].computed == pi_over(1, 4, -1));
  CHECK(so3.levels[0].ratio == ExactScalar(1));
  const auto su2 = normalization(Group::SU, 2);
  CHECK(su2.levels[0].computed == pi_over(1, 1, -2));
  CHECK(su2.levels[0].reference == pi_over(1, 2, -2));
  CHECK(su2.ratio_total == ExactScalar(2));
  for (int n = 2; n <= 4; ++n) {
    const auto r = normalization(Group::SU, n);
    CHECK(r.exact_identity);
    CHECK(r.ratio_total == ExactScalar(1L << (n - 1)));
  }
  for (int n = 2; n <= 5; ++n) {
    const auto r = normalization(Group::SO, n);
    CHECK(r.exact_identity);
    CHECK(r.ratio_total == ExactScalar(1));
  }
  CHECK_THROWS_AS(normalization(Group::SU, 40), ResourceGuardError);
}

TEST_CASE("samplers reproduce Beta moments") {
  RngStream rng(1);
  const int draws = 100000;
  for (int n : {2, 3}) {
    double acc = 0, acc2 = 0;
    for (int t = 0; t < draws; ++t) {
      const auto a = sample(Group::SU, n, rng);
      const double s = std::pow(std::sin(a.psi[static_cast<std::size_t>(n - 2)]), 2);
      acc += s;
      acc2 += s * s;
    }
    const double mean = acc / draws, sd = std::sqrt((acc2 / draws - mean * mean) / draws);
    CHECK(std::abs(mean - (n - 1.0) / n) < 3 * sd);
  }
  double acc = 0, acc2 = 0;
  for (int t = 0; t < draws; ++t) {
    const double c = std::cos(sample(Group::SO, 3, rng).phi[1]);
    acc += c;
    acc2 += c * c;
  }
  const double mean = acc / draws, sd = std::sqrt((acc2 / draws - mean * mean) / draws);
  CHECK(std::abs(mean) < 3 * sd);
}

TEST_CASE("samples stay in range and are reproducible") {
  RngStream a(42, 3), b(42, 3), c(42, 4);
  for (int t = 0; t < 1000; ++t) {
    const auto x = sample(Group::SU, 4, a);
    CHECK(in_nominal_range(x));
    CHECK(x.flat() == sample(Group::SU, 4, b).flat());
    CHECK(in_nominal_range(sample(Group::SO, 4, c)));
  }
}

TEST_CASE("Monte Carlo integration") {
  const auto one = mc_integrate([](const EulerAngles&) { return Complex(1.0); }, Group::SU, 3, 1000, 0);
  CHECK(one.first == Complex(1.0));
  CHECK(one.second == 0.0);
  const auto u11 = mc_integrate([](const EulerAngles& a) { return forward(a)(0, 0); }, Group::SU, 3, 50000, 1);
  CHECK(std::abs(u11.first) < 4 * u11.second);
  for (int n : {2, 3, 4}) {
    const auto r = mc_integrate([](const EulerAngles& a) { return Complex(std::norm(forward(a)(0, 0))); }, Group::SU,
                                n, 50000, 2);
    CHECK(std::abs(r.first - 1.0 / n) < 4 * r.second);
  }
  // thread count does not change the result
  auto f = [](const EulerAngles& a) { return forward(a)(1, 0); };
  const auto r1 = mc_integrate(f, Group::SU, 3, 40000, 9, 1);
  const auto r4 = mc_integrate(f, Group::SU, 3, 40000, 9, 4);
  CHECK(r1.first == r4.first);
  CHECK(r1.second == r4.second);
  CHECK_THROWS_AS(mc_integrate(f, Group::SU, 3, 1, 0), ValidationError);
}

TEST_CASE("Haar invariance under translation") {
  RngStream rng(77);
  const Matrix y = forward(sample(Group::SU, 3, rng));
  auto poly = [](const Matrix& g) { return g(0, 0) * std::conj(g(1, 1)) + g(2, 1) * g(2, 1) * g(0, 2); };
  const auto base = mc_integrate([&](const EulerAngles& a) { return poly(forward(a)); }, Group::SU, 3, 40000, 5);
  const auto left = mc_integrate([&](const EulerAngles& a) { return poly(y * forward(a)); }, Group::SU, 3, 40000, 6);
  const auto right = mc_integrate([&](const EulerAngles& a) { return poly(forward(a) * y); }, Group::SU, 3, 40000, 7);
  const double s = std::hypot(base.second, left.second);
  CHECK(std::abs(base.first - left.first) < 5 * s);
  CHECK(std::abs(base.first - right.first) < 5 * s);
}

TEST_CASE("quadrature") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  double s = 0, s4 = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    s += w[k];
    s4 += w[k] * std::pow(x[k], 8);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s4 == doctest::Approx(2.0 / 9).epsilon(1e-13));
  auto u11 = [](const EulerAngles& a) { return forward(a)(0, 0); };
  CHECK(std::abs(quad_integrate([](const EulerAngles&) { return Complex(1.0); }, Group::SU, 2, 12) - 1.0) < 1e-10);
  CHECK(std::abs(quad_integrate([&](const EulerAngles& a) { return Complex(std::norm(u11(a))); }, Group::SU, 2, 16) -
                 0.5) < 1e-8);
  CHECK(std::abs(quad_integrate([&](const EulerAngles& a) { return Complex(std::pow(std::norm(u11(a)), 2)); },
                                Group::SU, 2, 16) -
                 1.0 / 3) < 1e-8);
  CHECK(std::abs(quad_integrate([](const EulerAngles&) { return Complex(1.0); }, Group::SO, 4, 8) - 1.0) < 1e-10);
  CHECK(std::abs(quad_integrate([&](const EulerAngles& a) { return Complex(std::norm(forward(a)(0, 0))); }, Group::SO,
                                3, 16) -
                 1.0 / 3) < 1e-8);
  CHECK(std::abs(quad_integrate([&](const EulerAngles& a) { return Complex(std::norm(u11(a))); }, Group::SU, 3, 6) -
                 1.0 / 3) < 1e-5);
  CHECK_THROWS_AS(quad_integrate(u11, Group::SU, 4, 4), ValidationError);
}

TEST_CASE("quadrature and Monte Carlo agree on entry polynomials") {
  auto p = [](const EulerAngles& a) {
    const Matrix g = forward(a);
    return g(0, 0) * g(0, 0) * std::conj(g(1, 1) * g(1, 1)) + 0.5 * g(0, 1) * std::conj(g(0, 1));
  };
  for (int n : {2, 3}) {
    const Complex q = quad_integrate(p, Group::SU, n, n == 2 ? 16 : 6);
    const auto mc = mc_integrate(p, Group::SU, n, 60000, 3);
    CHECK(std::abs(q - mc.first) < 4 * mc.second);
  }
}

TEST_CASE("Jacobian oracle has constant ratio to the density") {
  RngStream rng(31);
  for (auto [g, n] : {std::pair{Group::SU, 2}, std::pair{Group::SU, 3}, std::pair{Group::SO, 3}, std::pair{Group::SO, 4},
                      std::pair{Group::SU, 4}}) {
    double lo = 1e300, hi = 0;
    for (int t = 0; t < 20; ++t) {
      const auto a = sample(g, n, rng);
      const double r = density_from_jacobian(a) / density(a);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    CHECK((hi - lo) / lo < 1e-4);
    if (g == Group::SU && n == 2) CHECK(lo == doctest::Approx(2.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(density_from_jacobian(EulerAngles::zeros(Group::SU, 2)), ValidationError);
}
