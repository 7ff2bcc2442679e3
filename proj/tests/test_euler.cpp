#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lieprobe/errors.hpp"
#include "lieprobe/euler.hpp"

using namespace lieprobe;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

EulerAngles random_interior(Group g, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.02, 0.98);
  EulerAngles a = EulerAngles::zeros(g, n);
  for (std::size_t i = 0; i < a.phi.size(); ++i) {
    const auto r = phi_range(g, n, static_cast<int>(i));
    a.phi[i] = r.lo + u(rng) * (r.hi - r.lo);
  }
  for (auto& x : a.psi) x = u(rng) * kPi / 2;
  for (std::size_t j = 0; j < a.omega.size(); ++j) a.omega[j] = u(rng) * omega_range(static_cast<int>(j) + 1).hi;
  return a;
}

double angle_error(const EulerAngles& a, const EulerAngles& b) {
  double e = 0;
  const auto x = a.flat(), y = b.flat();
  for (std::size_t i = 0; i < x.size(); ++i) e = std::max(e, std::abs(x[i] - y[i]));
  return e;
}

}  // namespace

TEST_CASE("SU(2) closed form") {
  const double phi = 0.4, psi = 0.9, om = 1.3;
  const auto a = EulerAngles::from_flat(Group::SU, 2, {phi, psi, om});
  Matrix f(2, 2);
  f << std::polar(std::cos(psi), phi + om), std::polar(std::sin(psi), phi - om),
      -std::polar(std::sin(psi), -(phi - om)), std::polar(std::cos(psi), -(phi + om));
  CHECK(max_abs(su_forward(a) - f) < 1e-15);
  CHECK(max_abs(su_forward(EulerAngles::zeros(Group::SU, 2)) - Matrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("SO(2) and SO(3) basics") {
  const auto a = EulerAngles::from_flat(Group::SO, 2, {0.7});
  Matrix r(2, 2);
  r << std::cos(0.7), std::sin(0.7), -std::sin(0.7), std::cos(0.7);
  CHECK(max_abs(so_forward(a) - r) < 1e-15);
  CHECK(max_abs(so_forward(EulerAngles::zeros(Group::SO, 3)) - Matrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("forward maps match the generator products and are special") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 40; ++t) {
      const auto a = random_interior(Group::SU, n, rng);
      const Matrix u = su_forward(a);
      CHECK(max_abs(u - su_forward_reference(a)) < 1e-12);
      CHECK(unitarity_defect(u) < 1e-12);
      CHECK(determinant_defect(u) < 1e-12);
      const auto b = random_interior(Group::SO, n, rng);
      const Matrix r = so_forward(b);
      CHECK(max_abs(r - so_forward_reference(b)) < 1e-12);
      CHECK(unitarity_defect(r) < 1e-12);
      CHECK(determinant_defect(r) < 1e-12);
      CHECK(r.imag().cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("inverse round trips") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 100; ++t) {
      const auto a = random_interior(Group::SU, n, rng);
      const auto back = su_inverse(su_forward(a));
      CHECK(angle_error(a, back) < 1e-9);
      CHECK(in_nominal_range(back));
      const auto b = random_interior(Group::SO, n, rng);
      const auto sback = so_inverse(so_forward(b));
      CHECK(angle_error(b, sback) < 1e-9);
    }
  }
}

TEST_CASE("inverse at degenerate points") {
  for (int n = 2; n <= 4; ++n) {
    const auto a = su_inverse(Matrix::Identity(n, n));
    CHECK(angle_error(a, EulerAngles::zeros(Group::SU, n)) == 0.0);
    const auto b = so_inverse(Matrix::Identity(n, n));
    CHECK(angle_error(b, EulerAngles::zeros(Group::SO, n)) == 0.0);
  }
  // u12 = 0: psi = 0 and phi resolved to 0, the phase moving into omega
  Matrix d(2, 2);
  d << std::polar(1.0, 0.8), 0.0, 0.0, std::polar(1.0, -0.8);
  const auto a = su_inverse(d);
  CHECK(a.psi[0] == 0.0);
  CHECK(a.phi[0] == 0.0);
  CHECK(max_abs(su_forward(a) - d) < 1e-12);
  // u11 = 0
  Matrix w(2, 2);
  w << 0.0, std::polar(1.0, 0.3), -std::polar(1.0, -0.3), 0.0;
  CHECK(max_abs(su_forward(su_inverse(w)) - w) < 1e-12);
  // permutation-like matrices with many zeros
  Matrix p = Matrix::Zero(3, 3);
  p(0, 1) = 1.0;
  p(1, 2) = 1.0;
  p(2, 0) = 1.0;
  CHECK(max_abs(su_forward(su_inverse(p)) - p) < 1e-12);
  CHECK(max_abs(so_forward(so_inverse(p)) - p) < 1e-12);
}

TEST_CASE("inverse rejects bad input") {
  Matrix m = Matrix::Identity(2, 2) * 2.0;
  CHECK_THROWS_AS(su_inverse(m), ValidationError);
  Matrix d(2, 2);
  d << Complex(0, 1), 0.0, 0.0, Complex(0, 1);
  CHECK_THROWS_AS(su_inverse(d), ValidationError);
  CHECK_THROWS_AS(so_inverse(exp_generator(2, 3, 0.2)), ValidationError);
}

TEST_CASE("D matrices") {
  CHECK(max_abs(d_matrix(4, 3, 0.0) - Matrix::Identity(4, 4)) == 0.0);
  Matrix e = Matrix::Identity(3, 3);
  e(0, 0) = std::polar(1.0, 0.5);
  e(1, 1) = std::polar(1.0, -0.5);
  CHECK(max_abs(d_matrix(3, 2, 0.5) - e) == 0.0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int k = 2; k <= 6; ++k)
    for (int m = 2; m <= k; ++m) CHECK(std::abs(d_matrix(k, m, u(rng)).determinant() - 1.0) < 1e-12);
  CHECK_THROWS_AS(d_matrix(3, 4, 0.1), ValidationError);
  CHECK_THROWS_AS(d_matrix(3, 1, 0.1), ValidationError);
}

TEST_CASE("shift identities") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uz(-3.0, 3.0);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 50; ++t) {
      const auto a = random_interior(Group::SU, n, rng);
      const double z = uz(rng);
      for (auto kind : {ShiftKind::left_d2, ShiftKind::right_dn, ShiftKind::mid_su2, ShiftKind::dn_full,
                        ShiftKind::dn1_full}) {
        if (kind == ShiftKind::dn1_full && n == 2) continue;
        CHECK(shift_identity_residual(kind, n, z, a) < 1e-12);
        CHECK(shift_identity_residual(kind, n, 0.0, a) == 0.0);
      }
    }
  }
  CHECK_THROWS_AS(shift_identity_residual(ShiftKind::dn1_full, 2, 0.1, EulerAngles::zeros(Group::SU, 2)),
                  ValidationError);
  CHECK_THROWS_AS(parse_shift_kind("sideways"), ValidationError);
}
