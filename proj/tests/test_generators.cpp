#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lieprobe/errors.hpp"
#include "lieprobe/generators.hpp"

using namespace lieprobe;

namespace {
constexpr Complex kI{0.0, 1.0};
double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("displayed generators") {
  Matrix l1 = Matrix::Zero(3, 3);
  l1(0, 1) = kI;
  l1(1, 0) = kI;
  CHECK(max_abs(lambda(3, 1) - l1) == 0.0);
  Matrix l8 = Matrix::Zero(3, 3);
  l8(0, 0) = kI;
  l8(1, 1) = kI;
  l8(2, 2) = -2.0 * kI;
  CHECK(max_abs(lambda(3, 8) - l8) == 0.0);
  Matrix l3 = Matrix::Zero(2, 2);
  l3(0, 0) = kI;
  l3(1, 1) = -kI;
  CHECK(max_abs(lambda(2, 3) - l3) == 0.0);
  Matrix l5 = Matrix::Zero(3, 3);
  l5(0, 2) = kI;
  l5(2, 0) = kI;
  CHECK(max_abs(lambda(3, 4) - l5) == 0.0);
  CHECK_THROWS_AS(lambda(3, 9), ValidationError);
  CHECK_THROWS_AS(lambda(3, 0), ValidationError);
}

TEST_CASE("generators are anti-Hermitian, traceless and trace-orthogonal") {
  for (int n = 2; n <= 5; ++n) {
    for (int j = 1; j < n * n; ++j) {
      const Matrix l = lambda(n, j);
      CHECK(max_abs(l + l.adjoint()) == 0.0);
      CHECK(std::abs(l.trace()) == 0.0);
      for (int k = 1; k < n * n; ++k)
        if (k != j) CHECK(trace_pairing(n, j, k) == 0.0);
    }
  }
  CHECK(trace_pairing(3, 3, 8) == 0.0);
  CHECK(trace_pairing(2, 1, 1) == -2.0);
  CHECK(trace_pairing(3, 4, 5) == 0.0);
}

TEST_CASE("so generators are real") {
  for (int n = 2; n <= 5; ++n)
    for (int j = 1; j < n * n; ++j)
      if (is_so_generator(j)) CHECK(lambda(n, j).imag().cwiseAbs().maxCoeff() == 0.0);
  int count = 0;
  for (int j = 1; j < 16; ++j) count += is_so_generator(j) ? 1 : 0;
  CHECK(count == 6);
}

TEST_CASE("closed-form exponentials") {
  const double t = 0.37;
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = std::polar(1.0, t);
  d(1, 1) = std::polar(1.0, -t);
  CHECK(max_abs(exp_generator(2, 3, t) - d) < 1e-15);
  Matrix r(2, 2);
  r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  CHECK(max_abs(exp_generator(2, 2, t) - r) < 1e-15);
  Matrix swap = Matrix::Zero(3, 3);
  swap(0, 2) = 1.0;
  swap(2, 0) = -1.0;
  swap(1, 1) = 1.0;
  CHECK(max_abs(exp_generator(3, 5, std::numbers::pi / 2) - swap) < 1e-15);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int n = 2; n <= 5; ++n) {
    for (int j = 1; j < n * n; ++j) {
      const double s = u(rng), v = u(rng);
      const Matrix e = exp_generator(n, j, s);
      CHECK(max_abs(e * e.adjoint() - Matrix::Identity(n, n)) < 1e-12);
      CHECK(std::abs(e.determinant() - 1.0) < 1e-12);
      CHECK(max_abs(exp_generator(n, j, s + v) - e * exp_generator(n, j, v)) < 1e-12);
      // agreement with the truncated power series at a small argument
      const double h = 1e-3;
      const Matrix l = lambda(n, j);
      const Matrix l2 = l * l;
      const Matrix series = Matrix::Identity(n, n) + h * l + h * h / 2 * l2 + h * h * h / 6 * l2 * l + h * h * h * h / 24 * l2 * l2;
      CHECK(max_abs(exp_generator(n, j, h) - series) < 1e-11);
    }
  }
}

TEST_CASE("adjoint-action relations") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (int n = 3; n <= 5; ++n)
    for (int q = 2; q < n; ++q) {
      CHECK(ad_relation_residual(1, 0, q, n, u(rng), u(rng)) < 1e-12);
      CHECK(ad_relation_residual(2, 0, q, n, u(rng), u(rng)) < 1e-12);
      CHECK(ad_relation_residual(2, 0, q, n, 0.0, 0.0) < 1e-12);
      for (int p = q + 1; p < n; ++p) {
        CHECK(ad_relation_residual(3, p, q, n, u(rng), u(rng)) < 1e-12);
        CHECK(ad_relation_residual(4, p, q, n, u(rng), u(rng)) < 1e-12);
      }
    }
  CHECK_THROWS_AS(ad_relation_residual(1, 0, 1, 3, 0.1, 0.2), ValidationError);
  CHECK_THROWS_AS(ad_relation_residual(3, 2, 2, 4, 0.1, 0.2), ValidationError);
  CHECK_THROWS_AS(ad_relation_residual(5, 3, 2, 4, 0.1, 0.2), ValidationError);
}
