#include "lieprobe/generators.hpp"

#include <cmath>
#include <string>

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_index(int n, int j) {
  if (n < 2) throw ValidationError("rank must be at least 2");
  if (j < 1 || j > n * n - 1)
    throw ValidationError("generator index " + std::to_string(j) + " out of range 1.." + std::to_string(n * n - 1));
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

GeneratorShape generator_shape(int j) {
  int level = 1;
  while ((level + 1) * (level + 1) - 1 < j) ++level;
  return {level, j - (level * level - 1)};
}

Matrix lambda(int n, int j) {
  check_index(n, j);
  const auto [level, k] = generator_shape(j);
  Matrix m = Matrix::Zero(n, n);
  if (k == 2 * level + 1) {
    for (int a = 0; a < level; ++a) m(a, a) = kI;
    m(level, level) = -kI * static_cast<double>(level);
  } else if (k % 2 == 1) {
    const int a = (k + 1) / 2 - 1;
    m(a, level) = kI;
    m(level, a) = kI;
  } else {
    const int a = k / 2 - 1;
    m(a, level) = 1.0;
    m(level, a) = -1.0;
  }
  return m;
}

bool is_so_generator(int j) {
  const auto shape = generator_shape(j);
  return !shape.diagonal() && shape.k % 2 == 0;
}

Matrix exp_generator(int n, int j, double t) {
  check_index(n, j);
  const auto [level, k] = generator_shape(j);
  Matrix m = Matrix::Identity(n, n);
  if (k == 2 * level + 1) {
    for (int a = 0; a < level; ++a) m(a, a) = std::polar(1.0, t);
    m(level, level) = std::polar(1.0, -t * level);
    return m;
  }
  const double c = std::cos(t), s = std::sin(t);
  const int a = (k % 2 == 1 ? (k + 1) / 2 : k / 2) - 1;
  m(a, a) = c;
  m(level, level) = c;
  if (k % 2 == 1) {
    m(a, level) = kI * s;
    m(level, a) = kI * s;
  } else {
    m(a, level) = s;
    m(level, a) = -s;
  }
  return m;
}

double trace_pairing(int n, int j, int k) { return (lambda(n, j) * lambda(n, k)).trace().real(); }

Complex project_on_generator(const Matrix& x, int j) {
  const auto n = static_cast<int>(x.rows());
  const Matrix l = lambda(n, j);
  return (x * l).trace() / (l * l).trace();
}

double ad_relation_residual(int relation, int p, int q, int n, double phi, double psi) {
  if (relation < 1 || relation > 4) throw ValidationError("relation must be 1..4");
  if (q < 2 || n <= q) throw ValidationError("adjoint relations need 2 <= q < n");
  if (relation >= 3 && (p <= q || n <= p)) throw ValidationError("relations 3 and 4 need q < p < n");
  auto ad = [](const Matrix& g, const Matrix& x) { return Matrix(g * x * g.adjoint()); };
  const double c = std::cos(phi), s = std::sin(phi), cp = std::cos(psi), sp = std::sin(psi);
  const int qq = q * q;
  switch (relation) {
    case 1: {
      const Matrix lhs = ad(exp_generator(n, 3, -phi), lambda(n, qq + 1));
      return max_abs(lhs - (c * lambda(n, qq + 1) - s * lambda(n, qq)));
    }
    case 2: {
      const Matrix lhs = ad(exp_generator(n, 3, -phi) * exp_generator(n, qq + 1, -psi), lambda(n, 3));
      const double r1 = std::abs(project_on_generator(lhs, qq) - cp * sp * c);
      const double r2 = std::abs(project_on_generator(lhs, qq + 1) - cp * sp * s);
      return std::max(r1, r2);
    }
    default: {
      const int pp = p * p;
      const Matrix g = exp_generator(n, pp + 1, psi) * exp_generator(n, 3, phi);
      if (relation == 3) {
        const Matrix rhs = cp * (c * lambda(n, qq) - s * lambda(n, qq + 1)) -
                           sp * (c * lambda(n, pp + 2 * q) + s * lambda(n, pp + 2 * q + 1));
        return max_abs(ad(g, lambda(n, qq)) - rhs);
      }
      const Matrix rhs = cp * (s * lambda(n, qq) + c * lambda(n, qq + 1)) +
                         sp * (-s * lambda(n, pp + 2 * q) + c * lambda(n, pp + 2 * q + 1));
      return max_abs(ad(g, lambda(n, qq + 1)) - rhs);
    }
  }
}

}  // namespace lieprobe
