#pragma once

#include <complex>

#include <Eigen/Dense>

namespace lieprobe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Position of lambda_j in the level structure: j = level^2 - 1 + k with
/// 1 <= k <= 2*level + 1, where k = 2*level + 1 is the diagonal generator.
struct GeneratorShape {
  int level;
  int k;
  bool diagonal() const { return k == 2 * level + 1; }
};

GeneratorShape generator_shape(int j);

/// Anti-Hermitian, traceless basis element lambda_j of su(n), 1 <= j <= n^2 - 1.
/// Odd k: i at (ceil(k/2), level+1) and its transpose; even k: +1 at
/// (k/2, level+1), -1 at the transpose; diagonal: diag(i, ..., i, -level*i, 0...).
Matrix lambda(int n, int j);

/// Real generators spanning so(n): lambda_j with even k.
bool is_so_generator(int j);

/// exp(t * lambda_j) in closed form. Off-diagonal generators satisfy
/// X^3 = -X, so the exponential is I + sin t X + (1 - cos t) X^2.
Matrix exp_generator(int n, int j, double t);

/// Tr(lambda_j lambda_k).
double trace_pairing(int n, int j, int k);

/// Coefficient of lambda_j in x, with respect to the trace form.
Complex project_on_generator(const Matrix& x, int j);

/// Max-norm residual of one of the four adjoint-action identities used in
/// the density derivation, evaluated at angles (phi, psi):
///  1: Ad(e^{-phi l3}) l_{q^2+1} = cos(phi) l_{q^2+1} - sin(phi) l_{q^2}
///  2: Ad(e^{-phi l3} e^{-psi l_{q^2+1}}) l3, projected on l_{q^2}, l_{q^2+1}
///  3: Ad(e^{psi l_{p^2+1}} e^{phi l3}) l_{q^2}
///  4: Ad(e^{psi l_{p^2+1}} e^{phi l3}) l_{q^2+1}
/// Requires q >= 2, n > q, and for 3-4 also p > q, n > p.
double ad_relation_residual(int relation, int p, int q, int n, double phi, double psi);

}  // namespace lieprobe
