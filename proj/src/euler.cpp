#include "lieprobe/euler.hpp"

#include <cmath>
#include <numbers>

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroTol = 1e-14;

int half_count(int n) { return n * (n - 1) / 2; }

void check_rank(int n) {
  if (n < 2) throw ValidationError("rank must be at least 2");
  if (n > 64) throw ResourceGuardError("rank too large");
}

void check_shape(const EulerAngles& a, Group g) {
  if (a.group != g) throw ValidationError("angles belong to the other group");
  check_rank(a.n);
  const auto m = static_cast<std::size_t>(half_count(a.n));
  const bool su = g == Group::SU;
  if (a.phi.size() != m || a.psi.size() != (su ? m : 0) ||
      a.omega.size() != (su ? static_cast<std::size_t>(a.n - 1) : 0))
    throw ValidationError("angle count does not match the group and rank");
}

// Columns a, b of m replaced by (c*col_a - s*col_b, s*col_a + c*col_b).
void rotate_columns(Matrix& m, int a, int b, double c, double s) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const Complex x = m(r, a), y = m(r, b);
    m(r, a) = c * x - s * y;
    m(r, b) = s * x + c * y;
  }
}

// Rows a, b of m replaced by (c*row_a - s*row_b, s*row_a + c*row_b).
void rotate_rows(Matrix& m, int a, int b, double c, double s) {
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    const Complex x = m(a, col), y = m(b, col);
    m(a, col) = c * x - s * y;
    m(b, col) = s * x + c * y;
  }
}

// SU(m) block at one level. phi/psi point at this level's first angle;
// omega points at omega_1. Optional overrides serve the shift identities.
Matrix su_level(int m, const double* phi, const double* psi, const double* omega, const Matrix* sub = nullptr,
                const Matrix* after_a2 = nullptr) {
  if (m == 1) return Matrix::Identity(1, 1);
  Matrix out = Matrix::Identity(m, m);
  for (int k = 2; k <= m; ++k) {
    const Complex e = std::polar(1.0, phi[k - 2]);
    out.col(0) *= e;
    out.col(1) *= std::conj(e);
    rotate_columns(out, 0, k - 1, std::cos(psi[k - 2]), std::sin(psi[k - 2]));
    if (k == 2 && after_a2 != nullptr) out = out * (*after_a2);
  }
  const Matrix s = sub != nullptr ? *sub : su_level(m - 1, phi + (m - 1), psi + (m - 1), omega);
  out.leftCols(m - 1) = (out.leftCols(m - 1) * s).eval();
  const double w = omega[m - 2];
  out.leftCols(m - 1) *= std::polar(1.0, w);
  out.col(m - 1) *= std::polar(1.0, -w * (m - 1));
  return out;
}

Matrix so_level(int m, const double* phi) {
  if (m == 1) return Matrix::Identity(1, 1);
  Matrix out = Matrix::Identity(m, m);
  for (int k = 1; k <= m - 1; ++k) rotate_columns(out, k - 1, k, std::cos(phi[k - 1]), std::sin(phi[k - 1]));
  out.leftCols(m - 1) = (out.leftCols(m - 1) * so_level(m - 1, phi + (m - 1))).eval();
  return out;
}

Matrix su_reference_level(int n, int m, const EulerAngles& a) {
  if (m == 1) return Matrix::Identity(1, 1);
  const int off = level_offset(n, m);
  Matrix out = Matrix::Identity(m, m);
  for (int k = 2; k <= m; ++k)
    out = out * exp_generator(m, 3, a.phi[off + k - 2]) * exp_generator(m, (k - 1) * (k - 1) + 1, a.psi[off + k - 2]);
  Matrix block = Matrix::Identity(m, m);
  block.topLeftCorner(m - 1, m - 1) = su_reference_level(n, m - 1, a);
  return out * block * exp_generator(m, m * m - 1, a.omega[m - 2]);
}

Matrix so_reference_level(int n, int m, const EulerAngles& a) {
  if (m == 1) return Matrix::Identity(1, 1);
  const int off = level_offset(n, m);
  Matrix out = Matrix::Identity(m, m);
  for (int k = 1; k <= m - 1; ++k) out = out * exp_generator(m, (k + 1) * (k + 1) - 2, a.phi[off + k - 1]);
  Matrix block = Matrix::Identity(m, m);
  block.topLeftCorner(m - 1, m - 1) = so_reference_level(n, m - 1, a);
  return out * block;
}

double arg_positive(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi - 1e-13) a = 0.0;
  return a;
}

void check_special(const Matrix& u, bool real) {
  if (u.rows() != u.cols()) throw ValidationError("matrix must be square");
  check_rank(static_cast<int>(u.rows()));
  if (!u.allFinite()) throw ValidationError("matrix has non-finite entries");
  if (unitarity_defect(u) > 1e-10) throw ValidationError("matrix is not unitary");
  if (determinant_defect(u) > 1e-10) throw ValidationError("matrix determinant is not 1");
  if (real && u.imag().cwiseAbs().maxCoeff() > 1e-10) throw ValidationError("matrix is not real");
}

}  // namespace

std::string group_name(Group g) { return g == Group::SU ? "su" : "so"; }

Group parse_group(const std::string& s) {
  if (s == "su" || s == "SU") return Group::SU;
  if (s == "so" || s == "SO") return Group::SO;
  throw ParseError("unknown group '" + s + "' (expected su or so)");
}

EulerAngles EulerAngles::zeros(Group g, int n) {
  check_rank(n);
  EulerAngles a;
  a.group = g;
  a.n = n;
  a.phi.assign(static_cast<std::size_t>(half_count(n)), 0.0);
  if (g == Group::SU) {
    a.psi.assign(static_cast<std::size_t>(half_count(n)), 0.0);
    a.omega.assign(static_cast<std::size_t>(n - 1), 0.0);
  }
  return a;
}

std::vector<double> EulerAngles::flat() const {
  std::vector<double> out = phi;
  out.insert(out.end(), psi.begin(), psi.end());
  out.insert(out.end(), omega.begin(), omega.end());
  return out;
}

EulerAngles EulerAngles::from_flat(Group g, int n, const std::vector<double>& values) {
  EulerAngles a = zeros(g, n);
  if (values.size() != a.dimension())
    throw ValidationError("expected " + std::to_string(a.dimension()) + " angles for " + group_name(g) + "(" +
                          std::to_string(n) + "), got " + std::to_string(values.size()));
  auto it = values.begin();
  for (auto* v : {&a.phi, &a.psi, &a.omega})
    for (auto& x : *v) x = *it++;
  return a;
}

int level_offset(int n, int m) {
  int off = 0;
  for (int l = n; l > m; --l) off += l - 1;
  return off;
}

int group_dimension(Group g, int n) { return g == Group::SU ? n * n - 1 : half_count(n); }

AngleRange phi_range(Group g, int n, int index) {
  bool leading = false;
  for (int m = n; m >= 2; --m)
    if (index == level_offset(n, m)) leading = true;
  if (g == Group::SU) return {0.0, leading ? kPi : kTwoPi};
  return {0.0, leading ? kTwoPi : kPi};
}

AngleRange psi_range() { return {0.0, kPi / 2}; }

AngleRange omega_range(int j) { return {0.0, kTwoPi / j}; }

bool in_nominal_range(const EulerAngles& a) {
  auto inside = [](double x, AngleRange r) { return x >= r.lo && x <= r.hi; };
  for (std::size_t i = 0; i < a.phi.size(); ++i)
    if (!inside(a.phi[i], phi_range(a.group, a.n, static_cast<int>(i)))) return false;
  for (double x : a.psi)
    if (!inside(x, psi_range())) return false;
  for (std::size_t j = 0; j < a.omega.size(); ++j)
    if (!inside(a.omega[j], omega_range(static_cast<int>(j) + 1))) return false;
  return true;
}

double unitarity_defect(const Matrix& u) {
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double determinant_defect(const Matrix& u) { return std::abs(u.determinant() - Complex(1.0, 0.0)); }

Matrix su_forward(const EulerAngles& a) {
  check_shape(a, Group::SU);
  return su_level(a.n, a.phi.data(), a.psi.data(), a.omega.data());
}

Matrix so_forward(const EulerAngles& a) {
  check_shape(a, Group::SO);
  return so_level(a.n, a.phi.data());
}

Matrix forward(const EulerAngles& a) { return a.group == Group::SU ? su_forward(a) : so_forward(a); }

Matrix su_forward_reference(const EulerAngles& a) {
  check_shape(a, Group::SU);
  return su_reference_level(a.n, a.n, a);
}

Matrix so_forward_reference(const EulerAngles& a) {
  check_shape(a, Group::SO);
  return so_reference_level(a.n, a.n, a);
}

EulerAngles su_inverse(const Matrix& u) {
  check_special(u, false);
  const int n = static_cast<int>(u.rows());
  EulerAngles out = EulerAngles::zeros(Group::SU, n);
  Matrix w = u;
  for (int m = n; m >= 2; --m) {
    const int off = level_offset(n, m);
    const int last = m - 1;
    // Strip A(2) ... A(m) from the left, zeroing the last column except its
    // bottom entry. Step k removes A(k+1) = e^{l3 phi_k} e^{l_{k^2+1} psi_k}.
    for (int k = 1; k <= m - 1; ++k) {
      const bool final_step = k == m - 1;
      // Final step zeroes w_1 against w_m; earlier steps zero w_{k+1} against w_1.
      const Complex target = final_step ? w(0, last) : w(k, last);
      const Complex other = final_step ? w(last, last) : w(0, last);
      double psi = 0.0, phi = 0.0;
      const bool target_zero = std::abs(target) < kZeroTol;
      const bool other_zero = std::abs(other) < kZeroTol;
      if (target_zero) {
        psi = 0.0;
      } else if (other_zero) {
        psi = kPi / 2;
      } else {
        psi = std::atan(std::abs(target / other));
        if (final_step) {
          phi = m == 2 ? arg_positive(target / other) / 2 : arg_positive(target / other);
        } else {
          phi = k == 1 ? arg_positive(-other / target) / 2 : arg_positive(-other / target);
        }
      }
      out.phi[static_cast<std::size_t>(off + k - 1)] = phi;
      out.psi[static_cast<std::size_t>(off + k - 1)] = psi;
      // w <- R_{1,k+1}(-psi) e^{-l3 phi} w
      const Complex e = std::polar(1.0, -phi);
      w.row(0) *= e;
      w.row(1) *= std::conj(e);
      rotate_rows(w, 0, k, std::cos(psi), std::sin(psi));
    }
    // w = diag(X, w_mm) with det X = e^{i(m-1) omega}.
    const Matrix x = w.topLeftCorner(m - 1, m - 1);
    const double omega = arg_positive(x.determinant()) / (m - 1);
    out.omega[static_cast<std::size_t>(m - 2)] = omega;
    w = x * std::polar(1.0, -omega);
  }
  return out;
}

EulerAngles so_inverse(const Matrix& r) {
  check_special(r, true);
  const int n = static_cast<int>(r.rows());
  EulerAngles out = EulerAngles::zeros(Group::SO, n);
  Matrix w = r.real().cast<Complex>();
  for (int m = n; m >= 2; --m) {
    const int off = level_offset(n, m);
    const int last = m - 1;
    for (int k = 1; k <= m - 1; ++k) {
      const double a = w(k - 1, last).real(), b = w(k, last).real();
      double phi = (std::abs(a) < kZeroTol && std::abs(b) < kZeroTol) ? 0.0 : std::atan2(a, b);
      if (k == 1 && phi < 0) phi += kTwoPi;
      if (k == 1 && phi >= kTwoPi - 1e-13) phi = 0.0;
      out.phi[static_cast<std::size_t>(off + k - 1)] = phi;
      // w <- R_{k,k+1}(-phi) w, zeroing w_k in the last column.
      rotate_rows(w, k - 1, k, std::cos(phi), std::sin(phi));
    }
    w = w.topLeftCorner(m - 1, m - 1).eval();
  }
  return out;
}

Matrix d_matrix(int k, int m, double z) {
  if (m < 2 || m > k) throw ValidationError("d_matrix requires 2 <= n <= k");
  Matrix d = Matrix::Identity(k, k);
  for (int a = 0; a < m - 1; ++a) d(a, a) = std::polar(1.0, z);
  d(m - 1, m - 1) = std::polar(1.0, -z * (m - 1));
  return d;
}

ShiftKind parse_shift_kind(const std::string& s) {
  if (s == "left-D2") return ShiftKind::left_d2;
  if (s == "right-DN") return ShiftKind::right_dn;
  if (s == "mid-SU2") return ShiftKind::mid_su2;
  if (s == "DN-full") return ShiftKind::dn_full;
  if (s == "DN-1-full") return ShiftKind::dn1_full;
  throw ValidationError("unsupported shift identity '" + s + "'");
}

std::string shift_kind_name(ShiftKind k) {
  switch (k) {
    case ShiftKind::left_d2: return "left-D2";
    case ShiftKind::right_dn: return "right-DN";
    case ShiftKind::mid_su2: return "mid-SU2";
    case ShiftKind::dn_full: return "DN-full";
    case ShiftKind::dn1_full: return "DN-1-full";
  }
  return "?";
}

double shift_identity_residual(ShiftKind kind, int n, double z, const EulerAngles& a) {
  check_shape(a, Group::SU);
  if (a.n != n) throw ValidationError("angle rank does not match N");
  const Matrix f = su_forward(a);
  EulerAngles b = a;
  auto diff = [](const Matrix& x, const Matrix& y) { return (x - y).cwiseAbs().maxCoeff(); };
  switch (kind) {
    case ShiftKind::left_d2:
      b.phi[0] += z;
      return diff(d_matrix(n, 2, z) * f, su_forward(b));
    case ShiftKind::right_dn:
      b.omega[static_cast<std::size_t>(n - 2)] += z;
      return diff(f * d_matrix(n, n, z), su_forward(b));
    case ShiftKind::mid_su2: {
      const Matrix d2 = d_matrix(n, 2, z);
      const Matrix inserted = su_level(n, a.phi.data(), a.psi.data(), a.omega.data(), nullptr, &d2);
      if (n == 2) b.omega[0] += z; else b.phi[1] += z;
      return diff(inserted, su_forward(b));
    }
    case ShiftKind::dn_full:
      if (n == 2) {
        b.phi[0] += z;
      } else {
        b.phi[static_cast<std::size_t>(n - 2)] += n * z;
        b.phi[static_cast<std::size_t>(n - 1)] -= n * z;
        b.omega[static_cast<std::size_t>(n - 2)] += z;
      }
      return diff(d_matrix(n, n, z) * f, su_forward(b));
    case ShiftKind::dn1_full: {
      if (n < 3) throw ValidationError("DN-1-full needs N >= 3");
      if (n == 3) {
        b.phi[0] += z;
        return diff(d_matrix(n, n - 1, z) * f, su_forward(b));
      }
      b.phi[static_cast<std::size_t>(n - 3)] += (n - 1) * z;
      b.phi[static_cast<std::size_t>(n - 2)] -= (n - 2) * z;
      const int off = level_offset(n, n - 1);
      const Matrix sub = d_matrix(n - 1, 2, -z) * d_matrix(n - 1, n - 1, z) *
                         su_level(n - 1, a.phi.data() + off, a.psi.data() + off, a.omega.data());
      const Matrix rhs = su_level(n, b.phi.data(), b.psi.data(), b.omega.data(), &sub);
      return diff(d_matrix(n, n - 1, z) * f, rhs);
    }
  }
  throw ValidationError("unsupported shift identity");
}

}  // namespace lieprobe
