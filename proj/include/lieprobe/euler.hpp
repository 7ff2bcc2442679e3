#pragma once

#include <string>
#include <vector>

#include "lieprobe/generators.hpp"

namespace lieprobe {

enum class Group { SU, SO };

std::string group_name(Group g);
Group parse_group(const std::string& s);

/// Generalized Euler angles of SU(n) or SO(n).
///
/// Angles are stored level by level starting from the top. Level m (m = n
/// down to 2) contributes m-1 entries to phi (and to psi for SU); the first
/// of those is the level-leading angle. omega[j-1] is omega_j, attached to
/// level j+1. SO uses phi only.
struct EulerAngles {
  Group group = Group::SU;
  int n = 2;
  std::vector<double> phi;
  std::vector<double> psi;
  std::vector<double> omega;

  static EulerAngles zeros(Group g, int n);
  /// Concatenation phi, psi, omega.
  std::vector<double> flat() const;
  static EulerAngles from_flat(Group g, int n, const std::vector<double>& values);
  std::size_t dimension() const { return phi.size() + psi.size() + omega.size(); }
};

/// Offset into phi/psi of the first angle belonging to level m.
int level_offset(int n, int m);
/// Number of coordinates: n^2 - 1 for SU, n(n-1)/2 for SO.
int group_dimension(Group g, int n);

struct AngleRange {
  double lo;
  double hi;
};
AngleRange phi_range(Group g, int n, int index);
AngleRange psi_range();
AngleRange omega_range(int j);
/// True when every angle lies in its nominal closed range.
bool in_nominal_range(const EulerAngles& a);

/// Unitarity and determinant defects.
double unitarity_defect(const Matrix& u);
double determinant_defect(const Matrix& u);

Matrix su_forward(const EulerAngles& a);
Matrix so_forward(const EulerAngles& a);
Matrix forward(const EulerAngles& a);

/// Product of exp_generator factors, kept as an independent reference for
/// the in-place forward maps.
Matrix su_forward_reference(const EulerAngles& a);
Matrix so_forward_reference(const EulerAngles& a);

/// Inverse maps; input must be special unitary (resp. special orthogonal)
/// to 1e-10. Degenerate pivots resolve to angle 0.
EulerAngles su_inverse(const Matrix& u);
EulerAngles so_inverse(const Matrix& r);

/// diag(e^{iz} x (m-1), e^{-i(m-1)z}, 1 x (k-m)), 2 <= m <= k.
Matrix d_matrix(int k, int m, double z);

enum class ShiftKind { left_d2, right_dn, mid_su2, dn_full, dn1_full };
ShiftKind parse_shift_kind(const std::string& s);
std::string shift_kind_name(ShiftKind k);

/// Max-norm difference between the two sides of the angle-shift identity.
///  left-D2:   D_{N,2}(z) F(a)           vs F(phi_1 + z)
///  right-DN:  F(a) D_{N,N}(z)           vs F(omega_{N-1} + z)
///  mid-SU2:   F with diag(e^{iz}, e^{-iz}, 1..) inserted after A(2)
///             vs F(phi_2 + z) (omega_1 + z when N = 2)
///  DN-full:   D_{N,N}(z) F(a)           vs F(phi_{N-1} + Nz, phi_N - Nz, omega_{N-1} + z)
///             (phi_1 + z when N = 2)
///  DN-1-full: D_{N,N-1}(z) F(a)         vs F(phi_{N-2} + (N-1)z, phi_{N-1} - (N-2)z) with
///             the SU(N-1) block replaced by D_{N-1,2}(-z) D_{N-1,N-1}(z) F_{N-1}
///             (phi_1 + z when N = 3; N >= 3 required)
double shift_identity_residual(ShiftKind kind, int n, double z, const EulerAngles& a);

}  // namespace lieprobe
