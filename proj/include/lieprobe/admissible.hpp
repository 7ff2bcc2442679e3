#pragma once

#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "lieprobe/finite_type.hpp"

namespace lieprobe {

/// Rational exponent vector of the z variables.
using ZExponent = std::vector<Rational>;
/// (a, b) per x variable for x^a * sqrt(1 - x^2)^b, with b in {0, 1}.
using XKey = std::vector<int>;
using XPolynomial = std::map<XKey, ExactScalar>;

/// Laurent-type function on a box times a torus: sum over rational z-exponent
/// vectors of coefficient polynomials in x_i and sqrt(1 - x_i^2).
///
/// SU(n): n(n-1)/2 x variables on [0, 1], n(n+1)/2 - 1 z variables.
/// SO(n): (n-1)(n-2)/2 x variables on [-1, 1], n - 1 z variables.
class AdmissibleFunction {
 public:
  AdmissibleFunction(Group g, int n);
  static AdmissibleFunction constant(Group g, int n, const ExactScalar& c);

  Group group() const { return group_; }
  int rank() const { return n_; }
  int x_vars() const { return x_vars_; }
  int z_vars() const { return z_vars_; }
  const std::map<ZExponent, XPolynomial>& terms() const { return terms_; }
  /// Total number of (z, x) monomials.
  std::size_t size() const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c times the monomial, rewriting sqrt(1 - x^2)^2 = 1 - x^2.
  void add_term(const ZExponent& m, XKey x, const ExactScalar& c);

  AdmissibleFunction& operator+=(const AdmissibleFunction& o);
  friend AdmissibleFunction operator+(AdmissibleFunction a, const AdmissibleFunction& b) { return a += b; }
  friend AdmissibleFunction operator*(const AdmissibleFunction& a, const AdmissibleFunction& b);
  friend bool operator==(const AdmissibleFunction& a, const AdmissibleFunction& b) {
    return a.group_ == b.group_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Value at x and z_e = e^{i theta_e}, reading z^q as e^{i q theta} with
  /// theta in [0, 2 pi).
  Complex eval(std::span<const double> x, std::span<const double> theta) const;

 private:
  void check_compatible(const AdmissibleFunction& o) const;

  Group group_;
  int n_;
  int x_vars_;
  int z_vars_;
  std::map<ZExponent, XPolynomial> terms_;
};

AdmissibleFunction pow(const AdmissibleFunction& f, unsigned p);

/// Divisor of each z exponent under the tilde substitution: 2 on every
/// level-leading SU phi, 1 on other SU phi, j on omega_j, 1 for SO.
std::vector<int> z_divisors(Group g, int n);

/// Substitutes x = sin psi (SU) or cos phi (SO) and z = e^{i d theta}.
AdmissibleFunction tilde(const FiniteTypeFunction& f);

/// Coordinates (x, theta) on the abelian side that correspond to angles.
void abelian_point(const EulerAngles& a, std::vector<double>& x, std::vector<double>& theta);

/// Weight on the abelian side: constant * prod x_i^a_i (1 - x_i^2)^{b_i / 2}.
struct JacobianJ {
  Group group;
  int n;
  /// Haar constant times the 1/d factors from the z substitutions.
  ExactScalar constant;
  std::vector<std::pair<int, int>> powers;
  /// Published prefactor times the published level constants, in parameter form.
  ExactScalar reference_constant;
  /// constant / reference_constant.
  ExactScalar ratio;

  double eval(std::span<const double> x) const;
};

JacobianJ jacobian(Group g, int n);

/// Integral of e^{i q t} over [0, 2 pi].
ExactScalar circle_factor(const Rational& q);
/// Integral of x^a (1 - x^2)^{b/2} over [0, 1] (SU) or [-1, 1] (SO).
ExactScalar x_integral(Group g, int a, int b);

/// Integral of f against the Jacobian over box times torus.
ExactScalar integrate(const AdmissibleFunction& f);
/// integrate(f^P), which equals the Haar integral of the group-side P-th power.
ExactScalar exact_moment(const AdmissibleFunction& f, unsigned p);

using Spectrum = std::set<ZExponent>;
Spectrum spectrum(const AdmissibleFunction& f);

}  // namespace lieprobe
