#pragma once

#include <complex>
#include <map>
#include <vector>

#include "lieprobe/rational.hpp"

namespace lieprobe {

/// Element of Q(zeta_inf): a finite rational combination of roots of unity.
///
/// Stored at its conductor L (smallest L with the value in Q(zeta_L), never
/// 2 mod 4) as coefficients of zeta_L^0 .. zeta_L^{phi(L)-1}, i.e. reduced
/// modulo the L-th cyclotomic polynomial. Equal values therefore compare equal
/// member-wise. Zero has no coefficients and order 1.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long q) : Cyclotomic(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// e^{2 pi i r}; r is taken mod 1.
  static Cyclotomic root_of_unity(const Rational& r);
  /// Sum of c * e^{2 pi i r} over the map; exponents taken mod 1.
  static Cyclotomic from_terms(const std::map<Rational, Rational>& terms);
  static Cyclotomic i() { return root_of_unity(Rational(1, 4)); }

  /// Canonical exponent -> coefficient map, exponents in [0, 1).
  std::map<Rational, Rational> terms() const;
  long order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return order_ == 1; }
  /// Requires is_rational().
  Rational rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic conj() const;
  /// Throws ValidationError on zero.
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  std::complex<double> to_double() const;

 private:
  // Builds the canonical form from dense coefficients of zeta_L^k, k < L.
  static Cyclotomic canonical(long order, std::vector<Rational> dense);

  long order_ = 1;
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(long n);
long euler_phi(long n);

}  // namespace lieprobe
