#pragma once

#include <complex>
#include <map>
#include <string>

#include "lieprobe/cyclotomic.hpp"

namespace lieprobe {

/// Decimal rendering of a complex value together with its double shadow.
struct ComplexDecimal {
  std::string re;
  std::string im;
  std::complex<double> value;
};

/// Element of Q(zeta_inf)[pi, 1/pi]: sum over integer p of c_p * pi^p with
/// cyclotomic c_p. pi is treated as transcendental, so the representation
/// is unique once zero entries are dropped.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(const Rational& q);      // NOLINT(google-explicit-constructor)
  ExactScalar(long q) : ExactScalar(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(const Cyclotomic& c);    // NOLINT(google-explicit-constructor)

  static ExactScalar pi_power(int p, const Cyclotomic& coeff = Cyclotomic(1));
  static ExactScalar root_of_unity(const Rational& r) { return ExactScalar(Cyclotomic::root_of_unity(r)); }
  static ExactScalar i() { return ExactScalar(Cyclotomic::i()); }

  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;
  bool is_invertible() const { return terms_.size() == 1; }

  ExactScalar operator-() const;
  ExactScalar conj() const;
  ExactScalar inverse() const;
  ExactScalar pow(unsigned e) const;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.terms_ == b.terms_; }

  std::complex<double> to_double() const;
  /// Embedding into C with absolute error below 10^-digits.
  ComplexDecimal to_complex(int digits) const;

  /// Human-readable form such as "(1/2)*pi^-2".
  std::string str() const;

 private:
  std::map<int, Cyclotomic> terms_;
};

enum class ArithOp { add, sub, mul, div };
ExactScalar arith(const ExactScalar& a, const ExactScalar& b, ArithOp op);

}  // namespace lieprobe
