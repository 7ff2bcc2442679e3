#include "lieprobe/exact_scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <mpfr.h>

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

std::string cyclotomic_str(const Cyclotomic& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, q] : c.terms()) {
    if (!first) os << " + ";
    first = false;
    if (r.is_zero()) {
      os << q;
    } else {
      if (q != Rational(1)) os << q << "*";
      os << "e(" << r << ")";
    }
  }
  return first ? "0" : os.str();
}

// RAII holder for an MPFR value.
struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); mpfr_set_zero(v, 1); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

std::string fixed_string(const mpfr_t x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  if (out.rfind("-0.", 0) == 0 && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

}  // namespace

ExactScalar::ExactScalar(const Rational& q) {
  if (!q.is_zero()) terms_.emplace(0, Cyclotomic(q));
}

ExactScalar::ExactScalar(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

ExactScalar ExactScalar::pi_power(int p, const Cyclotomic& coeff) {
  ExactScalar out;
  if (!coeff.is_zero()) out.terms_.emplace(p, coeff);
  return out;
}

bool ExactScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_rational());
}

Rational ExactScalar::rational_value() const {
  if (!is_rational()) throw ValidationError("exact scalar is not rational");
  return terms_.empty() ? Rational(0) : terms_.begin()->second.rational_value();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out = *this;
  for (auto& [p, c] : out.terms_) c = c.conj();
  return out;
}

ExactScalar ExactScalar::inverse() const {
  if (!is_invertible())
    throw ValidationError(is_zero() ? "division by zero" : "exact scalar with several powers of pi is not invertible");
  const auto& [p, c] = *terms_.begin();
  return pi_power(-p, c.inverse());
}

ExactScalar ExactScalar::pow(unsigned e) const {
  ExactScalar result(1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar out = a;
  for (const auto& [p, c] : b.terms_) {
    auto it = out.terms_.find(p);
    if (it == out.terms_.end()) {
      out.terms_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      Cyclotomic prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(pa + pb, Cyclotomic());
      it->second += prod;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

ExactScalar arith(const ExactScalar& a, const ExactScalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw ValidationError("unknown arithmetic operation");
}

std::complex<double> ExactScalar::to_double() const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [p, c] : terms_) acc += std::pow(std::numbers::pi, p) * c.to_double();
  return acc;
}

ComplexDecimal ExactScalar::to_complex(int digits) const {
  if (digits <= 0) throw ValidationError("digits must be positive");
  if (digits > Limits::global().max_digits)
    throw ResourceGuardError("requested " + std::to_string(digits) + " digits exceeds limit " +
                             std::to_string(Limits::global().max_digits));
  // Working precision covers the requested digits plus the magnitude of every
  // summand plus headroom for the accumulated rounding of each term.
  long magnitude_bits = 0;
  for (const auto& [p, c] : terms_) {
    for (const auto& q : c.coefficients()) {
      const long bits = static_cast<long>(mpz_sizeinbase(q.mpq().get_num_mpz_t(), 2)) -
                        static_cast<long>(mpz_sizeinbase(q.mpq().get_den_mpz_t(), 2)) + 2 * std::abs(p);
      magnitude_bits = std::max(magnitude_bits, bits);
    }
  }
  const auto prec = static_cast<mpfr_prec_t>(std::ceil(digits * std::log2(10.0)) + magnitude_bits + 64);

  Mpfr re(prec), im(prec), pi(prec), pip(prec), q(prec), angle(prec), s(prec), co(prec), t(prec);
  mpfr_const_pi(pi.v, MPFR_RNDN);
  for (const auto& [p, c] : terms_) {
    mpfr_pow_si(pip.v, pi.v, p, MPFR_RNDN);
    const long order = c.order();
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      mpfr_set_q(q.v, coeffs[k].mpq().get_mpq_t(), MPFR_RNDN);
      mpfr_mul(q.v, q.v, pip.v, MPFR_RNDN);
      // angle = 2 pi k / order
      mpfr_mul_ui(angle.v, pi.v, 2 * static_cast<unsigned long>(k), MPFR_RNDN);
      mpfr_div_ui(angle.v, angle.v, static_cast<unsigned long>(order), MPFR_RNDN);
      mpfr_sin_cos(s.v, co.v, angle.v, MPFR_RNDN);
      mpfr_mul(t.v, q.v, co.v, MPFR_RNDN);
      mpfr_add(re.v, re.v, t.v, MPFR_RNDN);
      mpfr_mul(t.v, q.v, s.v, MPFR_RNDN);
      mpfr_add(im.v, im.v, t.v, MPFR_RNDN);
    }
  }
  ComplexDecimal out;
  out.re = fixed_string(re.v, digits);
  out.im = fixed_string(im.v, digits);
  out.value = {mpfr_get_d(re.v, MPFR_RNDN), mpfr_get_d(im.v, MPFR_RNDN)};
  return out;
}

std::string ExactScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = cyclotomic_str(c);
    if (p == 0) {
      os << cs;
    } else {
      if (cs != "1") os << "(" << cs << ")*";
      os << "pi";
      if (p != 1) os << "^" << p;
    }
  }
  return os.str();
}

}  // namespace lieprobe
