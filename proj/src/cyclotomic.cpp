#include "lieprobe/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

long mod_inverse(long a, long m) {
  long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    const long q = r / nr;
    t -= q * nt; std::swap(t, nt);
    r -= q * nr; std::swap(r, nr);
  }
  return ((t % m) + m) % m;
}

void check_order(long order) {
  if (order > Limits::global().max_cyclotomic_order)
    throw ResourceGuardError("cyclotomic order " + std::to_string(order) + " exceeds limit " +
                             std::to_string(Limits::global().max_cyclotomic_order));
}

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of a dense polynomial modulo the monic n-th cyclotomic polynomial.
Poly reduce_mod_phi(Poly a, long n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i].is_zero()) continue;
    const Rational c = a[i];
    for (std::size_t t = 0; t < deg; ++t)
      if (phi[t] != 0) a[i - deg + t] -= c * Rational(phi[t]);
    a[i] = Rational(0);
  }
  if (a.size() > deg) a.resize(deg);
  trim(a);
  return a;
}

// Dense coefficients of zeta_to^k for an element stored at order `from`.
Poly lift(const Poly& coeffs, long from, long to) {
  Poly dense(static_cast<std::size_t>(to));
  const long step = to / from;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) dense[static_cast<std::size_t>((static_cast<long>(k) * step) % to)] += coeffs[k];
  return dense;
}

// Projection onto Q(zeta_{n/p}) along the relative trace, as dense coefficients at order n/p.
Poly trace_down(const Poly& coeffs, long n, long p) {
  const long m = n / p;
  Poly out(static_cast<std::size_t>(m));
  if (m % p == 0) {
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero() && static_cast<long>(k) % p == 0) out[k / p] += coeffs[k];
    return out;
  }
  const long p_inv_mod_m = m == 1 ? 0 : mod_inverse(p, m);
  const long m_inv_mod_p = mod_inverse(m, p);
  const Rational other(-1, p - 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const long kk = static_cast<long>(k);
    const long u = m == 1 ? 0 : (kk % m) * p_inv_mod_m % m;
    const long v = (kk % p) * m_inv_mod_p % p;
    out[static_cast<std::size_t>(u)] += v == 0 ? coeffs[k] : coeffs[k] * other;
  }
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().reciprocal();
  for (std::size_t i = a.size(); i-- > b.size() - 1;) {
    if (a[i].is_zero()) continue;
    const Rational c = a[i] * lead_inv;
    q[i - (b.size() - 1)] = c;
    for (std::size_t t = 0; t < b.size(); ++t) a[i - (b.size() - 1) + t] -= c * b[t];
  }
  trim(q);
  trim(a);
  return {q, a};
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  for (long p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

const std::vector<long>& cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::unordered_map<long, std::vector<long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the numerators first,
  // then divide exactly by the denominators.
  std::vector<long> poly{1};
  std::vector<long> divide_by;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int m = moebius(n / d);
    if (m == 1) {
      std::vector<long> next(poly.size() + static_cast<std::size_t>(d));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] -= poly[i];
        next[i + static_cast<std::size_t>(d)] += poly[i];
      }
      poly = std::move(next);
    } else if (m == -1) {
      divide_by.push_back(d);
    }
  }
  for (long d : divide_by) {
    // poly / (x^d - 1): q_i = q_{i-d} - p_i from the bottom up.
    const std::size_t dd = static_cast<std::size_t>(d);
    std::vector<long> q(poly.size() - dd);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= dd ? q[i - dd] : 0) - poly[i];
    poly = std::move(q);
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(const Rational& q) {
  if (!q.is_zero()) coeffs_.push_back(q);
}

Cyclotomic Cyclotomic::canonical(long order, std::vector<Rational> dense) {
  check_order(order);
  Poly coeffs = reduce_mod_phi(std::move(dense), order);
  if (coeffs.empty()) return {};
  long n = order;
  bool descended = true;
  while (descended && n > 1) {
    descended = false;
    for (long p : prime_factors(n)) {
      const long m = n / p;
      Poly candidate = reduce_mod_phi(trace_down(coeffs, n, p), m);
      if (reduce_mod_phi(lift(candidate, m, n), n) == coeffs) {
        coeffs = std::move(candidate);
        n = m;
        descended = true;
        break;
      }
    }
  }
  Cyclotomic out;
  out.order_ = n;
  out.coeffs_ = std::move(coeffs);
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& r) {
  const Rational f = r.frac();
  const mpz_class den = f.denominator();
  if (!den.fits_slong_p()) throw ResourceGuardError("root of unity order too large");
  const long order = den.get_si();
  check_order(order);
  Poly dense(static_cast<std::size_t>(order));
  dense[static_cast<std::size_t>(f.numerator().get_si())] = Rational(1);
  return canonical(order, std::move(dense));
}

Cyclotomic Cyclotomic::from_terms(const std::map<Rational, Rational>& terms) {
  long order = 1;
  for (const auto& [r, c] : terms) {
    const mpz_class den = r.frac().denominator();
    if (!den.fits_slong_p()) throw ResourceGuardError("root of unity order too large");
    order = std::lcm(order, den.get_si());
    check_order(order);
  }
  Poly dense(static_cast<std::size_t>(order));
  for (const auto& [r, c] : terms) {
    const Rational k = r.frac() * Rational(order);
    dense[static_cast<std::size_t>(k.floor_int())] += c;
  }
  return canonical(order, std::move(dense));
}

std::map<Rational, Rational> Cyclotomic::terms() const {
  std::map<Rational, Rational> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) out.emplace(Rational(static_cast<long>(k), order_), coeffs_[k]);
  return out;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw ValidationError("cyclotomic number is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ <= 2) return *this;
  Poly dense(static_cast<std::size_t>(order_));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    dense[static_cast<std::size_t>((order_ - static_cast<long>(k)) % order_)] += coeffs_[k];
  return canonical(order_, std::move(dense));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.order_ == 1 && b.order_ == 1) return Cyclotomic(a.coeffs_[0] + b.coeffs_[0]);
  const long m = std::lcm(a.order_, b.order_);
  check_order(m);
  Poly dense = lift(a.coeffs_, a.order_, m);
  const Poly db = lift(b.coeffs_, b.order_, m);
  for (std::size_t k = 0; k < dense.size(); ++k) dense[k] += db[k];
  return Cyclotomic::canonical(m, std::move(dense));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.order_ == 1 || b.order_ == 1) {
    const bool a_rat = a.order_ == 1;
    const Rational s = a_rat ? a.coeffs_[0] : b.coeffs_[0];
    Cyclotomic out = a_rat ? b : a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }
  const long m = std::lcm(a.order_, b.order_);
  check_order(m);
  const long sa = m / a.order_, sb = m / b.order_;
  Poly dense(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const long k = (static_cast<long>(i) * sa + static_cast<long>(j) * sb) % m;
      dense[static_cast<std::size_t>(k)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic::canonical(m, std::move(dense));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ValidationError("inverse of zero cyclotomic number");
  if (order_ == 1) return Cyclotomic(coeffs_[0].reciprocal());
  // Extended Euclid against the cyclotomic polynomial: s * a == 1 (mod Phi).
  const auto& phi = cyclotomic_polynomial(order_);
  Poly r0, r1 = coeffs_;
  for (long c : phi) r0.emplace_back(c);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s);
  }
  // r0 is a nonzero constant because Phi is irreducible.
  const Rational inv = r0[0].reciprocal();
  for (auto& c : s0) c *= inv;
  s0.resize(static_cast<std::size_t>(order_));
  return canonical(order_, std::move(s0));
}

std::complex<double> Cyclotomic::to_double() const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order_);
    acc += coeffs_[k].to_double() * std::polar(1.0, angle);
  }
  return acc;
}

}  // namespace lieprobe
