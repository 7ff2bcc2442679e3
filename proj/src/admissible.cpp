#include "lieprobe/admissible.hpp"

#include <cmath>

#include "lieprobe/errors.hpp"
#include "lieprobe/haar.hpp"

namespace lieprobe {
namespace {

void check_terms(std::size_t count) {
  if (count > Limits::global().max_terms)
    throw ResourceGuardError("admissible function exceeds " + std::to_string(Limits::global().max_terms) +
                             " monomials");
}

int x_count(Group g, int n) { return g == Group::SU ? n * (n - 1) / 2 : (n - 1) * (n - 2) / 2; }
int z_count(Group g, int n) { return g == Group::SU ? n * (n + 1) / 2 - 1 : n - 1; }

}  // namespace

AdmissibleFunction::AdmissibleFunction(Group g, int n)
    : group_(g), n_(n), x_vars_(x_count(g, n)), z_vars_(z_count(g, n)) {
  if (n < 2) throw ValidationError("rank must be at least 2");
}

AdmissibleFunction AdmissibleFunction::constant(Group g, int n, const ExactScalar& c) {
  AdmissibleFunction f(g, n);
  f.add_term(ZExponent(static_cast<std::size_t>(f.z_vars_), Rational(0)),
             XKey(static_cast<std::size_t>(2 * f.x_vars_), 0), c);
  return f;
}

std::size_t AdmissibleFunction::size() const {
  std::size_t s = 0;
  for (const auto& [m, poly] : terms_) s += poly.size();
  return s;
}

void AdmissibleFunction::add_term(const ZExponent& m, XKey x, const ExactScalar& c) {
  if (c.is_zero()) return;
  if (m.size() != static_cast<std::size_t>(z_vars_) || x.size() != static_cast<std::size_t>(2 * x_vars_))
    throw ValidationError("admissible monomial has the wrong shape");
  for (int t = 0; t < x_vars_; ++t) {
    const auto a = static_cast<std::size_t>(2 * t);
    if (x[a] < 0 || x[a + 1] < 0) throw ValidationError("negative x power");
    if (x[a + 1] >= 2) {
      XKey lo = x, hi = x;
      lo[a + 1] -= 2;
      hi[a + 1] -= 2;
      hi[a] += 2;
      add_term(m, std::move(lo), c);
      add_term(m, std::move(hi), -c);
      return;
    }
  }
  auto& poly = terms_[m];
  auto [it, inserted] = poly.try_emplace(std::move(x), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) poly.erase(it);
  }
  if (poly.empty()) terms_.erase(m);
}

void AdmissibleFunction::check_compatible(const AdmissibleFunction& o) const {
  if (group_ != o.group_ || n_ != o.n_) throw ValidationError("admissible functions on different groups");
}

AdmissibleFunction& AdmissibleFunction::operator+=(const AdmissibleFunction& o) {
  check_compatible(o);
  for (const auto& [m, poly] : o.terms_)
    for (const auto& [x, c] : poly) add_term(m, x, c);
  check_terms(size());
  return *this;
}

AdmissibleFunction operator*(const AdmissibleFunction& a, const AdmissibleFunction& b) {
  a.check_compatible(b);
  AdmissibleFunction out(a.group_, a.n_);
  for (const auto& [ma, pa] : a.terms_)
    for (const auto& [mb, pb] : b.terms_) {
      ZExponent m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      for (const auto& [xa, ca] : pa)
        for (const auto& [xb, cb] : pb) {
          XKey x = xa;
          for (std::size_t i = 0; i < x.size(); ++i) x[i] += xb[i];
          out.add_term(m, std::move(x), ca * cb);
        }
      check_terms(out.size());
    }
  return out;
}

Complex AdmissibleFunction::eval(std::span<const double> x, std::span<const double> theta) const {
  if (x.size() != static_cast<std::size_t>(x_vars_) || theta.size() != static_cast<std::size_t>(z_vars_))
    throw ValidationError("admissible evaluation point has the wrong shape");
  Complex acc{0.0, 0.0};
  for (const auto& [m, poly] : terms_) {
    double phase = 0.0;
    for (std::size_t e = 0; e < m.size(); ++e) phase += m[e].to_double() * theta[e];
    Complex inner{0.0, 0.0};
    for (const auto& [key, c] : poly) {
      double v = 1.0;
      for (std::size_t t = 0; t < x.size(); ++t) {
        v *= std::pow(x[t], key[2 * t]);
        if (key[2 * t + 1] != 0) v *= std::pow(std::sqrt(std::max(0.0, 1.0 - x[t] * x[t])), key[2 * t + 1]);
      }
      inner += c.to_double() * v;
    }
    acc += inner * std::polar(1.0, phase);
  }
  return acc;
}

AdmissibleFunction pow(const AdmissibleFunction& f, unsigned p) {
  AdmissibleFunction result = AdmissibleFunction::constant(f.group(), f.rank(), ExactScalar(1));
  AdmissibleFunction base = f;
  while (p > 0) {
    if (p & 1u) result = result * base;
    p >>= 1u;
    if (p > 0) base = base * base;
  }
  return result;
}

std::vector<int> z_divisors(Group g, int n) {
  const VarLayout l = VarLayout::make(g, n);
  std::vector<int> d;
  for (const auto& [slot, idx] : l.exp_angle) {
    if (g == Group::SO) {
      d.push_back(1);
    } else if (slot == 2) {
      d.push_back(idx + 1);
    } else {
      bool leading = false;
      for (int m = n; m >= 2; --m) leading = leading || idx == level_offset(n, m);
      d.push_back(leading ? 2 : 1);
    }
  }
  return d;
}

AdmissibleFunction tilde(const FiniteTypeFunction& f) {
  const VarLayout& l = f.layout();
  const std::vector<int> d = z_divisors(l.group, l.n);
  AdmissibleFunction out(l.group, l.n);
  for (const auto& [key, c] : f.terms()) {
    ZExponent m(static_cast<std::size_t>(l.n_exp));
    for (int e = 0; e < l.n_exp; ++e)
      m[static_cast<std::size_t>(e)] = Rational(key[static_cast<std::size_t>(e)], d[static_cast<std::size_t>(e)]);
    XKey x(key.begin() + l.n_exp, key.end());
    out.add_term(m, std::move(x), c);
  }
  return out;
}

void abelian_point(const EulerAngles& a, std::vector<double>& x, std::vector<double>& theta) {
  const VarLayout l = VarLayout::make(a.group, a.n);
  const std::vector<int> d = z_divisors(a.group, a.n);
  x.clear();
  theta.clear();
  for (const auto& ref : l.trig_angle) {
    const double t = l.angle(a, ref);
    x.push_back(a.group == Group::SU ? std::sin(t) : std::cos(t));
  }
  for (std::size_t e = 0; e < l.exp_angle.size(); ++e) theta.push_back(d[e] * l.angle(a, l.exp_angle[e]));
}

double JacobianJ::eval(std::span<const double> x) const {
  if (x.size() != powers.size()) throw ValidationError("Jacobian evaluation point has the wrong shape");
  double v = constant.to_double().real();
  for (std::size_t t = 0; t < x.size(); ++t)
    v *= std::pow(x[t], powers[t].first) * std::pow(std::max(0.0, 1.0 - x[t] * x[t]), powers[t].second / 2.0);
  return v;
}

JacobianJ jacobian(Group g, int n) {
  const NormalizationReport norm = normalization(g, n);
  JacobianJ j{g, n, norm.computed_total, {}, norm.reference_total, ExactScalar(1)};
  for (int d : z_divisors(g, n)) j.constant *= ExactScalar(Rational(1, d));
  for (int m = n; m >= 2; --m) {
    if (g == Group::SU) {
      for (int k = 1; k <= m - 1; ++k)
        j.powers.emplace_back(k == m - 1 ? std::pair{2 * m - 3, 0} : std::pair{1, 2 * (k - 1)});
    } else {
      for (int k = 2; k <= m - 1; ++k) j.powers.emplace_back(0, k - 2);
    }
  }
  if (g == Group::SU) j.reference_constant *= ExactScalar(Rational(1, 2 * (n - 1)));
  j.ratio = j.constant / j.reference_constant;
  return j;
}

ExactScalar circle_factor(const Rational& q) {
  if (q.is_zero()) return ExactScalar::pi_power(1, Cyclotomic(Rational(2)));
  // (e^{2 pi i q} - 1) / (i q)
  return (ExactScalar::root_of_unity(q) - ExactScalar(1)) * ExactScalar::i() * ExactScalar(-q.reciprocal());
}

ExactScalar x_integral(Group g, int a, int b) {
  if (a < 0 || b < 0) throw ValidationError("negative power in x integral");
  if (g == Group::SO && a % 2 != 0) return ExactScalar(0);
  HalfPiValue v = beta_half(a + 1, b + 2);
  v.q = v.q / Rational(g == Group::SU ? 2 : 1);
  return v.exact();
}

ExactScalar integrate(const AdmissibleFunction& f) {
  const JacobianJ jac = jacobian(f.group(), f.rank());
  ExactScalar total(0);
  for (const auto& [m, poly] : f.terms()) {
    ExactScalar circle(1);
    for (const auto& q : m) {
      if (q.is_integer() && !q.is_zero()) {
        circle = ExactScalar(0);
        break;
      }
      circle *= circle_factor(q);
    }
    if (circle.is_zero()) continue;
    ExactScalar inner(0);
    for (const auto& [key, c] : poly) {
      ExactScalar v = c;
      for (std::size_t t = 0; t < jac.powers.size() && !v.is_zero(); ++t)
        v *= x_integral(f.group(), key[2 * t] + jac.powers[t].first, key[2 * t + 1] + jac.powers[t].second);
      inner += v;
    }
    total += circle * inner;
  }
  return total * jac.constant;
}

ExactScalar exact_moment(const AdmissibleFunction& f, unsigned p) {
  if (p == 0) throw ValidationError("moment order must be positive");
  return integrate(pow(f, p));
}

Spectrum spectrum(const AdmissibleFunction& f) {
  Spectrum s;
  for (const auto& [m, poly] : f.terms())
    if (!poly.empty()) s.insert(m);
  return s;
}

}  // namespace lieprobe
