#include "lieprobe/finite_type.hpp"

#include <cmath>
#include <mutex>

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

void check_terms(std::size_t count) {
  if (count > Limits::global().max_terms)
    throw ResourceGuardError("finite-type function exceeds " + std::to_string(Limits::global().max_terms) +
                             " monomials");
}

void check_rank_limit(int n) {
  if (n < 2) throw ValidationError("rank must be at least 2");
  if (n > Limits::global().max_rank)
    throw ResourceGuardError("rank " + std::to_string(n) + " exceeds configured maximum " +
                             std::to_string(Limits::global().max_rank));
}

using SymMatrix = std::vector<FiniteTypeFunction>;  // row-major

FiniteTypeFunction exp_monomial(const VarLayout& l, int var, int k) {
  FiniteTypeFunction f(l.group, l.n);
  MonomialKey key(l.key_size(), 0);
  key[static_cast<std::size_t>(var)] = k;
  f.add_term(key, ExactScalar(1));
  return f;
}

FiniteTypeFunction trig_monomial(const VarLayout& l, int var, int p, int q, const ExactScalar& c = ExactScalar(1)) {
  FiniteTypeFunction f(l.group, l.n);
  MonomialKey key(l.key_size(), 0);
  key[static_cast<std::size_t>(l.n_exp + 2 * var)] = p;
  key[static_cast<std::size_t>(l.n_exp + 2 * var + 1)] = q;
  f.add_term(key, c);
  return f;
}

SymMatrix identity(const VarLayout& l, int m) {
  SymMatrix out(static_cast<std::size_t>(m * m), FiniteTypeFunction(l.group, l.n));
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i * m + i)] = FiniteTypeFunction::constant(l.group, l.n, 1);
  return out;
}

FiniteTypeFunction& at(SymMatrix& m, int size, int r, int c) { return m[static_cast<std::size_t>(r * size + c)]; }

void scale_column(SymMatrix& m, int size, int col, const FiniteTypeFunction& f) {
  for (int r = 0; r < size; ++r) {
    auto& e = at(m, size, r, col);
    if (!e.is_zero()) e = e * f;
  }
}

// Columns a, b replaced by (c*col_a - s*col_b, s*col_a + c*col_b).
void rotate_columns(SymMatrix& m, int size, int a, int b, const FiniteTypeFunction& c, const FiniteTypeFunction& s) {
  for (int r = 0; r < size; ++r) {
    const FiniteTypeFunction x = at(m, size, r, a), y = at(m, size, r, b);
    at(m, size, r, a) = c * x - s * y;
    at(m, size, r, b) = s * x + c * y;
  }
}

// out.leftCols(m-1) = out.leftCols(m-1) * sub
void multiply_block(SymMatrix& out, int m, const SymMatrix& sub, const VarLayout& l) {
  const int k = m - 1;
  SymMatrix result = out;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < k; ++c) {
      FiniteTypeFunction acc(l.group, l.n);
      for (int t = 0; t < k; ++t) {
        const auto& x = out[static_cast<std::size_t>(r * m + t)];
        const auto& y = sub[static_cast<std::size_t>(t * k + c)];
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      result[static_cast<std::size_t>(r * m + c)] = acc;
    }
  out = std::move(result);
}

SymMatrix su_level(const VarLayout& l, int m) {
  if (m == 1) return identity(l, 1);
  const int off = level_offset(l.n, m);
  const int n_phi = l.n * (l.n - 1) / 2;
  SymMatrix out = identity(l, m);
  for (int k = 2; k <= m; ++k) {
    const int var = off + k - 2;
    scale_column(out, m, 0, exp_monomial(l, var, 1));
    scale_column(out, m, 1, exp_monomial(l, var, -1));
    rotate_columns(out, m, 0, k - 1, trig_monomial(l, var, 0, 1), trig_monomial(l, var, 1, 0));
  }
  multiply_block(out, m, su_level(l, m - 1), l);
  const int omega_var = n_phi + m - 2;
  for (int c = 0; c < m - 1; ++c) scale_column(out, m, c, exp_monomial(l, omega_var, 1));
  scale_column(out, m, m - 1, exp_monomial(l, omega_var, -(m - 1)));
  return out;
}

SymMatrix so_level(const VarLayout& l, int m, const std::vector<int>& trig_of_phi) {
  if (m == 1) return identity(l, 1);
  const int off = level_offset(l.n, m);
  SymMatrix out = identity(l, m);
  for (int k = 1; k <= m - 1; ++k) {
    FiniteTypeFunction c(l.group, l.n), s(l.group, l.n);
    if (k == 1) {
      const int var = l.n - m;
      const ExactScalar half(Rational(1, 2));
      const ExactScalar i_half = ExactScalar::i() * half;
      c = exp_monomial(l, var, 1) + exp_monomial(l, var, -1);
      c *= half;
      // sin = (z - 1/z) / (2i) = -i/2 z + i/2 / z
      s = exp_monomial(l, var, -1) - exp_monomial(l, var, 1);
      s *= i_half;
    } else {
      const int var = trig_of_phi[static_cast<std::size_t>(off + k - 1)];
      c = trig_monomial(l, var, 1, 0);
      s = trig_monomial(l, var, 0, 1);
    }
    rotate_columns(out, m, k - 1, k, c, s);
  }
  multiply_block(out, m, so_level(l, m - 1, trig_of_phi), l);
  return out;
}

}  // namespace

VarLayout VarLayout::make(Group g, int n) {
  if (n < 2) throw ValidationError("rank must be at least 2");
  VarLayout l{g, n, 0, 0, {}, {}};
  const int half = n * (n - 1) / 2;
  if (g == Group::SU) {
    for (int i = 0; i < half; ++i) l.exp_angle.emplace_back(0, i);
    for (int j = 0; j < n - 1; ++j) l.exp_angle.emplace_back(2, j);
    for (int i = 0; i < half; ++i) l.trig_angle.emplace_back(1, i);
  } else {
    for (int m = n; m >= 2; --m) l.exp_angle.emplace_back(0, level_offset(n, m));
    for (int m = n; m >= 2; --m)
      for (int k = 2; k <= m - 1; ++k) l.trig_angle.emplace_back(0, level_offset(n, m) + k - 1);
  }
  l.n_exp = static_cast<int>(l.exp_angle.size());
  l.n_trig = static_cast<int>(l.trig_angle.size());
  return l;
}

double VarLayout::angle(const EulerAngles& a, std::pair<int, int> ref) const {
  const auto idx = static_cast<std::size_t>(ref.second);
  switch (ref.first) {
    case 0: return a.phi[idx];
    case 1: return a.psi[idx];
    default: return a.omega[idx];
  }
}

FiniteTypeFunction::FiniteTypeFunction(Group g, int n) : layout_(VarLayout::make(g, n)) {}

FiniteTypeFunction FiniteTypeFunction::constant(Group g, int n, const ExactScalar& c) {
  FiniteTypeFunction f(g, n);
  f.add_term(MonomialKey(f.layout_.key_size(), 0), c);
  return f;
}

void FiniteTypeFunction::add_term(MonomialKey key, const ExactScalar& c) {
  if (c.is_zero()) return;
  if (key.size() != layout_.key_size()) throw ValidationError("monomial key has the wrong length");
  for (int t = 0; t < layout_.n_trig; ++t) {
    const auto pi = static_cast<std::size_t>(layout_.n_exp + 2 * t);
    if (key[pi] < 0 || key[pi + 1] < 0) throw ValidationError("negative trigonometric power");
    if (key[pi + 1] >= 2) {
      // secondary^2 = 1 - primary^2
      key[pi + 1] -= 2;
      MonomialKey other = key;
      other[pi] += 2;
      add_term(key, c);
      add_term(other, -c);
      return;
    }
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  check_terms(terms_.size());
}

void FiniteTypeFunction::check_compatible(const FiniteTypeFunction& o) const {
  if (o.layout_.group != layout_.group || o.layout_.n != layout_.n)
    throw ValidationError("finite-type functions live on different groups");
}

FiniteTypeFunction FiniteTypeFunction::operator-() const {
  FiniteTypeFunction out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

FiniteTypeFunction FiniteTypeFunction::conj() const {
  FiniteTypeFunction out(layout_.group, layout_.n);
  for (const auto& [k, c] : terms_) {
    MonomialKey key = k;
    for (int e = 0; e < layout_.n_exp; ++e) key[static_cast<std::size_t>(e)] = -key[static_cast<std::size_t>(e)];
    out.terms_.emplace(std::move(key), c.conj());
  }
  return out;
}

FiniteTypeFunction& FiniteTypeFunction::operator+=(const FiniteTypeFunction& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

FiniteTypeFunction& FiniteTypeFunction::operator-=(const FiniteTypeFunction& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

FiniteTypeFunction& FiniteTypeFunction::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

FiniteTypeFunction operator*(const FiniteTypeFunction& a, const FiniteTypeFunction& b) {
  a.check_compatible(b);
  FiniteTypeFunction out(a.layout_.group, a.layout_.n);
  MonomialKey key(a.layout_.key_size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = ka[i] + kb[i];
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

FiniteTypeFunction mul(const FiniteTypeFunction& f, const FiniteTypeFunction& g) { return f * g; }

FiniteTypeFunction pow(const FiniteTypeFunction& f, unsigned p) {
  FiniteTypeFunction result = FiniteTypeFunction::constant(f.group(), f.rank(), 1);
  FiniteTypeFunction base = f;
  while (p > 0) {
    if (p & 1u) result = result * base;
    p >>= 1u;
    if (p > 0) base = base * base;
  }
  return result;
}

FiniteTypeFunction normalize(Group g, int n, const std::map<MonomialKey, ExactScalar>& raw) {
  FiniteTypeFunction out(g, n);
  for (const auto& [k, c] : raw) out.add_term(k, c);
  return out;
}

Complex FiniteTypeFunction::eval(const EulerAngles& a) const { return CompiledFunction(*this)(a); }

CompiledFunction::CompiledFunction(const FiniteTypeFunction& f) : layout_(f.layout()) {
  for (const auto& [k, c] : f.terms()) {
    Term t;
    t.coeff = c.to_double();
    for (int e = 0; e < layout_.n_exp; ++e)
      if (k[static_cast<std::size_t>(e)] != 0) t.exps.emplace_back(e, k[static_cast<std::size_t>(e)]);
    for (int v = 0; v < layout_.n_trig; ++v) {
      const int p = k[static_cast<std::size_t>(layout_.n_exp + 2 * v)];
      const int q = k[static_cast<std::size_t>(layout_.n_exp + 2 * v + 1)];
      if (p != 0 || q != 0) t.trig.push_back({v, p, q});
    }
    terms_.push_back(std::move(t));
  }
}

Complex CompiledFunction::operator()(const EulerAngles& a) const {
  if (a.group != layout_.group || a.n != layout_.n) throw ValidationError("angles do not match the function's group");
  thread_local std::vector<double> theta, primary, secondary;
  theta.resize(static_cast<std::size_t>(layout_.n_exp));
  primary.resize(static_cast<std::size_t>(layout_.n_trig));
  secondary.resize(static_cast<std::size_t>(layout_.n_trig));
  for (int e = 0; e < layout_.n_exp; ++e)
    theta[static_cast<std::size_t>(e)] = layout_.angle(a, layout_.exp_angle[static_cast<std::size_t>(e)]);
  const bool su = layout_.group == Group::SU;
  for (int v = 0; v < layout_.n_trig; ++v) {
    const double x = layout_.angle(a, layout_.trig_angle[static_cast<std::size_t>(v)]);
    primary[static_cast<std::size_t>(v)] = su ? std::sin(x) : std::cos(x);
    secondary[static_cast<std::size_t>(v)] = su ? std::cos(x) : std::sin(x);
  }
  Complex acc{0.0, 0.0};
  for (const auto& t : terms_) {
    double phase = 0.0, mag = 1.0;
    for (const auto& [e, k] : t.exps) phase += k * theta[static_cast<std::size_t>(e)];
    for (const auto& [v, p, q] : t.trig) {
      mag *= std::pow(primary[static_cast<std::size_t>(v)], p);
      if (q == 1) mag *= secondary[static_cast<std::size_t>(v)];
    }
    acc += t.coeff * std::polar(mag, phase);
  }
  return acc;
}

std::vector<FiniteTypeFunction> symbolic_entries(Group g, int n) {
  check_rank_limit(n);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<FiniteTypeFunction>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(static_cast<int>(g), n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const VarLayout l = VarLayout::make(g, n);
  std::vector<FiniteTypeFunction> out;
  if (g == Group::SU) {
    out = su_level(l, n);
  } else {
    std::vector<int> trig_of_phi(static_cast<std::size_t>(n * (n - 1) / 2), -1);
    for (int v = 0; v < l.n_trig; ++v) trig_of_phi[static_cast<std::size_t>(l.trig_angle[static_cast<std::size_t>(v)].second)] = v;
    out = so_level(l, n, trig_of_phi);
  }
  cache.emplace(key, out);
  return out;
}

}  // namespace lieprobe
