#pragma once

#include <array>
#include <map>
#include <vector>

#include "lieprobe/euler.hpp"
#include "lieprobe/exact_scalar.hpp"

namespace lieprobe {

/// Variable bookkeeping for Euler monomials.
///
/// Exponential variables carry e^{ik theta}: for SU every phi then every
/// omega, for SO the level-leading phi of each level (top level first).
/// Trigonometric variables carry primary^p secondary^q with q in {0, 1}:
/// SU psi (primary sin, secondary cos), SO non-leading phi (primary cos,
/// secondary sin).
struct VarLayout {
  Group group;
  int n;
  int n_exp;
  int n_trig;
  // angle addressed by each variable: (slot, index) with slot 0 = phi,
  // 1 = psi, 2 = omega
  std::vector<std::pair<int, int>> exp_angle;
  std::vector<std::pair<int, int>> trig_angle;

  static VarLayout make(Group g, int n);
  std::size_t key_size() const { return static_cast<std::size_t>(n_exp + 2 * n_trig); }
  double angle(const EulerAngles& a, std::pair<int, int> ref) const;
};

/// Monomial key: n_exp integer exponents followed by (p, q) per trig variable.
using MonomialKey = std::vector<int>;

/// Canonical sum of Euler monomials with exact coefficients.
class FiniteTypeFunction {
 public:
  FiniteTypeFunction(Group g, int n);
  static FiniteTypeFunction constant(Group g, int n, const ExactScalar& c);

  const VarLayout& layout() const { return layout_; }
  Group group() const { return layout_.group; }
  int rank() const { return layout_.n; }
  const std::map<MonomialKey, ExactScalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c times the monomial, rewriting secondary^2 = 1 - primary^2 as needed.
  void add_term(MonomialKey key, const ExactScalar& c);

  FiniteTypeFunction operator-() const;
  FiniteTypeFunction conj() const;
  FiniteTypeFunction& operator+=(const FiniteTypeFunction& o);
  FiniteTypeFunction& operator-=(const FiniteTypeFunction& o);
  FiniteTypeFunction& operator*=(const ExactScalar& c);
  friend FiniteTypeFunction operator+(FiniteTypeFunction a, const FiniteTypeFunction& b) { return a += b; }
  friend FiniteTypeFunction operator-(FiniteTypeFunction a, const FiniteTypeFunction& b) { return a -= b; }
  friend FiniteTypeFunction operator*(const FiniteTypeFunction& a, const FiniteTypeFunction& b);
  friend bool operator==(const FiniteTypeFunction& a, const FiniteTypeFunction& b) {
    return a.layout_.group == b.layout_.group && a.layout_.n == b.layout_.n && a.terms_ == b.terms_;
  }

  Complex eval(const EulerAngles& a) const;

 private:
  void check_compatible(const FiniteTypeFunction& o) const;

  VarLayout layout_;
  std::map<MonomialKey, ExactScalar> terms_;
};

FiniteTypeFunction mul(const FiniteTypeFunction& f, const FiniteTypeFunction& g);
/// f^p by repeated squaring; the term-count guard applies to every product.
FiniteTypeFunction pow(const FiniteTypeFunction& f, unsigned p);
/// Rewrites any secondary power >= 2 through secondary^2 = 1 - primary^2.
/// Functions built through the public API are already normalized; this is
/// for raw term maps.
FiniteTypeFunction normalize(Group g, int n, const std::map<MonomialKey, ExactScalar>& raw);

/// Numeric evaluator compiled from a function; cheap enough for Monte Carlo.
class CompiledFunction {
 public:
  explicit CompiledFunction(const FiniteTypeFunction& f);
  Complex operator()(const EulerAngles& a) const;

 private:
  struct Term {
    Complex coeff;
    std::vector<std::pair<int, int>> exps;  // (var, k)
    std::vector<std::array<int, 3>> trig;   // (var, p, q)
  };
  VarLayout layout_;
  std::vector<Term> terms_;
};

/// Entries of the forward parametrization as finite-type functions,
/// row-major n x n.
std::vector<FiniteTypeFunction> symbolic_entries(Group g, int n);

}  // namespace lieprobe
