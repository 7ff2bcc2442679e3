#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lieprobe/finite_type.hpp"

namespace lieprobe {

/// One factor u_ij or conj(u_ij), 1-based indices.
struct EntryFactor {
  int i;
  int j;
  bool conj;
  auto operator<=>(const EntryFactor&) const = default;
};

/// Polynomial in matrix entries and their conjugates with exact coefficients.
///
/// Text syntax: sums, differences, products and integer powers of u11,
/// u(1,2), conj(...), rationals or decimals, i and pi; division only by
/// invertible constants. Example: "u11*conj(u11) - 1/2".
class EntryPolynomial {
 public:
  using Monomial = std::vector<EntryFactor>;  // sorted

  EntryPolynomial() = default;
  static EntryPolynomial constant(const ExactScalar& c);
  static EntryPolynomial entry(int i, int j, bool conj = false);
  static EntryPolynomial parse(std::string_view text);

  const std::map<Monomial, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest row or column index used (0 for constants).
  int max_index() const;
  /// Constant value, when the polynomial has no entry factors.
  bool is_constant() const;

  EntryPolynomial operator-() const;
  EntryPolynomial conj() const;
  EntryPolynomial& operator+=(const EntryPolynomial& o);
  friend EntryPolynomial operator+(EntryPolynomial a, const EntryPolynomial& b) { return a += b; }
  friend EntryPolynomial operator-(EntryPolynomial a, const EntryPolynomial& b) { return a += -b; }
  friend EntryPolynomial operator*(const EntryPolynomial& a, const EntryPolynomial& b);
  EntryPolynomial pow(unsigned e) const;
  friend bool operator==(const EntryPolynomial& a, const EntryPolynomial& b) { return a.terms_ == b.terms_; }

  Complex eval(const Matrix& u) const;
  std::string str() const;

 private:
  void add(Monomial m, const ExactScalar& c);
  std::map<Monomial, ExactScalar> terms_;
};

/// Substitutes the symbolic entries of the parametrization and expands.
FiniteTypeFunction expand(const EntryPolynomial& p, Group g, int n);

}  // namespace lieprobe
