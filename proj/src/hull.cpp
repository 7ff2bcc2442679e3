#include "lieprobe/hull.hpp"

#include <gmpxx.h>

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

using Row = std::vector<mpq_class>;

struct Tableau {
  std::size_t rows;
  std::size_t real;        // columns of the lambda variables
  std::vector<Row> a;      // rows x (real + rows), then rhs stored separately
  Row rhs;
  Row reduced;             // reduced costs per column
  std::vector<std::size_t> basis;

  std::size_t cols() const { return real + rows; }

  void pivot(std::size_t r, std::size_t s) {
    const mpq_class p = a[r][s];
    for (auto& v : a[r]) v /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][s] == 0) continue;
      const mpq_class f = a[i][s];
      for (std::size_t j = 0; j < cols(); ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    if (reduced[s] != 0) {
      const mpq_class f = reduced[s];
      for (std::size_t j = 0; j < cols(); ++j) reduced[j] -= f * a[r][j];
    }
    basis[r] = s;
  }

  // Bland's rule: smallest improving column, ties in the ratio test broken
  // by the smallest basic index.
  void solve() {
    for (;;) {
      std::size_t s = cols();
      for (std::size_t j = 0; j < cols(); ++j)
        if (reduced[j] < 0) {
          s = j;
          break;
        }
      if (s == cols()) return;
      std::size_t r = rows;
      mpq_class best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (a[i][s] <= 0) continue;
        const mpq_class ratio = rhs[i] / a[i][s];
        if (r == rows || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == rows) throw ValidationError("phase-one problem reported unbounded");
      pivot(r, s);
    }
  }
};

Rational to_rational(const mpq_class& q) { return Rational(q); }

}  // namespace

HullVerdict hull_contains_zero(const std::vector<RationalPoint>& points) {
  if (points.empty()) throw ValidationError("empty spectrum");
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw ValidationError("spectrum points have different dimensions");
  const std::size_t k = points.size();

  // rows 0..d-1: sum_j lambda_j m_j = 0; row d: sum_j lambda_j = 1
  Tableau t{d + 1, k, {}, Row(d + 1, 0), {}, {}};
  t.a.assign(d + 1, Row(k + d + 1, 0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < d; ++i) t.a[i][j] = points[j][i].mpq();
    t.a[d][j] = 1;
  }
  t.rhs[d] = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    t.a[i][k + i] = 1;
    t.basis.push_back(k + i);
  }
  // cost 1 on each artificial; reduced cost c_j - sum_i a_ij
  t.reduced.assign(t.cols(), 0);
  for (std::size_t j = 0; j < t.cols(); ++j) {
    mpq_class s = j >= k ? 1 : 0;
    for (std::size_t i = 0; i <= d; ++i) s -= t.a[i][j];
    t.reduced[j] = s;
  }
  t.solve();

  mpq_class objective = 0;
  for (std::size_t i = 0; i <= d; ++i)
    if (t.basis[i] >= k) objective += t.rhs[i];

  HullVerdict v;
  if (objective == 0) {
    v.contains_zero = true;
    v.weights.assign(k, Rational(0));
    for (std::size_t i = 0; i <= d; ++i)
      if (t.basis[i] < k) v.weights[t.basis[i]] = to_rational(t.rhs[i]);
  } else {
    // duals y_i = 1 - reduced cost of artificial i; y . A_j <= 0 with y_d > 0
    mpz_class scale = 1;
    std::vector<mpq_class> h(d);
    for (std::size_t i = 0; i < d; ++i) {
      h[i] = -(mpq_class(1) - t.reduced[k + i]);
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), h[i].get_den_mpz_t());
    }
    for (std::size_t i = 0; i < d; ++i) v.normal.push_back(to_rational(h[i] * scale));
  }
  v.verified = verify_certificate(points, v);
  if (!v.verified) throw ValidationError("hull certificate failed exact verification");
  return v;
}

bool verify_certificate(const std::vector<RationalPoint>& points, const HullVerdict& v) {
  if (points.empty()) return false;
  const std::size_t d = points.front().size();
  if (v.contains_zero) {
    if (v.weights.size() != points.size()) return false;
    Rational total(0);
    std::vector<Rational> sum(d, Rational(0));
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (v.weights[j].sign() < 0) return false;
      total += v.weights[j];
      for (std::size_t i = 0; i < d; ++i) sum[i] += v.weights[j] * points[j][i];
    }
    if (total != Rational(1)) return false;
    for (const auto& s : sum)
      if (!s.is_zero()) return false;
    return true;
  }
  if (v.normal.size() != d) return false;
  for (const auto& p : points) {
    Rational dot(0);
    for (std::size_t i = 0; i < d; ++i) dot += v.normal[i] * p[i];
    if (dot.sign() <= 0) return false;
  }
  return true;
}

}  // namespace lieprobe
