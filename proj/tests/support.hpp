#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "lieprobe/finite_type.hpp"
#include "lieprobe/hull.hpp"

namespace lieprobe::testing {

/// Random canonical finite-type function with small exponents and
/// coefficients in Q(zeta_4).
inline FiniteTypeFunction random_function(Group g, int n, std::mt19937_64& rng, int monomials) {
  FiniteTypeFunction f(g, n);
  const VarLayout& l = f.layout();
  std::uniform_int_distribution<int> ek(-2, 2), tp(0, 3), tq(0, 2), num(-4, 4);
  for (int m = 0; m < monomials; ++m) {
    MonomialKey k(l.key_size(), 0);
    for (int e = 0; e < l.n_exp; ++e) k[static_cast<std::size_t>(e)] = ek(rng);
    for (int t = 0; t < l.n_trig; ++t) {
      k[static_cast<std::size_t>(l.n_exp + 2 * t)] = tp(rng);
      k[static_cast<std::size_t>(l.n_exp + 2 * t + 1)] = tq(rng);
    }
    f.add_term(k, ExactScalar(Rational(num(rng), 3)) * ExactScalar::root_of_unity(Rational(tp(rng), 4)));
  }
  return f;
}

/// Random rational points with coordinates p/q, |p| <= 6, 1 <= q <= 4.
/// With `shift`, every first coordinate is moved up by a positive amount.
inline std::vector<RationalPoint> random_points(std::mt19937_64& rng, std::size_t dim, std::size_t count,
                                                bool shift) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), off(1, 8);
  const Rational lift = shift ? Rational(off(rng), 2) : Rational(0);
  std::vector<RationalPoint> pts(count, RationalPoint(dim));
  for (auto& p : pts) {
    for (auto& c : p) c = Rational(num(rng), den(rng));
    if (shift && dim > 0) p[0] = Rational(std::abs(num(rng)), den(rng)) + lift;
  }
  return pts;
}

/// Brute-force oracle for 0 in conv(points): tries every subset of at most
/// dim + 1 points whose lifted vectors (m, 1) are independent and solves for
/// its unique barycentric coordinates.
inline bool hull_oracle(const std::vector<RationalPoint>& points) {
  const std::size_t d = points.front().size();
  const std::size_t k = points.size();
  const std::size_t max_size = std::min(k, d + 1);
  std::vector<std::size_t> idx;
  auto solve = [&]() {
    const std::size_t s = idx.size();
    std::vector<std::vector<mpq_class>> a(d + 1, std::vector<mpq_class>(s + 1));
    for (std::size_t c = 0; c < s; ++c) {
      for (std::size_t r = 0; r < d; ++r) a[r][c] = points[idx[c]][r].mpq();
      a[d][c] = 1;
    }
    a[d][s] = 1;
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(s);
    for (std::size_t c = 0; c < s; ++c) {
      std::size_t p = row;
      while (p <= d && a[p][c] == 0) ++p;
      if (p > d) return false;  // dependent columns
      std::swap(a[p], a[row]);
      for (std::size_t r = 0; r <= d; ++r) {
        if (r == row || a[r][c] == 0) continue;
        const mpq_class f = a[r][c] / a[row][c];
        for (std::size_t j = c; j <= s; ++j) a[r][j] -= f * a[row][j];
      }
      pivot_row[c] = row++;
    }
    for (std::size_t r = row; r <= d; ++r)
      if (a[r][s] != 0) return false;  // inconsistent
    for (std::size_t c = 0; c < s; ++c)
      if (a[pivot_row[c]][s] / a[pivot_row[c]][c] < 0) return false;
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (!idx.empty() && solve()) return true;
    if (idx.size() == max_size) return false;
    for (std::size_t j = start; j < k; ++j) {
      idx.push_back(j);
      if (rec(j + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace lieprobe::testing
