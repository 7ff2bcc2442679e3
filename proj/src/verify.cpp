#include "lieprobe/verify.hpp"

#include <gmpxx.h>

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "lieprobe/admissible.hpp"
#include "lieprobe/entry_polynomial.hpp"
#include "lieprobe/errors.hpp"
#include "lieprobe/generators.hpp"
#include "lieprobe/hull.hpp"

namespace lieprobe {
namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

class Recorder {
 public:
  Recorder(std::vector<CheckResult>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  void pass_if(const std::string& tag, bool ok, const std::string& detail) {
    out_.push_back({suite_, suite_ + "/" + tag, ok, detail});
  }
  // worst residual against a bound
  void bound(const std::string& tag, double worst, double limit) {
    pass_if(tag, worst < limit, "max residual " + sci(worst) + " (limit " + sci(limit) + ")");
  }
  // runs a check body, turning exceptions into failures
  void guard(const std::string& tag, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      pass_if(tag, false, std::string("exception: ") + e.what());
    }
  }

 private:
  std::vector<CheckResult>& out_;
  std::string suite_;
};

int uniform_int(RngStream& rng, int lo, int hi) {
  return lo + static_cast<int>(std::floor(rng.uniform() * (hi - lo + 1)));
}

Rational random_rational(RngStream& rng, int span, int den) {
  return Rational(uniform_int(rng, -span, span), uniform_int(rng, 1, den));
}

// random element of Q(zeta_L) for one L <= max_den
Cyclotomic random_cyclotomic(RngStream& rng, int max_den, int terms) {
  std::map<Rational, Rational> t;
  const int d = uniform_int(rng, 1, max_den);
  for (int k = 0; k < terms; ++k) t[Rational(uniform_int(rng, 0, d - 1), d)] += random_rational(rng, 5, 4);
  return Cyclotomic::from_terms(t);
}

ExactScalar random_exact(RngStream& rng) {
  ExactScalar x;
  for (int p = -1; p <= 1; ++p) x += ExactScalar::pi_power(p, random_cyclotomic(rng, 12, 3));
  return x;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

double angle_error(const EulerAngles& a, const EulerAngles& b) {
  const auto x = a.flat(), y = b.flat();
  double e = 0;
  for (std::size_t i = 0; i < x.size(); ++i) e = std::max(e, std::abs(x[i] - y[i]));
  return e;
}

EntryPolynomial random_entry_polynomial(RngStream& rng, int n, int degree, int terms) {
  EntryPolynomial p;
  for (int t = 0; t < terms; ++t) {
    EntryPolynomial m = EntryPolynomial::constant(ExactScalar(random_rational(rng, 3, 2)));
    const int d = uniform_int(rng, 0, degree);
    for (int k = 0; k < d; ++k)
      m = m * EntryPolynomial::entry(uniform_int(rng, 1, n), uniform_int(rng, 1, n), rng.uniform() < 0.5);
    p += m;
  }
  return p;
}

FiniteTypeFunction random_finite_type(RngStream& rng, Group g, int n, int monomials) {
  FiniteTypeFunction f(g, n);
  const VarLayout& l = f.layout();
  for (int m = 0; m < monomials; ++m) {
    MonomialKey k(l.key_size(), 0);
    for (int e = 0; e < l.n_exp; ++e) k[static_cast<std::size_t>(e)] = uniform_int(rng, -2, 2);
    for (int t = 0; t < l.n_trig; ++t) {
      k[static_cast<std::size_t>(l.n_exp + 2 * t)] = uniform_int(rng, 0, 3);
      k[static_cast<std::size_t>(l.n_exp + 2 * t + 1)] = uniform_int(rng, 0, 1);
    }
    f.add_term(k, ExactScalar(random_rational(rng, 4, 3)) * ExactScalar::root_of_unity(Rational(uniform_int(rng, 0, 3), 4)));
  }
  return f;
}

// evaluates a raw (possibly unnormalized) term map directly from its definition
Complex eval_raw(const VarLayout& l, const std::map<MonomialKey, ExactScalar>& raw, const EulerAngles& a) {
  Complex acc{0.0, 0.0};
  for (const auto& [key, c] : raw) {
    Complex v = c.to_double();
    for (int e = 0; e < l.n_exp; ++e)
      v *= std::polar(1.0, key[static_cast<std::size_t>(e)] * l.angle(a, l.exp_angle[static_cast<std::size_t>(e)]));
    for (int t = 0; t < l.n_trig; ++t) {
      const double x = l.angle(a, l.trig_angle[static_cast<std::size_t>(t)]);
      const double prim = l.group == Group::SU ? std::sin(x) : std::cos(x);
      const double sec = l.group == Group::SU ? std::cos(x) : std::sin(x);
      v *= std::pow(prim, key[static_cast<std::size_t>(l.n_exp + 2 * t)]) *
           std::pow(sec, key[static_cast<std::size_t>(l.n_exp + 2 * t + 1)]);
    }
    acc += v;
  }
  return acc;
}

void exact_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec(out, "exact");
  RngStream rng(opt.seed, 1);
  rec.guard("canonical-idempotent", [&] {
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      const Cyclotomic a = random_cyclotomic(rng, 24, 5);
      ok = Cyclotomic::from_terms(a.terms()) == a;
    }
    rec.pass_if("canonical-idempotent", ok, "200 random cyclotomic numbers");
  });
  rec.guard("embedding-homomorphism", [&] {
    constexpr int digits = 30;
    mpf_class worst(0, 256);
    auto parts = [](const ComplexDecimal& d) { return std::pair{mpf_class(d.re, 256), mpf_class(d.im, 256)}; };
    for (int t = 0; t < 50; ++t) {
      const ExactScalar a = random_exact(rng), b = random_exact(rng);
      const auto [ar, ai] = parts(a.to_complex(digits));
      const auto [br, bi] = parts(b.to_complex(digits));
      const auto [sr, si] = parts((a + b).to_complex(digits));
      const auto [pr, pi] = parts((a * b).to_complex(digits));
      const mpf_class e1 = abs(sr - ar - br) + abs(si - ai - bi);
      const mpf_class e2 = abs(pr - (ar * br - ai * bi)) + abs(pi - (ar * bi + ai * br));
      // product error scales with the factor sizes
      const mpf_class scale = 1 + abs(ar) + abs(ai) + abs(br) + abs(bi);
      worst = std::max({worst, mpf_class(e1), mpf_class(e2 / (scale * scale))});
    }
    rec.bound("embedding-homomorphism", worst.get_d(), std::pow(10.0, -digits + 2));
  });
  rec.guard("root-of-unity-product", [&] {
    bool ok = true;
    for (int t = 0; t < 2000 && ok; ++t) {
      const int d1 = uniform_int(rng, 1, 24), d2 = uniform_int(rng, 1, 24);
      const Rational r(uniform_int(rng, 0, d1 - 1), d1), s(uniform_int(rng, 0, d2 - 1), d2);
      ok = Cyclotomic::root_of_unity(r) * Cyclotomic::root_of_unity(s) == Cyclotomic::root_of_unity((r + s).frac());
    }
    rec.pass_if("root-of-unity-product", ok, "2000 random pairs with denominators up to 24");
  });
  rec.guard("self-difference-zero", [&] {
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      const ExactScalar a = random_exact(rng);
      ok = (a - a).is_zero();
    }
    rec.pass_if("self-difference-zero", ok, "200 random values");
  });
}

void generators_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec(out, "generators");
  RngStream rng(opt.seed, 2);
  rec.guard("anti-hermitian-traceless", [&] {
    double worst = 0;
    for (int n = 2; n <= opt.n; ++n)
      for (int j = 1; j < n * n; ++j) {
        const Matrix l = lambda(n, j);
        worst = std::max({worst, max_abs(l + l.adjoint()), std::abs(l.trace())});
      }
    rec.bound("anti-hermitian-traceless", worst, 1e-15);
  });
  rec.guard("trace-orthogonality", [&] {
    double worst = 0;
    for (int n = 2; n <= opt.n; ++n)
      for (int j = 1; j < n * n; ++j)
        for (int k = 1; k < n * n; ++k)
          if (j != k) worst = std::max(worst, std::abs(trace_pairing(n, j, k)));
    rec.bound("trace-orthogonality", worst, 1e-15);
  });
  rec.guard("exp-unitary", [&] {
    double worst = 0;
    for (int n = 2; n <= opt.n; ++n)
      for (int j = 1; j < n * n; ++j) {
        const Matrix u = exp_generator(n, j, 2 * kPi * rng.uniform());
        worst = std::max({worst, unitarity_defect(u), determinant_defect(u)});
      }
    rec.bound("exp-unitary", worst, 1e-12);
  });
  rec.guard("one-parameter-subgroup", [&] {
    double worst = 0;
    for (int n = 2; n <= opt.n; ++n)
      for (int j = 1; j < n * n; ++j) {
        const double s = 4 * rng.uniform() - 2, t = 4 * rng.uniform() - 2;
        worst = std::max(worst, max_abs(exp_generator(n, j, s + t) - exp_generator(n, j, s) * exp_generator(n, j, t)));
      }
    rec.bound("one-parameter-subgroup", worst, 1e-12);
  });
}

void euler_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec(out, "euler");
  RngStream rng(opt.seed, 3);
  for (auto g : {Group::SU, Group::SO}) {
    const std::string gn = group_name(g);
    rec.guard("forward-special-" + gn, [&] {
      double worst = 0;
      for (int n = 2; n <= opt.n; ++n)
        for (int t = 0; t < 100; ++t) {
          const Matrix u = forward(random_interior(g, n, rng));
          worst = std::max({worst, unitarity_defect(u), determinant_defect(u)});
        }
      rec.bound("forward-special-" + gn, worst, 1e-10);
    });
    rec.guard("round-trip-angles-" + gn, [&] {
      double worst = 0;
      for (int n = 2; n <= opt.n; ++n)
        for (int t = 0; t < 100; ++t) {
          const EulerAngles a = random_interior(g, n, rng);
          const Matrix u = forward(a);
          worst = std::max(worst, angle_error(a, g == Group::SU ? su_inverse(u) : so_inverse(u)));
        }
      rec.bound("round-trip-angles-" + gn, worst, 1e-9);
    });
    rec.guard("surjectivity-round-trip-matrix-" + gn, [&] {
      double worst = 0;
      for (int n = 2; n <= opt.n; ++n)
        for (int t = 0; t < 200; ++t) {
          const Matrix u = haar_random_matrix(g, n, rng);
          const EulerAngles a = g == Group::SU ? su_inverse(u) : so_inverse(u);
          if (!in_nominal_range(a)) throw ValidationError("inverse left the nominal angle box");
          worst = std::max(worst, max_abs(forward(a) - u));
        }
      rec.bound("surjectivity-round-trip-matrix-" + gn, worst, 1e-9);
    });
  }
  for (ShiftKind kind : {ShiftKind::left_d2, ShiftKind::right_dn, ShiftKind::mid_su2, ShiftKind::dn_full,
                         ShiftKind::dn1_full}) {
    const std::string tag = "shift-" + shift_kind_name(kind);
    rec.guard(tag, [&] {
      double worst = 0;
      int draws = 0;
      for (int n = 2; n <= opt.n; ++n) {
        if (kind == ShiftKind::dn1_full && n == 2) continue;
        for (int t = 0; t < 100; ++t, ++draws)
          worst = std::max(worst, shift_identity_residual(kind, n, 2 * kPi * rng.uniform(),
                                                          random_interior(Group::SU, n, rng)));
      }
      if (draws == 0) rec.pass_if(tag, true, "no applicable rank");
      else rec.bound(tag, worst, 1e-12);
    });
  }
  for (int relation = 1; relation <= 4; ++relation) {
    const std::string tag = "adjoint-relation-" + std::to_string(relation);
    rec.guard(tag, [&] {
      double worst = 0;
      int draws = 0;
      for (int n = 3; n <= opt.n; ++n)
        for (int q = 2; q < n; ++q)
          for (int p = relation <= 2 ? 0 : q + 1; p < (relation <= 2 ? 1 : n); ++p)
            for (int t = 0; t < 20; ++t, ++draws)
              worst = std::max(worst, ad_relation_residual(relation, p, q, n, 2 * kPi * rng.uniform(),
                                                           2 * kPi * rng.uniform()));
      if (draws == 0) rec.pass_if(tag, true, "no applicable rank (needs n >= " + std::to_string(relation <= 2 ? 3 : 4) + ")");
      else rec.bound(tag, worst, 1e-12);
    });
  }
}

void haar_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec(out, "haar");
  RngStream rng(opt.seed, 4);
  for (auto g : {Group::SU, Group::SO}) {
    const std::string tag = "normalization-identity-" + group_name(g);
    rec.guard(tag, [&] {
      bool ok = true;
      const int top = g == Group::SU ? opt.n : opt.n + 1;
      for (int n = 2; n <= top; ++n) ok = ok && normalization(g, n).exact_identity;
      rec.pass_if(tag, ok, "ranks 2.." + std::to_string(top));
    });
  }
  const int mid = std::min(opt.n, 3);
  for (auto g : {Group::SU, Group::SO}) {
    const std::string tag = "translation-invariance-" + group_name(g);
    rec.guard(tag, [&] {
      const Matrix y = haar_random_matrix(g, mid, rng);
      const EntryPolynomial p = random_entry_polynomial(rng, mid, 3, 4);
      const auto r = mc_integrate(
          [&](const EulerAngles& a, std::span<Complex> v) {
            const Matrix u = forward(a);
            v[0] = p.eval(u);
            v[1] = p.eval(y * u);
            v[2] = p.eval(u * y);
          },
          3, g, mid, opt.samples, opt.seed + 11);
      const double s = std::hypot(r.stderr_[0], r.stderr_[1]), s2 = std::hypot(r.stderr_[0], r.stderr_[2]);
      const double dl = std::abs(r.estimate[0] - r.estimate[1]), dr = std::abs(r.estimate[0] - r.estimate[2]);
      rec.pass_if(tag, dl < 5 * s + 1e-12 && dr < 5 * s2 + 1e-12,
                  "left " + sci(dl / std::max(s, 1e-300)) + " sigma, right " + sci(dr / std::max(s2, 1e-300)) +
                      " sigma");
    });
  }
  rec.guard("quadrature-vs-monte-carlo", [&] {
    double worst = 0;
    for (int n = 2; n <= mid; ++n)
      for (int t = 0; t < 3; ++t) {
        const EntryPolynomial p = random_entry_polynomial(rng, n, 4, 3);
        const auto fn = [&](const EulerAngles& a) { return p.eval(forward(a)); };
        const Complex q = quad_integrate(fn, Group::SU, n, n == 2 ? 16 : 6);
        const auto mc = mc_integrate(fn, Group::SU, n, opt.samples, opt.seed + 20 + static_cast<std::uint64_t>(t));
        worst = std::max(worst, std::abs(q - mc.first) / std::max(mc.second, 1e-12));
      }
    rec.bound("quadrature-vs-monte-carlo", worst, 4.0);
  });
  for (auto g : {Group::SU, Group::SO}) {
    const std::string tag = "density-from-jacobian-" + group_name(g);
    rec.guard(tag, [&] {
      double worst = 0;
      for (int n = g == Group::SU ? 2 : 3; n <= std::min(opt.n, 4); ++n) {
        double lo = 1e300, hi = 0;
        for (int t = 0; t < 10; ++t) {
          const EulerAngles a = random_interior(g, n, rng, 0.05);
          const double r = density_from_jacobian(a) / density(a);
          lo = std::min(lo, r);
          hi = std::max(hi, r);
        }
        worst = std::max(worst, (hi - lo) / lo);
      }
      rec.bound(tag, worst, 1e-4);
    });
  }
}

void finite_type_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec(out, "finite-type");
  RngStream rng(opt.seed, 5);
  const int top = std::min(opt.n, 4);
  rec.guard("symbolic-entries", [&] {
    double worst = 0;
    for (auto g : {Group::SU, Group::SO})
      for (int n = 2; n <= top; ++n) {
        const auto e = symbolic_entries(g, n);
        for (int t = 0; t < 20; ++t) {
          const EulerAngles a = sample(g, n, rng);
          const Matrix u = forward(a);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              worst = std::max(worst, std::abs(e[static_cast<std::size_t>(i * n + j)].eval(a) - u(i, j)));
        }
      }
    rec.bound("symbolic-entries", worst, 1e-12);
  });
  rec.guard("normalize-idempotent", [&] {
    double worst = 0;
    bool ok = true;
    for (auto g : {Group::SU, Group::SO})
      for (int n = 2; n <= top; ++n) {
        const VarLayout l = VarLayout::make(g, n);
        for (int t = 0; t < 10; ++t) {
          std::map<MonomialKey, ExactScalar> raw;
          for (int m = 0; m < 3; ++m) {
            MonomialKey k(l.key_size(), 0);
            for (int e = 0; e < l.n_exp; ++e) k[static_cast<std::size_t>(e)] = uniform_int(rng, -2, 2);
            for (int v = 0; v < l.n_trig; ++v) {
              k[static_cast<std::size_t>(l.n_exp + 2 * v)] = uniform_int(rng, 0, 3);
              k[static_cast<std::size_t>(l.n_exp + 2 * v + 1)] = uniform_int(rng, 0, 3);
            }
            raw[k] += ExactScalar(random_rational(rng, 4, 3));
          }
          const FiniteTypeFunction f = normalize(g, n, raw);
          ok = ok && normalize(g, n, f.terms()) == f;
          const EulerAngles a = sample(g, n, rng);
          worst = std::max(worst, std::abs(f.eval(a) - eval_raw(l, raw, a)));
        }
      }
    rec.pass_if("normalize-idempotent", ok && worst < 1e-12, "idempotent " + std::string(ok ? "yes" : "no") +
                                                                  ", evaluation residual " + sci(worst));
  });
  rec.guard("unitarity-relations", [&] {
    bool ok = true;
    for (auto g : {Group::SU, Group::SO})
      for (int n = 2; n <= std::min(top, 3); ++n)
        for (int i = 1; i <= n; ++i)
          for (int j = i; j <= n; ++j) {
            EntryPolynomial rel = EntryPolynomial::constant(ExactScalar(i == j ? -1 : 0));
            for (int k = 1; k <= n; ++k) rel += EntryPolynomial::entry(i, k) * EntryPolynomial::entry(j, k, true);
            ok = ok && expand(rel, g, n).is_zero();
          }
    rec.pass_if("unitarity-relations", ok, "rows of SU and SO up to rank " + std::to_string(std::min(top, 3)));
  });
}

void abelian_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec(out, "abelian");
  RngStream rng(opt.seed, 6);
  std::vector<std::pair<Group, int>> cases{{Group::SU, 2}, {Group::SO, 3}};
  if (opt.n >= 3) cases.emplace_back(Group::SU, 3);
  rec.guard("moment-equals-group-integral", [&] {
    double worst = 0;
    std::uint64_t stream = 100;
    for (auto [g, n] : cases)
      for (int t = 0; t < 5; ++t) {
        const FiniteTypeFunction f = random_finite_type(rng, g, n, 3);
        const CompiledFunction cf(f);
        const AdmissibleFunction a = tilde(f);
        const auto mc = mc_integrate(
            [&](const EulerAngles& ang, std::span<Complex> v) {
              v[0] = cf(ang);
              v[1] = v[0] * v[0];
              v[2] = v[1] * v[0];
            },
            3, g, n, opt.samples, opt.seed + stream++);
        for (unsigned p = 1; p <= 3; ++p) {
          const double d = std::abs(exact_moment(a, p).to_double() - mc.estimate[p - 1]);
          worst = std::max(worst, d / std::max(mc.stderr_[p - 1], 1e-12));
        }
      }
    rec.bound("moment-equals-group-integral", worst, 5.0);
  });
  rec.guard("tilde-multiplicative", [&] {
    bool ok = true;
    for (auto [g, n] : cases)
      for (int t = 0; t < 5; ++t) {
        const auto f = random_finite_type(rng, g, n, 3), h = random_finite_type(rng, g, n, 3);
        ok = ok && tilde(f * h) == tilde(f) * tilde(h);
      }
    rec.pass_if("tilde-multiplicative", ok, "exact comparison on random pairs");
  });
  rec.guard("spectrum-in-sumset", [&] {
    bool ok = true;
    for (auto [g, n] : cases)
      for (int t = 0; t < 3; ++t) {
        const AdmissibleFunction a = tilde(random_finite_type(rng, g, n, 3));
        const Spectrum base = spectrum(a);
        Spectrum sums = base;
        for (unsigned p = 2; p <= 3; ++p) {
          Spectrum next;
          for (const auto& x : sums)
            for (const auto& y : base) {
              ZExponent s = x;
              for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
              next.insert(std::move(s));
            }
          sums = std::move(next);
          for (const auto& m : spectrum(pow(a, p))) ok = ok && sums.count(m) == 1;
        }
      }
    rec.pass_if("spectrum-in-sumset", ok, "powers 2 and 3 of random functions");
  });
  rec.guard("hull-certificate", [&] {
    bool ok = true;
    for (int t = 0; t < 30; ++t) {
      const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 5));
      std::vector<RationalPoint> pts(static_cast<std::size_t>(uniform_int(rng, 1, 20)), RationalPoint(dim));
      for (auto& p : pts)
        for (auto& c : p) c = random_rational(rng, 6, 4);
      if (t % 2 == 1)
        for (auto& p : pts) p[0] = Rational(uniform_int(rng, 1, 6), uniform_int(rng, 1, 4));
      ok = ok && verify_certificate(pts, hull_contains_zero(pts));
    }
    rec.pass_if("hull-certificate", ok, "30 random spectra");
  });
  rec.guard("constant-moment-one", [&] {
    bool ok = true;
    for (auto g : {Group::SU, Group::SO})
      for (int n = 2; n <= std::min(opt.n, 4); ++n)
        for (unsigned p = 1; p <= 3; ++p)
          ok = ok && exact_moment(AdmissibleFunction::constant(g, n, ExactScalar(1)), p) == ExactScalar(1);
    rec.pass_if("constant-moment-one", ok, "P = 1..3");
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exact", "generators", "euler", "haar", "finite-type", "abelian"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt) {
  if (opt.n < 2) throw ValidationError("rank must be at least 2");
  if (opt.n > Limits::global().max_rank)
    throw ResourceGuardError("rank " + std::to_string(opt.n) + " exceeds configured maximum " +
                             std::to_string(Limits::global().max_rank));
  std::vector<CheckResult> out;
  const bool all = name == "all";
  bool known = all;
  auto run = [&](const char* suite, void (*fn)(const VerifyOptions&, std::vector<CheckResult>&)) {
    if (all || name == suite) {
      known = true;
      fn(opt, out);
    }
  };
  run("exact", exact_suite);
  run("generators", generators_suite);
  run("euler", euler_suite);
  run("haar", haar_suite);
  run("finite-type", finite_type_suite);
  run("abelian", abelian_suite);
  if (!known) throw ValidationError("unknown suite '" + name + "'");
  return out;
}

EulerAngles random_interior(Group g, int n, RngStream& rng, double margin) {
  auto draw = [&] { return margin + (1 - 2 * margin) * rng.uniform(); };
  EulerAngles a = EulerAngles::zeros(g, n);
  for (std::size_t i = 0; i < a.phi.size(); ++i) {
    const auto r = phi_range(g, n, static_cast<int>(i));
    a.phi[i] = r.lo + draw() * (r.hi - r.lo);
  }
  for (auto& x : a.psi) x = draw() * psi_range().hi;
  for (std::size_t j = 0; j < a.omega.size(); ++j) a.omega[j] = draw() * omega_range(static_cast<int>(j) + 1).hi;
  return a;
}

Matrix haar_random_matrix(Group g, int n, RngStream& rng) {
  std::normal_distribution<double> normal;
  Matrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      z(i, j) = g == Group::SU ? Complex(normal(rng.engine()), normal(rng.engine())) : Complex(normal(rng.engine()), 0);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
  }
  if (g == Group::SU) {
    q *= std::polar(1.0, -std::arg(q.determinant()) / n);
  } else {
    if (q.determinant().real() < 0) q.col(0) *= -1.0;
    q = q.real().cast<Complex>();
  }
  return q;
}

}  // namespace lieprobe
