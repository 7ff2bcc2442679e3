#include "lieprobe/haar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kChunk = 8192;

Rational factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f, mpz_class(1));
}

void check_level_rank(int n) {
  if (n < 2) throw ValidationError("rank must be at least 2");
  if (n > Limits::global().max_rank)
    throw ResourceGuardError("rank " + std::to_string(n) + " exceeds configured maximum " +
                             std::to_string(Limits::global().max_rank));
}

// Integral over one level's coordinates of that level's density factor.
ExactScalar level_integral(Group g, int m) {
  if (g == Group::SU) {
    // leading phi on [0, pi], m-2 further phi on [0, 2 pi], omega_{m-1} on [0, 2 pi/(m-1)]
    ExactScalar out = ExactScalar::pi_power(1) * ExactScalar::pi_power(m - 2, Cyclotomic(Rational(1L << (m - 2)))) *
                      ExactScalar::pi_power(1, Cyclotomic(Rational(2, m - 1)));
    out *= sin_cos_integral(2 * m - 3, 1);
    for (int j = 1; j <= m - 2; ++j) out *= sin_cos_integral(1, 2 * j - 1);
    return out;
  }
  // leading phi on [0, 2 pi]; phi_j, j >= 2, on [0, pi] with weight sin^{j-1}
  ExactScalar out = ExactScalar::pi_power(1, Cyclotomic(Rational(2)));
  for (int j = 2; j <= m - 1; ++j) out *= ExactScalar(2) * sin_cos_integral(j - 1, 0);
  return out;
}

ExactScalar closed_form_constant(Group g, int m) {
  if (g == Group::SU) return ExactScalar::pi_power(-m, Cyclotomic(Rational(m - 1) * factorial(m - 1)));
  HalfPiValue v = gamma_half(m);
  v.sqrt_pi_power -= m;
  v.q = v.q / Rational(2);
  return v.exact();
}

ExactScalar reference_constant(Group g, int m) {
  if (g == Group::SU) return ExactScalar::pi_power(-m, Cyclotomic(factorial(m - 1) * Rational(m - 1) / Rational(2)));
  return closed_form_constant(Group::SO, m);
}

double sample_sin_power(int power, RngStream& rng) {
  // rejection from uniform on [0, pi] with acceptance sin^power
  for (;;) {
    const double phi = kPi * rng.uniform();
    if (rng.uniform() < std::pow(std::sin(phi), power)) return phi;
  }
}

struct Welford {
  std::size_t count = 0;
  Complex mean{0.0, 0.0};
  double m2 = 0.0;
  void add(Complex x) {
    ++count;
    const Complex delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += std::real(std::conj(delta) * (x - mean));
  }
  void merge(const Welford& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(count + o.count);
    const Complex delta = o.mean - mean;
    mean += delta * (static_cast<double>(o.count) / total);
    m2 += o.m2 + std::norm(delta) * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }
};

bool near_boundary(const EulerAngles& a) {
  constexpr double eps = 1e-6;
  if (a.group == Group::SU) {
    for (double p : a.psi)
      if (std::abs(std::sin(p)) < eps || std::abs(std::cos(p)) < eps) return true;
    return false;
  }
  for (std::size_t i = 0; i < a.phi.size(); ++i) {
    const auto r = phi_range(Group::SO, a.n, static_cast<int>(i));
    if (r.hi < kTwoPi && std::abs(std::sin(a.phi[i])) < eps) return true;
  }
  return false;
}

}  // namespace

ExactScalar HalfPiValue::exact() const {
  if (sqrt_pi_power % 2 != 0) throw ValidationError("odd power of sqrt(pi) is outside the exact ring");
  return ExactScalar::pi_power(sqrt_pi_power / 2, Cyclotomic(q));
}

HalfPiValue gamma_half(int twice) {
  if (twice <= 0) throw ValidationError("gamma argument must be positive");
  if (twice % 2 == 0) return {factorial(twice / 2 - 1), 0};
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const int k = (twice - 1) / 2;
  mpz_class four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
  return {factorial(2 * k) / (Rational(four_k, mpz_class(1)) * factorial(k)), 1};
}

HalfPiValue beta_half(int twice_a, int twice_b) {
  return gamma_half(twice_a) * gamma_half(twice_b) / gamma_half(twice_a + twice_b);
}

ExactScalar sin_cos_integral(int a, int b) {
  if (a < 0 || b < 0) throw ValidationError("negative trigonometric power");
  HalfPiValue v = beta_half(a + 1, b + 1);
  v.q = v.q / Rational(2);
  return v.exact();
}

double density(const EulerAngles& a) {
  double d = 1.0;
  for (int m = a.n; m >= 2; --m) {
    const int off = level_offset(a.n, m);
    if (a.group == Group::SU) {
      const double last = a.psi[static_cast<std::size_t>(off + m - 2)];
      d *= std::cos(last) * std::pow(std::sin(last), 2 * m - 3);
      for (int j = 1; j <= m - 2; ++j) {
        const double p = a.psi[static_cast<std::size_t>(off + j - 1)];
        d *= std::pow(std::cos(p), 2 * j - 1) * std::sin(p);
      }
    } else {
      for (int j = 2; j <= m - 1; ++j) d *= std::pow(std::sin(a.phi[static_cast<std::size_t>(off + j - 1)]), j - 1);
    }
  }
  return d;
}

NormalizationReport normalization(Group g, int n) {
  check_level_rank(n);
  NormalizationReport r{g, n, {}, ExactScalar(1), ExactScalar(1), ExactScalar(1), ExactScalar(1), true};
  for (int m = n; m >= 2; --m) {
    LevelConstant lc;
    lc.level = m;
    lc.domain_integral = level_integral(g, m);
    lc.computed = lc.domain_integral.inverse();
    lc.closed_form = closed_form_constant(g, m);
    lc.reference = reference_constant(g, m);
    lc.ratio = lc.computed / lc.reference;
    r.exact_identity = r.exact_identity && lc.closed_form * lc.domain_integral == ExactScalar(1);
    r.computed_total *= lc.computed;
    r.domain_integral_total *= lc.domain_integral;
    r.reference_total *= lc.reference;
    r.levels.push_back(lc);
  }
  r.ratio_total = r.computed_total / r.reference_total;
  r.exact_identity = r.exact_identity && r.computed_total * r.domain_integral_total == ExactScalar(1);
  return r;
}

ExactScalar haar_constant(Group g, int n) {
  check_level_rank(n);
  ExactScalar c(1);
  for (int m = n; m >= 2; --m) c *= level_integral(g, m).inverse();
  return c;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t substream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(substream), static_cast<std::uint32_t>(substream >> 32)};
  engine_.seed(seq);
}

double RngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

void sample_into(EulerAngles& a, RngStream& rng) {
  for (int m = a.n; m >= 2; --m) {
    const auto off = static_cast<std::size_t>(level_offset(a.n, m));
    if (a.group == Group::SU) {
      a.phi[off] = kPi * rng.uniform();
      for (int i = 1; i <= m - 2; ++i) a.phi[off + static_cast<std::size_t>(i)] = kTwoPi * rng.uniform();
      for (int j = 1; j <= m - 2; ++j)
        a.psi[off + static_cast<std::size_t>(j - 1)] = std::acos(std::pow(1.0 - rng.uniform(), 1.0 / (2 * j)));
      a.psi[off + static_cast<std::size_t>(m - 2)] = std::asin(std::pow(rng.uniform(), 1.0 / (2 * m - 2)));
      a.omega[static_cast<std::size_t>(m - 2)] = kTwoPi / (m - 1) * rng.uniform();
    } else {
      a.phi[off] = kTwoPi * rng.uniform();
      for (int j = 2; j <= m - 1; ++j) a.phi[off + static_cast<std::size_t>(j - 1)] = sample_sin_power(j - 1, rng);
    }
  }
}

EulerAngles sample(Group g, int n, RngStream& rng) {
  EulerAngles a = EulerAngles::zeros(g, n);
  sample_into(a, rng);
  return a;
}

McResult mc_integrate(const MultiIntegrand& fn, std::size_t outputs, Group g, int n, std::size_t samples,
                      std::uint64_t seed, unsigned threads) {
  if (samples < 2) throw ValidationError("Monte Carlo needs at least 2 samples");
  EulerAngles::zeros(g, n);
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::vector<Welford>> stats(chunks, std::vector<Welford>(outputs));
  auto run_chunk = [&](std::size_t c) {
    RngStream rng(seed, c);
    EulerAngles a = EulerAngles::zeros(g, n);
    std::vector<Complex> values(outputs);
    const std::size_t count = std::min(kChunk, samples - c * kChunk);
    for (std::size_t s = 0; s < count; ++s) {
      sample_into(a, rng);
      fn(a, values);
      for (std::size_t k = 0; k < outputs; ++k) stats[c][k].add(values[k]);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t c = t; c < chunks; c += threads) run_chunk(c);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  McResult out;
  out.samples = samples;
  for (std::size_t k = 0; k < outputs; ++k) {
    Welford total;
    for (std::size_t c = 0; c < chunks; ++c) total.merge(stats[c][k]);
    const double var = total.m2 / static_cast<double>(total.count - 1);
    out.estimate.push_back(total.mean);
    out.stderr_.push_back(std::sqrt(var / static_cast<double>(total.count)));
  }
  return out;
}

std::pair<Complex, double> mc_integrate(const Integrand& fn, Group g, int n, std::size_t samples,
                                        std::uint64_t seed, unsigned threads) {
  const auto r = mc_integrate([&](const EulerAngles& a, std::span<Complex> out) { out[0] = fn(a); }, 1, g, n,
                              samples, seed, threads);
  return {r.estimate[0], r.stderr_[0]};
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw ValidationError("quadrature order must be positive");
  // Golub-Welsch: eigen-decomposition of the Jacobi matrix of the Legendre recurrence.
  Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jm(k, k - 1) = b;
    jm(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
  nodes.resize(static_cast<std::size_t>(order));
  weights.resize(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    nodes[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
    const double v = es.eigenvectors()(0, k);
    weights[static_cast<std::size_t>(k)] = 2.0 * v * v;
  }
}

Complex quad_integrate(const Integrand& fn, Group g, int n, int order) {
  const int dim = group_dimension(g, n);
  if (dim > 8) throw ValidationError("quadrature supports group dimension at most 8");
  if (order < 1) throw ValidationError("quadrature order must be positive");
  struct Axis {
    std::vector<double> x, w;
  };
  std::vector<double> gl_x, gl_w;
  gauss_legendre(order, gl_x, gl_w);
  auto make_axis = [&](double lo, double hi, bool periodic) {
    Axis ax;
    for (int k = 0; k < order; ++k) {
      if (periodic) {
        ax.x.push_back(lo + (hi - lo) * k / order);
        ax.w.push_back((hi - lo) / order);
      } else {
        const auto kk = static_cast<std::size_t>(k);
        ax.x.push_back(lo + (hi - lo) * (gl_x[kk] + 1.0) / 2.0);
        ax.w.push_back((hi - lo) / 2.0 * gl_w[kk]);
      }
    }
    return ax;
  };
  EulerAngles a = EulerAngles::zeros(g, n);
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < a.phi.size(); ++i) {
    const auto r = phi_range(g, n, static_cast<int>(i));
    axes.push_back(make_axis(r.lo, r.hi, r.hi == kTwoPi));
  }
  for (std::size_t i = 0; i < a.psi.size(); ++i) axes.push_back(make_axis(0.0, kPi / 2, false));
  for (std::size_t j = 0; j < a.omega.size(); ++j) axes.push_back(make_axis(0.0, kTwoPi / static_cast<double>(j + 1), j == 0));

  const double points = std::pow(static_cast<double>(order), dim);
  if (points > 5e7) throw ResourceGuardError("quadrature grid too large; lower the order");
  const double norm = haar_constant(g, n).to_double().real();
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  std::vector<double> flat(static_cast<std::size_t>(dim));
  Complex acc{0.0, 0.0};
  for (;;) {
    double w = 1.0;
    for (std::size_t d = 0; d < idx.size(); ++d) {
      flat[d] = axes[d].x[static_cast<std::size_t>(idx[d])];
      w *= axes[d].w[static_cast<std::size_t>(idx[d])];
    }
    std::size_t pos = 0;
    for (auto* v : {&a.phi, &a.psi, &a.omega})
      for (auto& x : *v) x = flat[pos++];
    acc += fn(a) * (w * density(a));
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == order) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  return acc * norm;
}

double density_from_jacobian(const EulerAngles& a) {
  if (near_boundary(a)) throw ValidationError("angles too close to the domain boundary for the Jacobian oracle");
  const std::vector<double> x = a.flat();
  const auto dim = x.size();
  auto f_at = [&](const std::vector<double>& v) { return forward(EulerAngles::from_flat(a.group, a.n, v)); };
  const Matrix f = f_at(x);
  const Matrix finv = f.adjoint();
  auto derivative = [&](std::size_t k, double h) {
    std::vector<double> p = x, m = x;
    p[k] += h;
    m[k] -= h;
    return Matrix((f_at(p) - f_at(m)) / (2.0 * h));
  };
  constexpr double h = 1e-5;
  std::vector<Matrix> forms;
  for (std::size_t k = 0; k < dim; ++k) {
    const Matrix d1 = derivative(k, h);
    const Matrix d2 = derivative(k, h / 2);
    const bool refine = (d1 - d2).cwiseAbs().maxCoeff() > 1e-9;
    forms.push_back(finv * (refine ? Matrix((4.0 * d2 - d1) / 3.0) : d1));
  }
  Eigen::MatrixXd metric(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      const double v = -0.5 * (forms[i] * forms[j]).trace().real();
      metric(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      metric(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  const double det = metric.determinant();
  if (!(det > 0)) throw ValidationError("degenerate parametrization metric");
  return std::sqrt(det);
}

}  // namespace lieprobe
