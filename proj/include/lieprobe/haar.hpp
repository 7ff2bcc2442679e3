#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "lieprobe/euler.hpp"
#include "lieprobe/exact_scalar.hpp"

namespace lieprobe {

/// Gamma(k/2) * pi^{-h/2} for the odd/even k bookkeeping: rational part and
/// the power of sqrt(pi) that multiplies it.
struct HalfPiValue {
  Rational q;
  int sqrt_pi_power = 0;
  HalfPiValue operator*(const HalfPiValue& o) const { return {q * o.q, sqrt_pi_power + o.sqrt_pi_power}; }
  HalfPiValue operator/(const HalfPiValue& o) const { return {q / o.q, sqrt_pi_power - o.sqrt_pi_power}; }
  /// Throws if the sqrt(pi) power is odd.
  ExactScalar exact() const;
};

/// Gamma(twice / 2) for a positive integer `twice`.
HalfPiValue gamma_half(int twice);
/// Beta(a/2, b/2) for positive integers a, b.
HalfPiValue beta_half(int twice_a, int twice_b);
/// Integral of sin^a(t) cos^b(t) over [0, pi/2].
ExactScalar sin_cos_integral(int a, int b);

/// Unnormalized Haar density in Euler coordinates (SU or SO, per the angles).
double density(const EulerAngles& a);

struct LevelConstant {
  int level;
  ExactScalar domain_integral;  // integral of this level's density factor over its coordinates
  ExactScalar computed;         // 1 / domain_integral
  ExactScalar closed_form;      // hand-derived closed form for the computed constant
  ExactScalar reference;        // published constant C_n
  ExactScalar ratio;            // computed / reference
};

struct NormalizationReport {
  Group group;
  int n;
  std::vector<LevelConstant> levels;  // level n first, down to 2
  ExactScalar computed_total;
  ExactScalar domain_integral_total;
  ExactScalar reference_total;
  ExactScalar ratio_total;
  /// computed_total * domain_integral_total == 1 and closed forms agree.
  bool exact_identity = false;
};

NormalizationReport normalization(Group g, int n);
/// Product of the computed per-level constants.
ExactScalar haar_constant(Group g, int n);

/// Deterministic random stream: mt19937_64 with 53-bit uniforms in [0, 1).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t substream = 0);
  double uniform();
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

EulerAngles sample(Group g, int n, RngStream& rng);
/// Draws Haar-distributed angles into an existing record of the right shape.
void sample_into(EulerAngles& a, RngStream& rng);

struct McResult {
  std::vector<Complex> estimate;
  std::vector<double> stderr_;
  std::size_t samples = 0;
};

/// Evaluates several integrands per sample point; the callback writes one
/// value per output slot.
using MultiIntegrand = std::function<void(const EulerAngles&, std::span<Complex>)>;
using Integrand = std::function<Complex(const EulerAngles&)>;

/// Haar Monte Carlo over independently seeded sub-streams of fixed size.
/// Results depend only on (seed, samples), not on the thread count.
McResult mc_integrate(const MultiIntegrand& fn, std::size_t outputs, Group g, int n, std::size_t samples,
                      std::uint64_t seed, unsigned threads = 0);
std::pair<Complex, double> mc_integrate(const Integrand& fn, Group g, int n, std::size_t samples,
                                        std::uint64_t seed, unsigned threads = 0);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Tensor quadrature (trapezoid on full-period coordinates, Gauss-Legendre
/// elsewhere) times the density and the computed normalization.
/// Group dimension must be at most 8.
Complex quad_integrate(const Integrand& fn, Group g, int n, int order);

/// sqrt(det M) for M_ab = -1/2 Re Tr(F^-1 dF/da F^-1 dF/db), by central
/// differences with a Richardson correction.
double density_from_jacobian(const EulerAngles& a);

}  // namespace lieprobe
