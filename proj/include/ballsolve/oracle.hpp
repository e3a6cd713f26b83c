// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "ballsolve/geometry.hpp"
#include "ballsolve/helmholtz.hpp"
#include "ballsolve/quadrature.hpp"
#include "ballsolve/types.hpp"

namespace ballsolve::oracle {

// Independent numerical validators. Nothing here calls the closed-form
// evaluators; every value comes from quadrature, sampling or stencils.

using QuadratureResult = quadrature::Result;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Reduced 1D form of the convolution of exp(i kappa |x|)/(4 pi |x|) with
/// chi_B: int e^{i kappa z} / (4 pi z) A(z) dz, where A(z) is the area of the
/// sphere of radius z about x inside B (full sphere on [0, r - d], cap after).
QuadratureResult reduced_integral_helmholtz(double d, double r, const WaveNumber& wn,
                                            double rel_tol = 1e-12);

/// Reduced 1D form of the free propagator convolution:
/// (e^{-i3pi/4} / pi^{3/2}) M^{3/2} int e^{i M z^2} A(z) dz, split at the
/// zeros of the phase.
QuadratureResult reduced_integral_schrodinger(double d, double r, double mt,
                                              double rel_tol = 1e-12);

/// Volume of B recovered from the cap reduction: int A(z) dz.
QuadratureResult reduced_volume(double d, double r, double rel_tol = 1e-12);

/// Helmholtz solution for radial data f on B(x0, R) at distance d from x0,
/// integrating f against the single-layer potential of each sphere |y - x0| = rho.
QuadratureResult radial_reference_helmholtz(const std::function<double(double)>& f, double R,
                                            std::span<const double> kinks, double d,
                                            const WaveNumber& wn, double rel_tol = 1e-11);

/// Free Schrodinger solution for radial data f on B(x0, R), same construction.
QuadratureResult radial_reference_schrodinger(const std::function<double(double)>& f, double R,
                                              std::span<const double> kinks, double d, double mt,
                                              double rel_tol = 1e-11);

/// Deterministic uniform generator. The engine output is fixed by the
/// standard; the bit-to-double conversion is done here rather than through
/// std::uniform_real_distribution, whose output varies between libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform direction on the unit sphere.
  Vec3 direction();
  /// Uniform point in the unit ball.
  Vec3 in_unit_ball();

 private:
  std::mt19937_64 engine_;
};

/// Seed of lane `lane` derived from a base seed by SplitMix64.
std::uint64_t lane_seed(std::uint64_t seed, unsigned lane);

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

/// Monte Carlo estimate of int_{|y|=1} chi_B(x + ct y) dS(y), a number in
/// [0, 4 pi]. Samples run in fixed lanes, combined in lane order.
MonteCarloEstimate spherical_mean(const Vec3& point, const Ball& ball, double ct,
                                  std::int64_t n_samples, std::uint64_t seed = kDefaultSeed);

/// Monte Carlo estimate of int_B kernel(y) dy with uniform samples in B.
/// The error estimate is one standard error of the complex mean.
QuadratureResult monte_carlo_3d(const std::function<Complex(const Vec3&)>& kernel,
                                const Ball& ball, std::int64_t n,
                                std::uint64_t seed = kDefaultSeed);

/// Finite-difference operator checked by fd_residual.
struct FdOperator {
  enum class Kind { Helmholtz, Wave };
  Kind kind = Kind::Helmholtz;
  Complex k_squared{0.0, 0.0};  // Helmholtz: (Lap + k^2) u
  double c = 1.0;               // Wave: u_tt - c^2 Lap u, time step h / c
};

struct FdPoint {
  Vec3 x{};
  double t = 0.0;
};

struct FdGrid {
  std::vector<FdPoint> points;
  double h = 0.05;  // coarsest step; levels use h, h/2, h/4, ...
  int levels = 3;
  /// Returns true if a stencil of the given reach around (x, t) touches a
  /// singular set. Any such point makes the grid invalid.
  std::function<bool(const Vec3&, double, double)> excluded;
};

struct FdReport {
  std::vector<double> steps;
  std::vector<double> max_errors;  // max |residual - expected| per level
  std::vector<double> orders;      // log2(e_l / e_{l+1})
  std::vector<Complex> finest_residuals;
};

/// 7-point Laplacian (plus the 3-point second time difference for the wave
/// operator) applied to a sampled field, compared with the expected right-hand
/// side at each grid point and step level.
FdReport fd_residual(const std::function<Complex(const Vec3&, double)>& field,
                     const FdOperator& op,
                     const std::function<Complex(const Vec3&, double)>& expected,
                     const FdGrid& grid);

struct L2Result {
  double norm = 0.0;
  double norm_squared = 0.0;
  double abs_error_estimate = 0.0;  // on norm_squared
  std::int64_t evaluations = 0;
};

/// L2 norm over the ball of radius L of a field radial about its center:
/// sqrt(4 pi int_0^L |g(rho)|^2 rho^2 drho). `breaks` carries known kinks or
/// jumps; max_width caps the panel width for oscillatory fields.
L2Result l2_norm_radial(const std::function<Complex(double)>& g, double L,
                        std::span<const double> breaks, double max_width,
                        double rel_tol = 1e-10);

}  // namespace ballsolve::oracle
