// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "ballsolve/geometry.hpp"
#include "ballsolve/types.hpp"

namespace ballsolve {

/// Mass, reduced Planck constant and time for the free Schrodinger flow
/// i hbar u_t + hbar^2/(2m) Lap u = 0. All three must be positive.
class SchrodingerParams {
 public:
  SchrodingerParams(double mass, double hbar, double t);

  /// Units m = hbar = 1 with t chosen so that m / (2 hbar t) == mt exactly.
  static SchrodingerParams from_mt(double mt);

  double mass() const { return mass_; }
  double hbar() const { return hbar_; }
  double t() const { return t_; }
  /// M_t = m / (2 hbar t), units of 1/length^2.
  double mt() const { return mt_; }

 private:
  SchrodingerParams(double mass, double hbar, double t, double mt);

  double mass_;
  double hbar_;
  double t_;
  double mt_;
};

struct WaveFunctionSample {
  Complex value;
  bool normalized = false;
};

struct SchrodingerSource {
  Annulus shape;
  Complex weight{1.0, 0.0};
};

namespace schrodinger {

/// Wave function at distance d from the ball center for initial data chi_B:
///
///   1/2 erf(w s (d - r)) - 1/2 erf(w s (d + r))
///     + e^{-i3pi/4} (e^{iM(d-r)^2} - e^{iM(d+r)^2}) / (2 s d sqrt(pi)),
///
/// with w = e^{i3pi/4}, M = M_t and s = sqrt(M). One expression covers
/// interior and exterior points; d < 1e-9 r routes to eval_center.
Complex eval(double d, double r, const SchrodingerParams& p);

/// Limit d -> 0: -erf(w s r) + 2 w r s / sqrt(pi) e^{iMr^2}.
Complex eval_center(double r, const SchrodingerParams& p);

/// Initial data (t = 0), which the propagator formula cannot represent.
double initial_value(double d, double r);

/// Multiply by (4 pi r^3 / 3)^{-1/2} so |u|^2 integrates to one.
/// Throws if the sample is already normalized.
WaveFunctionSample normalize(WaveFunctionSample sample, double r);

/// (4 pi r^3 / 3)^{-1/2}
double normalization_factor(double r);

Complex eval(const Vec3& point, const Ball& ball, const SchrodingerParams& p);
Complex eval(const Vec3& point, const Annulus& shell, const SchrodingerParams& p);
Complex eval(const Vec3& point, std::span<const SchrodingerSource> sources,
             const SchrodingerParams& p);

}  // namespace schrodinger
}  // namespace ballsolve
