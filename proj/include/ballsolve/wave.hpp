// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "ballsolve/geometry.hpp"
#include "ballsolve/types.hpp"

namespace ballsolve {

/// Wave speed c > 0 and time t >= 0.
struct WaveParams {
  double c = 1.0;
  double t = 0.0;

  WaveParams() = default;
  WaveParams(double speed, double time);
};

/// Regular part of a wave solution plus the coefficient of any Dirac term
/// delta(r - ct) supported at the evaluation point. The Dirac term has no
/// pointwise value; `singular` marks that it is present.
struct WaveSample {
  double value = 0.0;
  bool singular = false;
  double delta_coefficient = 0.0;
};

/// Weights of the initial data (u, u_t) = (wf chi, wg chi).
struct CauchyWeights {
  double displacement = 1.0;
  double velocity = 0.0;
};

struct WaveSource {
  Annulus shape;
  double weight = 1.0;
};

namespace wave {

// Indicator intervals chi_[a,b](ct) are closed. Where the full-sphere
// interval [0, r-d] and the cap interval [r-d, r+d] meet, the shared
// endpoint belongs to the full-sphere interval only.

/// Data (u, u_t) = (chi_B, 0).
///   exterior: (d - ct)/(2d) on ct in [d-r, d+r]
///   interior: 1 on [0, r-d], (d - ct)/(2d) on (r-d, r+d]
///   center:   1 on [0, r], plus -t delta(r - ct)
WaveSample eval_displacement(double d, double r, const WaveParams& p,
                             double tol = kDefaultBranchTol);

/// Data (u, u_t) = (0, chi_B).
///   exterior: (t/2)(1 - ((ct)^2 + d^2 - r^2)/(2dct)) on [d-r, d+r]
///   interior: t on [0, r-d], the same cap factor on (r-d, r+d]
///   center:   t on [0, r]
/// The cap factor is evaluated as (r^2 - (ct - d)^2)/(4dc), which is
/// regular at t = 0.
WaveSample eval_velocitydata(double d, double r, const WaveParams& p,
                             double tol = kDefaultBranchTol);

/// wf * displacement + wg * velocity-data solution.
WaveSample eval_cauchy(double d, double r, const WaveParams& p, CauchyWeights w,
                       double tol = kDefaultBranchTol);

/// Annulus data: outer-ball solution minus inner-ball solution.
WaveSample eval(const Vec3& point, const Annulus& shell, const WaveParams& p, CauchyWeights w,
                double tol = kDefaultBranchTol);

WaveSample eval(const Vec3& point, std::span<const WaveSource> sources, const WaveParams& p,
                CauchyWeights w, double tol = kDefaultBranchTol);

/// Sum of two samples; singular flags are OR-ed.
WaveSample combine(const WaveSample& a, double wa, const WaveSample& b, double wb);

}  // namespace wave
}  // namespace ballsolve
