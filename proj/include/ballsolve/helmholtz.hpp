// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "ballsolve/geometry.hpp"
#include "ballsolve/types.hpp"

namespace ballsolve {

/// Wavenumber k > 0 with optional attenuation sigma >= 0.
///
/// The effective wavenumber kappa satisfies kappa^2 = k^2 + i k sigma and is
/// the root with Im(kappa) >= 0. The physical relation k = omega / c is not
/// needed by any evaluator.
class WaveNumber {
 public:
  explicit WaveNumber(double k, double sigma = 0.0);

  double k() const { return k_; }
  double sigma() const { return sigma_; }
  Complex kappa() const { return kappa_; }

 private:
  double k_;
  double sigma_;
  Complex kappa_;
};

struct HelmholtzField {
  Complex value;
  Branch branch;
};

/// A weighted annulus; inner_radius == 0 is a full ball.
struct HelmholtzSource {
  Annulus shape;
  Complex weight{1.0, 0.0};
};

namespace helmholtz {

// Radiating solution of the Helmholtz problem with ball-characteristic data,
// i.e. the convolution of chi_B with exp(i kappa |x|) / (4 pi |x|).

/// Exterior branch, d >= r:
///   ((i - kr) e^{ik(d-r)} - (i + kr) e^{ik(d+r)}) / (2 d k^3),
/// evaluated as e^{ikd} (sin kr - kr cos kr) / (d k^3).
Complex eval_exterior(double d, double r, const WaveNumber& wn);

/// d/dd of the exterior branch.
Complex eval_exterior_radial_derivative(double d, double r, const WaveNumber& wn);

/// Interior branch, 0 < d <= r:
///   ((i + kr)(e^{ik(r-d)} - e^{ik(r+d)}) - 2dk) / (2 d k^3),
/// evaluated as ((1 - ikr) e^{ikr} sinc(kd) - 1) / k^2 with the O(1) parts
/// cancelled analytically.
Complex eval_interior(double d, double r, const WaveNumber& wn);

/// Center value (e^{ikr}(1 - ikr) - 1) / k^2.
Complex eval_center(double r, const WaveNumber& wn);

/// Branch dispatch on the distance d to the ball center. Boundary points use
/// the exterior form.
HelmholtzField eval(double d, double r, const WaveNumber& wn, double tol = kDefaultBranchTol);
HelmholtzField eval(const Vec3& point, const Ball& ball, const WaveNumber& wn,
                    double tol = kDefaultBranchTol);

/// Solution for chi of an annulus: difference of the two ball solutions.
Complex eval(const Vec3& point, const Annulus& shell, const WaveNumber& wn,
             double tol = kDefaultBranchTol);

/// Superposition over weighted sources.
Complex eval(const Vec3& point, std::span<const HelmholtzSource> sources, const WaveNumber& wn,
             double tol = kDefaultBranchTol);

}  // namespace helmholtz
}  // namespace ballsolve
