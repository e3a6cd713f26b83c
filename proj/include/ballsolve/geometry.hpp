// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "ballsolve/types.hpp"

namespace ballsolve {

/// Closed ball {x : |x - center| <= radius}.
struct Ball {
  Vec3 center{0.0, 0.0, 0.0};
  double radius = 1.0;

  Ball() = default;
  Ball(Vec3 c, double r);
};

/// Spherical shell B(center, outer) \ B(center, inner).
struct Annulus {
  Vec3 center{0.0, 0.0, 0.0};
  double inner_radius = 0.0;
  double outer_radius = 1.0;

  Annulus() = default;
  Annulus(Vec3 c, double inner, double outer);
};

/// Which closed-form branch applies at an evaluation point.
enum class Branch { Exterior, Interior, Center, Boundary };

std::string_view to_string(Branch b);
Branch branch_from_string(std::string_view s);

inline constexpr double kDefaultBranchTol = 1e-9;

namespace geometry {

/// Height of the cap cut from the sphere |y - x| = z by a ball of radius r
/// whose center lies at distance d from x. Requires |d - r| <= z <= d + r.
double cap_height(double z, double d, double r);

/// Area 2*pi*z*h(z) of that cap.
double cap_area(double z, double d, double r);

/// Area of {y : |y - x| = z} inside the ball for any z >= 0 and d >= 0:
/// the full sphere, a cap, or nothing. Used by the oracles and the wave
/// spherical means.
double sphere_ball_intersection_area(double z, double d, double r);

/// Center iff d <= tol*r; Boundary iff |d - r| <= tol*r; else by sign of d - r.
Branch classify(double d, double r, double tol = kDefaultBranchTol);
Branch classify(const Vec3& point, const Ball& ball, double tol = kDefaultBranchTol);

}  // namespace geometry
}  // namespace ballsolve
