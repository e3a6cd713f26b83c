// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ballsolve {

Ball::Ball(Vec3 c, double r) : center(c), radius(r) {
  if (!is_finite(c) || !std::isfinite(r)) throw DomainError("ball: non-finite center or radius");
  if (!(r > 0.0)) throw DomainError("ball: radius must be positive");
}

Annulus::Annulus(Vec3 c, double inner, double outer)
    : center(c), inner_radius(inner), outer_radius(outer) {
  if (!is_finite(c) || !std::isfinite(inner) || !std::isfinite(outer)) {
    throw DomainError("annulus: non-finite center or radii");
  }
  if (!(inner >= 0.0 && inner < outer)) {
    throw DomainError("annulus: need 0 <= inner_radius < outer_radius");
  }
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Exterior: return "exterior";
    case Branch::Interior: return "interior";
    case Branch::Center: return "center";
    case Branch::Boundary: return "boundary";
  }
  return "unknown";
}

Branch branch_from_string(std::string_view s) {
  if (s == "exterior") return Branch::Exterior;
  if (s == "interior") return Branch::Interior;
  if (s == "center") return Branch::Center;
  if (s == "boundary") return Branch::Boundary;
  throw ParseError("unknown branch tag '" + std::string(s) + "'");
}

namespace geometry {

double cap_height(double z, double d, double r) {
  if (!(d > 0.0) || !(r > 0.0)) throw DomainError("cap_height: need d > 0 and r > 0");
  const double lo = std::abs(d - r);
  const double hi = d + r;
  // A few ulps of slack so that endpoints computed as d - r or d + r pass.
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * hi;
  if (z < lo - slack || z > hi + slack) {
    throw DomainError("cap_height: z outside [|d - r|, d + r]");
  }
  // z(1 - (z^2 + d^2 - r^2)/(2dz)) = (r^2 - (z - d)^2) / (2d)
  const double h = (r - (z - d)) * (r + (z - d)) / (2.0 * d);
  return std::clamp(h, 0.0, 2.0 * z);
}

double cap_area(double z, double d, double r) {
  return 2.0 * kPi * z * cap_height(z, d, r);
}

double sphere_ball_intersection_area(double z, double d, double r) {
  if (!(r > 0.0) || d < 0.0 || z < 0.0) {
    throw DomainError("sphere_ball_intersection_area: invalid arguments");
  }
  if (d <= r && z <= r - d) return 4.0 * kPi * z * z;
  if (z < std::abs(d - r) || z > d + r) return 0.0;
  return cap_area(z, d, r);
}

Branch classify(double d, double r, double tol) {
  if (tol < 0.0) throw DomainError("classify: tolerance must be non-negative");
  if (d <= tol * r) return Branch::Center;
  if (std::abs(d - r) <= tol * r) return Branch::Boundary;
  return d > r ? Branch::Exterior : Branch::Interior;
}

Branch classify(const Vec3& point, const Ball& ball, double tol) {
  return classify(distance(point, ball.center), ball.radius, tol);
}

}  // namespace geometry
}  // namespace ballsolve
