// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "ballsolve/geometry.hpp"
#include "ballsolve/quadrature.hpp"

using namespace ballsolve;

TEST_CASE("cap height at tangency and symmetric intersection") {
  const double d = 2.0, r = 1.0;
  CHECK(std::abs(geometry::cap_height(d - r, d, r)) <= 1e-15);
  CHECK(std::abs(geometry::cap_height(d + r, d, r)) <= 1e-15);
  CHECK(geometry::cap_height(r, r, r) == doctest::Approx(r / 2));
  CHECK(geometry::cap_height(0.7, 0.7, 0.7) == doctest::Approx(0.35));
}

TEST_CASE("cap area") {
  CHECK(std::abs(geometry::cap_area(1.0, 2.0, 1.0)) <= 1e-15);
  CHECK(geometry::cap_area(1.0, 1.0, 1.0) == doctest::Approx(kPi));
  CHECK_THROWS_AS(geometry::cap_height(0.5, 2.0, 1.0), DomainError);
}

TEST_CASE("cap areas integrate to the ball volume") {
  const auto res = quadrature::integrate(
      [](double z) { return Complex(geometry::cap_area(z, 2.0, 1.0), 0.0); }, 1.0, 3.0);
  CHECK(res.value.real() == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-13));
  const auto inside = quadrature::integrate(
      [](double z) { return Complex(geometry::sphere_ball_intersection_area(z, 0.4, 1.0), 0.0); },
      std::vector<double>{0.0, 0.6, 1.4});
  CHECK(inside.value.real() == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-13));
}

TEST_CASE("intersection area covers all cases") {
  CHECK(geometry::sphere_ball_intersection_area(0.5, 0.2, 1.0) == doctest::Approx(kPi));
  CHECK(geometry::sphere_ball_intersection_area(0.5, 2.0, 1.0) == 0.0);
  CHECK(geometry::sphere_ball_intersection_area(3.5, 2.0, 1.0) == 0.0);
  CHECK(geometry::sphere_ball_intersection_area(5.0, 0.0, 1.0) == 0.0);
}

TEST_CASE("classify") {
  CHECK(geometry::classify(0.0, 1.0) == Branch::Center);
  CHECK(geometry::classify(2.0, 1.0) == Branch::Exterior);
  CHECK(geometry::classify(1.0, 1.0) == Branch::Boundary);
  CHECK(geometry::classify(0.5, 1.0) == Branch::Interior);
  CHECK(geometry::classify(Vec3{0.0, 3.0, 4.0}, Ball({0, 0, 0}, 5.0)) == Branch::Boundary);
}

TEST_CASE("branch names round-trip") {
  for (Branch b : {Branch::Exterior, Branch::Interior, Branch::Center, Branch::Boundary}) {
    CHECK(branch_from_string(to_string(b)) == b);
  }
  CHECK_THROWS(branch_from_string("outside"));
}

TEST_CASE("shapes reject bad radii") {
  CHECK_THROWS_AS(Ball({0, 0, 0}, 0.0), DomainError);
  CHECK_THROWS_AS(Annulus({0, 0, 0}, 2.0, 1.0), DomainError);
  CHECK_NOTHROW(Annulus({0, 0, 0}, 0.0, 1.0));
}
