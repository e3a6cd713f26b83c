// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>

#include "ballsolve/helmholtz.hpp"
#include "ballsolve/oracle.hpp"
#include "test_support.hpp"

using namespace ballsolve;
using test::rel_err;

// Frozen values: 40-digit quadrature of the cap-reduced convolution.
TEST_CASE("exterior value") {
  const Complex want{-0.062665196503930886, 0.13692595240020536};
  CHECK(rel_err(helmholtz::eval_exterior(2.0, 1.0, WaveNumber(1.0)), want) <= 1e-13);
}

TEST_CASE("exterior far field decays like 1/d") {
  const double k = 1.0, r = 1.0, d = 1e6;
  const double C = (std::abs(Complex(-k * r, 1.0)) + std::abs(Complex(k * r, 1.0))) / (2 * k * k * k);
  CHECK(std::abs(helmholtz::eval_exterior(d, r, WaveNumber(k))) <= C / d);
}

TEST_CASE("attenuation lowers the modulus") {
  const Complex want{-0.030350549128527581, 0.05256485877074875};
  const Complex damped = helmholtz::eval_exterior(2.0, 1.0, WaveNumber(1.0, 1.0));
  CHECK(rel_err(damped, want) <= 1e-13);
  CHECK(std::abs(damped) < std::abs(helmholtz::eval_exterior(2.0, 1.0, WaveNumber(1.0))));
}

TEST_CASE("interior value and branch agreement") {
  const Complex want{0.045029828523642633, 0.36637459449558047};
  CHECK(rel_err(helmholtz::eval_interior(0.5, 1.0, WaveNumber(2.0)), want) <= 1e-13);
  const WaveNumber wn(1.0);
  CHECK(std::abs(helmholtz::eval_interior(1.0, 1.0, wn) - helmholtz::eval_exterior(1.0, 1.0, wn)) <=
        1e-14);
  CHECK(std::abs(helmholtz::eval_interior(1e-12, 1.0, wn) - helmholtz::eval_center(1.0, wn)) <=
        1e-10);
}

TEST_CASE("center value") {
  const Complex want{0.38177329067603622, 0.30116867893975679};
  CHECK(rel_err(helmholtz::eval_center(1.0, WaveNumber(1.0)), want) <= 1e-14);
  const Complex damped{0.27284614582396904, 0.23230051868717833};
  CHECK(rel_err(helmholtz::eval_center(1.0, WaveNumber(1.0, 1.0)), damped) <= 1e-14);
  for (double r : {1e-2, 1e-4, 1e-6}) {
    CHECK(std::abs(helmholtz::eval_center(r, WaveNumber(3.0))) <= r * r / 2 * (1 + 10 * r));
  }
}

TEST_CASE("kappa is the principal root") {
  const WaveNumber wn(2.0, 3.0);
  CHECK(std::abs(wn.kappa() * wn.kappa() - Complex(4.0, 6.0)) <= 1e-14);
  CHECK(wn.kappa().imag() >= 0.0);
  CHECK_THROWS_AS(WaveNumber(0.0), DomainError);
  CHECK_THROWS_AS(WaveNumber(1.0, -0.5), DomainError);
}

TEST_CASE("dispatch by point") {
  const Ball b({1.0, 2.0, 3.0}, 1.0);
  const WaveNumber wn(1.5);
  const auto c = helmholtz::eval(b.center, b, wn);
  CHECK(c.branch == Branch::Center);
  CHECK(c.value == helmholtz::eval_center(1.0, wn));
  const auto bd = helmholtz::eval(Vec3{2.0, 2.0, 3.0}, b, wn);
  CHECK(bd.branch == Branch::Boundary);
  CHECK(bd.value == helmholtz::eval_exterior(1.0, 1.0, wn));
  CHECK(helmholtz::eval(Vec3{1.0, 2.0, 5.0}, b, wn).branch == Branch::Exterior);
}

TEST_CASE("linearity over sources") {
  const WaveNumber wn(1.2);
  const Vec3 x{0.3, -0.2, 0.8};
  const std::array<HelmholtzSource, 2> src{
      HelmholtzSource{Annulus({0, 0, 0}, 0.0, 0.5), {2.0, 0.0}},
      HelmholtzSource{Annulus({3, 0, 0}, 0.0, 1.0), {0.0, -1.0}}};
  const Complex sum = 2.0 * helmholtz::eval(x, Ball({0, 0, 0}, 0.5), wn).value +
                      Complex(0, -1) * helmholtz::eval(x, Ball({3, 0, 0}, 1.0), wn).value;
  CHECK(std::abs(helmholtz::eval(x, src, wn) - sum) <= 1e-15);
  const Annulus shell({0, 0, 0}, 0.5, 1.0);
  const Complex diff = helmholtz::eval(x, Ball({0, 0, 0}, 1.0), wn).value -
                       helmholtz::eval(x, Ball({0, 0, 0}, 0.5), wn).value;
  CHECK(helmholtz::eval(x, shell, wn) == diff);
}

TEST_CASE("closed form agrees with the reduced integral") {
  const WaveNumber wn(1.0);
  const auto ref = oracle::reduced_integral_helmholtz(2.0, 1.0, wn);
  CHECK(rel_err(helmholtz::eval_exterior(2.0, 1.0, wn), ref.value) <= 1e-10);
}

TEST_CASE("domain errors") {
  const WaveNumber wn(1.0);
  CHECK_THROWS_AS(helmholtz::eval_exterior(0.5, 1.0, wn), DomainError);
  CHECK_THROWS_AS(helmholtz::eval_interior(1.5, 1.0, wn), DomainError);
  CHECK_THROWS_AS(helmholtz::eval(-1.0, 1.0, wn), DomainError);
}
