// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>

#include "ballsolve/oracle.hpp"
#include "ballsolve/schrodinger.hpp"
#include "ballsolve/special.hpp"
#include "test_support.hpp"

using namespace ballsolve;
using test::rel_err;

namespace {

// The closed form written with a signed M and s = sqrt(M) on the principal
// branch, so M < 0 runs the same expression backwards in time.
Complex formula(double d, double r, double m) {
  const Complex s = std::sqrt(Complex(m, 0.0));
  const Complex w = std::polar(1.0, 3 * kPi / 4);
  const Complex lead = std::polar(1.0, -3 * kPi / 4);
  const Complex i{0.0, 1.0};
  return 0.5 * special::erf(w * s * (d - r)) - 0.5 * special::erf(w * s * (d + r)) +
         lead * (std::exp(i * m * (d - r) * (d - r)) - std::exp(i * m * (d + r) * (d + r))) /
             (2.0 * s * d * std::sqrt(kPi));
}

}  // namespace

// Frozen values: 40-digit quadrature of the cap-reduced propagator integral.
TEST_CASE("exterior value") {
  const auto p = SchrodingerParams(1.0, 1.0, 1.0);
  CHECK(p.mt() == 0.5);
  const Complex want{0.17154967716370309, -0.014452000080326548};
  CHECK(rel_err(schrodinger::eval(2.0, 1.0, p), want) <= 1e-13);
}

TEST_CASE("interior value") {
  const Complex want{-0.090999805410856982, -0.24050675388794555};
  CHECK(rel_err(schrodinger::eval(0.5, 1.0, SchrodingerParams::from_mt(0.5)), want) <= 1e-13);
  const Complex other{0.0728029548330162, 0.1244693462984941};
  CHECK(rel_err(schrodinger::eval(1.3, 0.7, SchrodingerParams::from_mt(3.0)), other) <= 1e-13);
}

TEST_CASE("center value and continuity") {
  const auto p = SchrodingerParams::from_mt(0.5);
  const Complex want{-0.12299692023414596, -0.23324534928075382};
  CHECK(rel_err(schrodinger::eval_center(1.0, p), want) <= 1e-13);
  CHECK(std::abs(schrodinger::eval(1e-10, 1.0, p) - schrodinger::eval_center(1.0, p)) <= 1e-9);
  CHECK(schrodinger::eval(0.0, 1.0, p) == schrodinger::eval_center(1.0, p));
}

TEST_CASE("long times drain the ball") {
  double prev = 1.0;
  for (double mt : {1e-2, 1e-4, 1e-6}) {
    const auto p = SchrodingerParams::from_mt(mt);
    const double a = std::abs(schrodinger::eval(0.7, 1.0, p));
    CHECK(a < prev);
    prev = a;
    CHECK(std::abs(schrodinger::eval_center(1.0, p)) <= 2.0 * std::pow(mt, 1.5));
  }
  CHECK(prev <= 1e-8);
}

TEST_CASE("short times recover the initial data") {
  const auto p = SchrodingerParams::from_mt(1e6);
  for (double d : {0.3, 0.9, 1.1, 1.5, 3.0}) {
    CHECK(std::abs(std::abs(schrodinger::eval(d, 1.0, p)) - schrodinger::initial_value(d, 1.0)) <=
          1e-2);
  }
}

// The boundary term focuses at the center: |u(0)| grows like 2 sqrt(M) r / sqrt(pi).
TEST_CASE("short times recover the initial data at the center") {
  const auto p = SchrodingerParams::from_mt(1e6);
  const double a = std::abs(schrodinger::eval(0.0, 1.0, p));
  CHECK(std::abs(a - 1.0) <= 1e-2);
}

TEST_CASE("reversing time conjugates the closed form") {
  for (const auto& [d, r, m] : {std::array{2.0, 1.0, 0.5}, std::array{0.4, 1.0, 2.0},
                                std::array{1.3, 0.7, 3.0}}) {
    const Complex fwd = formula(d, r, m);
    CHECK(rel_err(fwd, schrodinger::eval(d, r, SchrodingerParams::from_mt(m))) <= 1e-12);
    CHECK(rel_err(formula(d, r, -m), std::conj(fwd)) <= 1e-12);
  }
}

TEST_CASE("far field keeps its accuracy") {
  // The erf pair and the exponential pair cancel to 1e-9 of their size here.
  const Complex want{1.4834767886970721e-9, -1.8913884302416877e-10};
  CHECK(rel_err(schrodinger::eval(15000.0, 1.0, SchrodingerParams::from_mt(1.0)), want) <= 1e-10);
}

TEST_CASE("normalization") {
  CHECK(schrodinger::normalization_factor(std::cbrt(3.0 / (4.0 * kPi))) == doctest::Approx(1.0));
  CHECK(schrodinger::normalization_factor(1.0) == doctest::Approx(0.488603).epsilon(1e-6));
  auto s = schrodinger::normalize({Complex(1.0, 0.0), false}, 1.0);
  CHECK(s.normalized);
  CHECK_THROWS_AS(schrodinger::normalize(s, 1.0), DomainError);
}

TEST_CASE("matches the reduced integral") {
  const auto ref = oracle::reduced_integral_schrodinger(2.0, 1.0, 0.5);
  CHECK(rel_err(schrodinger::eval(2.0, 1.0, SchrodingerParams::from_mt(0.5)), ref.value) <= 1e-8);
}

TEST_CASE("annulus and superposition") {
  const auto p = SchrodingerParams::from_mt(0.8);
  const Vec3 x{0.2, 0.4, -0.1};
  const Complex diff = schrodinger::eval(x, Ball({0, 0, 0}, 2.0), p) -
                       schrodinger::eval(x, Ball({0, 0, 0}, 1.0), p);
  CHECK(schrodinger::eval(x, Annulus({0, 0, 0}, 1.0, 2.0), p) == diff);
  const std::array<SchrodingerSource, 2> src{
      SchrodingerSource{Annulus({0, 0, 0}, 0.0, 2.0), {1.0, 0.0}},
      SchrodingerSource{Annulus({0, 0, 0}, 0.0, 1.0), {-1.0, 0.0}}};
  CHECK(std::abs(schrodinger::eval(x, src, p) - diff) <= 1e-15);
}

TEST_CASE("parameter domain") {
  CHECK_THROWS_AS(SchrodingerParams(1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(SchrodingerParams(-1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(SchrodingerParams::from_mt(0.0), DomainError);
  CHECK_THROWS_AS(schrodinger::eval(-0.1, 1.0, SchrodingerParams::from_mt(1.0)), DomainError);
}
