// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "ballsolve/helmholtz.hpp"
#include "ballsolve/oracle.hpp"
#include "ballsolve/quadrature.hpp"
#include "ballsolve/schrodinger.hpp"
#include "test_support.hpp"

using namespace ballsolve;
using test::rel_err;

TEST_CASE("quadrature basics") {
  const auto r = quadrature::integrate([](double x) { return Complex(std::cos(x), std::sin(x)); },
                                       0.0, kPi);
  CHECK(std::abs(r.value - Complex(0.0, 2.0)) <= 1e-13);
  CHECK(r.abs_error_estimate >= 0.0);
  quadrature::Options tight;
  tight.max_intervals = 3;
  CHECK_THROWS_AS(quadrature::integrate([](double x) { return Complex(std::sin(1.0 / x), 0.0); },
                                        1e-6, 1.0, tight),
                  ConvergenceError);
  const auto br = quadrature::make_breaks(0.0, 1.0, std::vector<double>{0.5, 2.0}, 0.3);
  CHECK(br.front() == 0.0);
  CHECK(br.back() == 1.0);
  for (std::size_t i = 1; i < br.size(); ++i) CHECK(br[i] - br[i - 1] <= 0.3 + 1e-15);
}

TEST_CASE("reduced integrals") {
  const WaveNumber wn(1.0);
  const Complex want{-0.062665196503930886, 0.13692595240020536};
  CHECK(rel_err(oracle::reduced_integral_helmholtz(2.0, 1.0, wn).value, want) <= 1e-12);
  const Complex center{0.38177329067603622, 0.30116867893975679};
  CHECK(rel_err(oracle::reduced_integral_helmholtz(0.0, 1.0, wn).value, center) <= 1e-12);
  CHECK(oracle::reduced_volume(2.0, 1.0).value.real() == doctest::Approx(4 * kPi / 3).epsilon(1e-13));
  CHECK(oracle::reduced_volume(0.3, 1.0).value.real() == doctest::Approx(4 * kPi / 3).epsilon(1e-13));
}

TEST_CASE("reduced Schrodinger integral") {
  const Complex want{0.17154967716370309, -0.014452000080326548};
  CHECK(rel_err(oracle::reduced_integral_schrodinger(2.0, 1.0, 0.5).value, want) <= 1e-11);
  const Complex center{-0.12299692023414596, -0.23324534928075382};
  CHECK(rel_err(oracle::reduced_integral_schrodinger(0.0, 1.0, 0.5).value, center) <= 1e-11);
  const auto big = oracle::reduced_integral_schrodinger(1.7, 1.2, 100.0);
  CHECK(big.evaluations <= 1'000'000);
  CHECK(rel_err(big.value, schrodinger::eval(1.7, 1.2, SchrodingerParams::from_mt(100.0))) <=
        1e-9);
}

TEST_CASE("radial references reduce to the ball for constant data") {
  const WaveNumber wn(1.5);
  const auto one = [](double) { return 1.0; };
  for (double d : {0.0, 0.5, 2.0}) {
    CHECK(rel_err(oracle::radial_reference_helmholtz(one, 1.0, {}, d, wn).value,
                  helmholtz::eval(d, 1.0, wn).value) <= 1e-10);
    CHECK(rel_err(oracle::radial_reference_schrodinger(one, 1.0, {}, d, 0.5).value,
                  schrodinger::eval(d, 1.0, SchrodingerParams::from_mt(0.5))) <= 1e-9);
  }
}

TEST_CASE("spherical means") {
  const Ball b({0, 0, 0}, 1.0);
  const auto miss = oracle::spherical_mean({2, 0, 0}, b, 0.5, 10000);
  CHECK(miss.value == 0.0);
  const auto full = oracle::spherical_mean({0, 0, 0}, b, 0.1, 10000);
  CHECK(full.value == doctest::Approx(4 * kPi));
  // Scaled to the sphere of radius ct the cap area is 2 pi (ct)^2 (1 - 7/8) = pi.
  const auto cap = oracle::spherical_mean({2, 0, 0}, b, 2.0, 1'000'000);
  CHECK(std::abs(4.0 * cap.value - kPi) <= 3 * 4.0 * cap.std_error);
}

TEST_CASE("Monte Carlo volume integrals") {
  const Ball b({0, 0, 0}, 1.0);
  const auto vol = oracle::monte_carlo_3d([](const Vec3&) { return Complex(1.0, 0.0); }, b, 10000);
  CHECK(vol.value.real() == doctest::Approx(4 * kPi / 3));
  const Vec3 x{2, 0, 0};
  const WaveNumber wn(1.0);
  const auto green = oracle::monte_carlo_3d(
      [&](const Vec3& y) {
        const double z = distance(x, y);
        return std::exp(Complex(0, 1) * wn.kappa() * z) / (4 * kPi * z);
      },
      b, 400000);
  CHECK(std::abs(green.value - helmholtz::eval_exterior(2.0, 1.0, wn)) <=
        3 * green.abs_error_estimate);
  const double mt = 0.5;
  const auto prop = oracle::monte_carlo_3d(
      [&](const Vec3& y) {
        const double z = distance(x, y);
        return std::polar(1.0, -3 * kPi / 4) * std::pow(mt / kPi, 1.5) *
               std::exp(Complex(0, mt * z * z));
      },
      b, 400000);
  CHECK(std::abs(prop.value - schrodinger::eval(2.0, 1.0, SchrodingerParams::from_mt(mt))) <=
        3 * prop.abs_error_estimate);
}

TEST_CASE("seeded streams are reproducible") {
  oracle::Rng a(oracle::lane_seed(42, 3));
  oracle::Rng b(oracle::lane_seed(42, 3));
  for (int i = 0; i < 10; ++i) CHECK(a.uniform() == b.uniform());
  CHECK(oracle::lane_seed(42, 3) != oracle::lane_seed(42, 4));
  const auto m1 = oracle::spherical_mean({1, 0, 0}, Ball({0, 0, 0}, 1.0), 0.7, 50000, 9);
  const auto m2 = oracle::spherical_mean({1, 0, 0}, Ball({0, 0, 0}, 1.0), 0.7, 50000, 9);
  CHECK(m1.value == m2.value);
}

TEST_CASE("finite-difference residual orders") {
  const WaveNumber wn(1.0);
  oracle::FdGrid grid;
  grid.points = {{{0.2, 0.1, 0.0}, 0.0}, {{2.0, 0.3, -0.4}, 0.0}};
  grid.h = 0.04;
  const auto field = [&](const Vec3& x, double) {
    return helmholtz::eval(x, Ball({0, 0, 0}, 1.0), wn).value;
  };
  const auto expected = [](const Vec3& x, double) {
    return Complex(std::hypot(x[0], x[1], x[2]) < 1.0 ? -1.0 : 0.0, 0.0);
  };
  oracle::FdOperator op{oracle::FdOperator::Kind::Helmholtz, wn.kappa() * wn.kappa(), 1.0};
  const auto rep = oracle::fd_residual(field, op, expected, grid);
  for (double o : rep.orders) CHECK(o == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("radial L2 norms") {
  const auto r = oracle::l2_norm_radial([](double) { return Complex(1.0, 0.0); }, 1.0, {}, 0.0);
  CHECK(r.norm_squared == doctest::Approx(4 * kPi / 3).epsilon(1e-12));
}
