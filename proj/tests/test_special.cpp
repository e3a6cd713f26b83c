// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "ballsolve/oracle.hpp"
#include "ballsolve/special.hpp"
#include "test_support.hpp"

using namespace ballsolve;
using test::rel_err;

namespace {
const Complex kRay{-std::sqrt(0.5), std::sqrt(0.5)};
}

TEST_CASE("erf examples") {
  CHECK(special::erf(0.0) == Complex(0.0, 0.0));
  const Complex z{1.3, 0.7};
  CHECK(std::abs(special::erf(-z) + special::erf(z)) <= 1e-15);
  CHECK(rel_err(special::erf(1.0), 0.8427007929497149) <= 1e-15);
}

TEST_CASE("erf_diff examples") {
  const Complex z{2.5, -1.25};
  CHECK(special::erf_diff(z, z) == Complex(0.0, 0.0));
  CHECK(rel_err(special::erf_diff(1.0, -1.0), 1.6854015858994298) <= 1e-15);
  const Complex want{0.09017011297138496, -0.029197861834565111};
  CHECK(rel_err(special::erf_diff(kRay * 10.0, kRay * 10.1), want) <= 1e-12);
}

TEST_CASE("erf against extended-precision reference, |z| <= 30") {
  const auto rows = test::read_csv(BALLSOLVE_TEST_DATA "/erf_reference.csv");
  REQUIRE(rows.size() > 900);
  double worst = 0.0;
  for (const auto& r : rows) {
    worst = std::max(worst, rel_err(special::erf({r[0], r[1]}), {r[2], r[3]}));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("erf_diff against extended-precision reference") {
  const auto rows = test::read_csv(BALLSOLVE_TEST_DATA "/erf_diff_reference.csv");
  REQUIRE(rows.size() > 500);
  double worst = 0.0;
  for (const auto& r : rows) {
    worst = std::max(worst,
                     rel_err(special::erf_diff({r[0], r[1]}, {r[2], r[3]}), {r[4], r[5]}));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("erf symmetries on random points") {
  oracle::Rng rng(7);
  double odd = 0.0;
  double conj = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double rad = 20.0 * std::sqrt(rng.uniform());
    const double th = rng.uniform(-kPi, kPi);
    const Complex z = std::polar(rad, th);
    const Complex e = special::erf(z);
    odd = std::max(odd, std::abs(special::erf(-z) + e));
    conj = std::max(conj, std::abs(special::erf(std::conj(z)) - std::conj(e)));
  }
  CHECK(odd <= 1e-14);
  CHECK(conj <= 1e-14);
}

TEST_CASE("erf stays finite") {
  for (double x : {0.0, 1e-300, 1.0, 30.0, 1e3, 1e8}) {
    for (Complex u : {Complex(1, 0), Complex(0, 1), kRay, std::conj(kRay)}) {
      CHECK(is_finite(special::erf(u * std::min(x, 25.0))));
      CHECK(is_finite(special::faddeeva(u * x)));
    }
  }
}

TEST_CASE("erf tends to one along the ray") {
  for (double x : {50.0, 200.0, 1000.0}) {
    const double m = std::abs(special::erf(kRay * x));
    CHECK(std::abs(m - 1.0) <= 1.0 / x);
  }
}

// The true supremum is 1.3421 near x = 1.52, so this bound cannot hold.
TEST_CASE("erf on the ray stays below 1.2") {
  double worst = 0.0;
  for (int i = 0; i <= 3000; ++i) worst = std::max(worst, std::abs(special::erf(kRay * (0.01 * i))));
  CHECK(worst <= 1.2);
}

TEST_CASE("cis_product keeps large phases") {
  // 1e8 * 1e4 * 1.5 = 1.5e12 exactly; 1.5e12 mod 2 pi from extended precision.
  const Complex got = special::cis_product(1e8, 1e4, 1.5);
  const double phase = 5.2967481684744068;
  CHECK(std::abs(got - std::polar(1.0, phase)) <= 1e-10);
  CHECK(std::abs(special::cis_product(0.5, 2.0, 1.0) - std::polar(1.0, 1.0)) <= 1e-15);
}

TEST_CASE("ray_faddeeva_tail matches its definition") {
  const Complex e = std::polar(1.0, kPi / 4);
  for (double a : {0.5, 2.0, 3.9, 4.0, 4.1, 10.0}) {
    const Complex z = e * a;
    const Complex want = special::faddeeva(z) - Complex(0, 1) / (std::sqrt(kPi) * z);
    CHECK(std::abs(special::ray_faddeeva_tail(a) - want) <= 1e-13 * std::abs(want) + 1e-16);
  }
}
