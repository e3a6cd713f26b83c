// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/helmholtz.hpp"

#include <cmath>

namespace ballsolve {
namespace {

constexpr Complex kI{0.0, 1.0};

// (sin a - a cos a) / a^3
Complex sin_minus_cos_over_cube(Complex a) {
  if (std::abs(a) < 1.0) {
    const Complex a2 = a * a;
    Complex pow = 1.0;
    Complex sum = 0.0;
    double fact = 6.0;  // (2n+1)! for n = 1
    for (int n = 1; n < 30; ++n) {
      const Complex term = (n % 2 == 1 ? 1.0 : -1.0) * 2.0 * n * pow / fact;
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
      pow *= a2;
      fact *= (2.0 * n + 2.0) * (2.0 * n + 3.0);
    }
    return sum;
  }
  return (std::sin(a) - a * std::cos(a)) / (a * a * a);
}

// (1 - ia) e^{ia} - 1
Complex outgoing_center_factor(Complex a) {
  if (std::abs(a) < 1.0) {
    // sum_{n>=2} (1 - n) (ia)^n / n!
    const Complex ia = kI * a;
    Complex pow = ia * ia;
    double fact = 2.0;
    Complex sum = 0.0;
    for (int n = 2; n < 40; ++n) {
      const Complex term = (1.0 - n) * pow / fact;
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
      pow *= ia;
      fact *= n + 1.0;
    }
    return sum;
  }
  return (1.0 - kI * a) * std::exp(kI * a) - 1.0;
}

// sin(b)/b - 1
Complex sinc_minus_one(Complex b) {
  if (std::abs(b) < 1.0) {
    const Complex b2 = b * b;
    Complex pow = b2;
    double fact = 6.0;
    Complex sum = 0.0;
    for (int n = 1; n < 30; ++n) {
      const Complex term = (n % 2 == 1 ? -1.0 : 1.0) * pow / fact;
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
      pow *= b2;
      fact *= (2.0 * n + 2.0) * (2.0 * n + 3.0);
    }
    return sum;
  }
  return std::sin(b) / b - 1.0;
}

Complex exterior_value(double d, double r, Complex kap) {
  return std::exp(kI * kap * d) * (r * r * r) * sin_minus_cos_over_cube(kap * r) / d;
}

void check_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("helmholtz: radius must be positive");
}

}  // namespace

WaveNumber::WaveNumber(double k, double sigma) : k_(k), sigma_(sigma) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("wavenumber: k must be positive");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw DomainError("wavenumber: sigma must be non-negative");
  }
  if (sigma == 0.0) {
    kappa_ = Complex(k, 0.0);
  } else {
    const double modulus = std::hypot(k * k, k * sigma);
    const double re = std::sqrt(0.5 * (modulus + k * k));
    // 2 Re Im = k sigma avoids the cancellation in sqrt((modulus - k^2)/2).
    kappa_ = Complex(re, k * sigma / (2.0 * re));
  }
}

namespace helmholtz {

Complex eval_exterior(double d, double r, const WaveNumber& wn) {
  check_radius(r);
  if (!(d >= r)) throw DomainError("helmholtz exterior: need d >= r");
  return exterior_value(d, r, wn.kappa());
}

Complex eval_exterior_radial_derivative(double d, double r, const WaveNumber& wn) {
  check_radius(r);
  if (!(d >= r)) throw DomainError("helmholtz exterior: need d >= r");
  const Complex kap = wn.kappa();
  return exterior_value(d, r, kap) * (kI * kap - 1.0 / d);
}

Complex eval_interior(double d, double r, const WaveNumber& wn) {
  check_radius(r);
  if (!(d > 0.0) || d > r) throw DomainError("helmholtz interior: need 0 < d <= r");
  const Complex kap = wn.kappa();
  const Complex q = outgoing_center_factor(kap * r);
  const Complex s = sinc_minus_one(kap * d);
  return (q + s + q * s) / (kap * kap);
}

Complex eval_center(double r, const WaveNumber& wn) {
  check_radius(r);
  const Complex kap = wn.kappa();
  return outgoing_center_factor(kap * r) / (kap * kap);
}

HelmholtzField eval(double d, double r, const WaveNumber& wn, double tol) {
  check_radius(r);
  if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("helmholtz: d must be non-negative");
  const Branch b = geometry::classify(d, r, tol);
  switch (b) {
    case Branch::Center: return {eval_center(r, wn), b};
    case Branch::Interior: return {eval_interior(d, r, wn), b};
    case Branch::Boundary:
    case Branch::Exterior:
      // The exterior form is analytic in d, so points a hair inside r are fine.
      return {exterior_value(d, r, wn.kappa()), b};
  }
  return {Complex{}, b};
}

HelmholtzField eval(const Vec3& point, const Ball& ball, const WaveNumber& wn, double tol) {
  if (!is_finite(point)) throw DomainError("helmholtz: non-finite evaluation point");
  return eval(distance(point, ball.center), ball.radius, wn, tol);
}

Complex eval(const Vec3& point, const Annulus& shell, const WaveNumber& wn, double tol) {
  if (!is_finite(point)) throw DomainError("helmholtz: non-finite evaluation point");
  const double d = distance(point, shell.center);
  Complex u = eval(d, shell.outer_radius, wn, tol).value;
  if (shell.inner_radius > 0.0) u -= eval(d, shell.inner_radius, wn, tol).value;
  return u;
}

Complex eval(const Vec3& point, std::span<const HelmholtzSource> sources, const WaveNumber& wn,
             double tol) {
  Complex u{0.0, 0.0};
  for (const auto& src : sources) u += src.weight * eval(point, src.shape, wn, tol);
  return u;
}

}  // namespace helmholtz
}  // namespace ballsolve
