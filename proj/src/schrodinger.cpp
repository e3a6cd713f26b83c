// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/schrodinger.hpp"

#include <cmath>

#include "ballsolve/special.hpp"

namespace ballsolve {
namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;
constexpr double kSqrtPi = 1.77245385090551602730;
constexpr double kCenterTol = 1e-9;
// |X| beyond which erf on the ray is split into 1 and a scaled complement.
constexpr double kFarArgument = 4.0;

// e^{i3pi/4} x with exactly opposite components, so (ray(x))^2 is purely
// imaginary in floating point.
Complex ray(double x) { return {-kSqrtHalf * x, kSqrtHalf * x}; }

void check_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("schrodinger: radius must be positive");
}

}  // namespace

SchrodingerParams::SchrodingerParams(double mass, double hbar, double t)
    : SchrodingerParams(mass, hbar, t, mass / (2.0 * hbar * t)) {}

SchrodingerParams::SchrodingerParams(double mass, double hbar, double t, double mt)
    : mass_(mass), hbar_(hbar), t_(t), mt_(mt) {
  if (!(mass > 0.0) || !(hbar > 0.0)) {
    throw DomainError("schrodinger: mass and hbar must be positive");
  }
  if (!(t > 0.0)) throw DomainError("schrodinger: t must be positive (propagator singular at t = 0)");
  if (!std::isfinite(mt) || !(mt > 0.0)) throw DomainError("schrodinger: M_t must be finite and positive");
}

SchrodingerParams SchrodingerParams::from_mt(double mt) {
  if (!(mt > 0.0) || !std::isfinite(mt)) throw DomainError("schrodinger: M_t must be positive");
  return SchrodingerParams(1.0, 1.0, 1.0 / (2.0 * mt), mt);
}

namespace schrodinger {

Complex eval(double d, double r, const SchrodingerParams& p) {
  check_radius(r);
  if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("schrodinger: d must be non-negative");
  if (d < kCenterTol * r) return eval_center(r, p);

  const double m = p.mt();
  const double s = std::sqrt(m);
  if (s * std::abs(d - r) < kFarArgument) {
    const Complex lead{-kSqrtHalf, -kSqrtHalf};  // e^{-i3pi/4}
    const Complex c = lead / (2.0 * s * d * kSqrtPi);
    const Complex erf_part = 0.5 * special::erf_diff(ray(s * (d - r)), ray(s * (d + r)));
    // e^{iM(d-r)^2} - e^{iM(d+r)^2} = -2i e^{iM(d^2+r^2)} sin(2Mdr)
    const Complex phase = special::cis_product(m, d, d) * special::cis_product(m, r, r);
    const double sin_theta = special::cis_product(2.0 * m, d, r).imag();
    return erf_part + c * Complex(0.0, -2.0) * phase * sin_theta;
  }

  // Both erf arguments are far out on the ray. With P = e^{iM(d^2+r^2)},
  // theta = 2Mdr and R the Faddeeva tail, the leading asymptotic terms of
  // the erf pair and the exponential pair combine exactly, leaving
  //   u = [d < r] + P (A + sgn/2 e^{-i theta} R(s|d-r|) - 1/2 e^{i theta} R(s(d+r)))
  //   A = (e^{-i pi/4} r^2 sin(theta) / d + e^{i pi/4} r cos(theta)) / (s sqrt(pi) (d^2 - r^2))
  const Complex phase = special::cis_product(m, d, d) * special::cis_product(m, r, r);
  const Complex e_theta = special::cis_product(2.0 * m, d, r);
  const double sgn = d > r ? 1.0 : -1.0;
  const Complex eighth{kSqrtHalf, kSqrtHalf};  // e^{i pi/4}
  const Complex lead_part = (std::conj(eighth) * (r * r / d) * e_theta.imag() +
                             eighth * r * e_theta.real()) /
                            (s * kSqrtPi * (d - r) * (d + r));
  const Complex tails = 0.5 * sgn * std::conj(e_theta) * special::ray_faddeeva_tail(s * std::abs(d - r)) -
                        0.5 * e_theta * special::ray_faddeeva_tail(s * (d + r));
  return (d < r ? 1.0 : 0.0) + phase * (lead_part + tails);
}

Complex eval_center(double r, const SchrodingerParams& p) {
  check_radius(r);
  const double m = p.mt();
  const double s = std::sqrt(m);
  const Complex w{-kSqrtHalf, kSqrtHalf};
  const Complex phase = special::cis_product(m, r, r);
  const double x = s * r;
  if (x < kFarArgument) return -special::erf(ray(x)) + 2.0 * w * x / kSqrtPi * phase;
  // erf(ray(X)) = -1 + e^{iX^2} W(X), W(X) = e^{i pi/4} / (sqrt(pi) X) + R(X)
  const Complex eighth{kSqrtHalf, kSqrtHalf};
  const Complex big_w = eighth / (kSqrtPi * x) + special::ray_faddeeva_tail(x);
  return 1.0 + phase * (2.0 * w * x / kSqrtPi - big_w);
}

double initial_value(double d, double r) {
  check_radius(r);
  return d <= r ? 1.0 : 0.0;
}

double normalization_factor(double r) {
  check_radius(r);
  return 1.0 / std::sqrt(4.0 * kPi * r * r * r / 3.0);
}

WaveFunctionSample normalize(WaveFunctionSample sample, double r) {
  if (sample.normalized) throw DomainError("schrodinger: sample is already normalized");
  return {sample.value * normalization_factor(r), true};
}

Complex eval(const Vec3& point, const Ball& ball, const SchrodingerParams& p) {
  if (!is_finite(point)) throw DomainError("schrodinger: non-finite evaluation point");
  return eval(distance(point, ball.center), ball.radius, p);
}

Complex eval(const Vec3& point, const Annulus& shell, const SchrodingerParams& p) {
  if (!is_finite(point)) throw DomainError("schrodinger: non-finite evaluation point");
  const double d = distance(point, shell.center);
  Complex u = eval(d, shell.outer_radius, p);
  if (shell.inner_radius > 0.0) u -= eval(d, shell.inner_radius, p);
  return u;
}

Complex eval(const Vec3& point, std::span<const SchrodingerSource> sources,
             const SchrodingerParams& p) {
  Complex u{0.0, 0.0};
  for (const auto& src : sources) u += src.weight * eval(point, src.shape, p);
  return u;
}

}  // namespace schrodinger
}  // namespace ballsolve
