// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/wave.hpp"

#include <cmath>

namespace ballsolve {

WaveParams::WaveParams(double speed, double time) : c(speed), t(time) {
  if (!(speed > 0.0) || !std::isfinite(speed)) throw DomainError("wave: c must be positive");
  if (!(time >= 0.0) || !std::isfinite(time)) throw DomainError("wave: t must be non-negative");
}

namespace wave {
namespace {

void check(double d, double r, const WaveParams& p) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("wave: radius must be positive");
  if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("wave: d must be non-negative");
  if (!(p.c > 0.0) || !(p.t >= 0.0)) throw DomainError("wave: invalid parameters");
}

bool in_closed(double x, double lo, double hi) { return x >= lo && x <= hi; }

// (t/2)(1 - (z^2 + d^2 - r^2)/(2dz)) with z = ct.
double cap_factor(double ct, double d, double r, double c) {
  const double off = ct - d;
  return (r - off) * (r + off) / (4.0 * d * c);
}

double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

WaveSample eval_displacement(double d, double r, const WaveParams& p, double tol) {
  check(d, r, p);
  const double ct = p.c * p.t;
  WaveSample out;
  switch (geometry::classify(d, r, tol)) {
    case Branch::Center:
      out.value = ct <= r ? 1.0 : 0.0;
      if (std::abs(ct - r) <= tol * r) {
        out.singular = true;
        out.delta_coefficient = -p.t;
      }
      break;
    case Branch::Interior:
      if (ct <= r - d) {
        out.value = 1.0;
      } else if (ct <= r + d) {
        out.value = (d - ct) / (2.0 * d);
      }
      break;
    case Branch::Boundary:
    case Branch::Exterior:
      if (in_closed(ct, d - r, d + r)) out.value = (d - ct) / (2.0 * d);
      break;
  }
  out.value = clean_zero(out.value);
  return out;
}

WaveSample eval_velocitydata(double d, double r, const WaveParams& p, double tol) {
  check(d, r, p);
  const double ct = p.c * p.t;
  WaveSample out;
  switch (geometry::classify(d, r, tol)) {
    case Branch::Center:
      if (ct <= r) out.value = p.t;
      break;
    case Branch::Interior:
      if (ct <= r - d) {
        out.value = p.t;
      } else if (ct <= r + d) {
        out.value = cap_factor(ct, d, r, p.c);
      }
      break;
    case Branch::Boundary:
    case Branch::Exterior:
      if (in_closed(ct, d - r, d + r)) out.value = cap_factor(ct, d, r, p.c);
      break;
  }
  out.value = clean_zero(out.value);
  return out;
}

WaveSample combine(const WaveSample& a, double wa, const WaveSample& b, double wb) {
  WaveSample out;
  out.value = clean_zero(wa * a.value + wb * b.value);
  out.delta_coefficient = wa * a.delta_coefficient + wb * b.delta_coefficient;
  out.singular = (a.singular && wa != 0.0) || (b.singular && wb != 0.0);
  return out;
}

WaveSample eval_cauchy(double d, double r, const WaveParams& p, CauchyWeights w, double tol) {
  WaveSample disp;
  WaveSample vel;
  if (w.displacement != 0.0) disp = eval_displacement(d, r, p, tol);
  if (w.velocity != 0.0) vel = eval_velocitydata(d, r, p, tol);
  return combine(disp, w.displacement, vel, w.velocity);
}

WaveSample eval(const Vec3& point, const Annulus& shell, const WaveParams& p, CauchyWeights w,
                double tol) {
  if (!is_finite(point)) throw DomainError("wave: non-finite evaluation point");
  const double d = distance(point, shell.center);
  const WaveSample outer = eval_cauchy(d, shell.outer_radius, p, w, tol);
  if (shell.inner_radius == 0.0) return outer;
  const WaveSample inner = eval_cauchy(d, shell.inner_radius, p, w, tol);
  return combine(outer, 1.0, inner, -1.0);
}

WaveSample eval(const Vec3& point, std::span<const WaveSource> sources, const WaveParams& p,
                CauchyWeights w, double tol) {
  WaveSample acc;
  for (const auto& src : sources) acc = combine(acc, 1.0, eval(point, src.shape, p, w, tol), src.weight);
  return acc;
}

}  // namespace wave
}  // namespace ballsolve
