// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "ballsolve/special.hpp"

namespace ballsolve::oracle {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr unsigned kLanes = 8;

// Breakpoints every `period` starting at a; a zero or non-finite period
// means no extra splitting.
double panel_width(double period) { return period > 0.0 && std::isfinite(period) ? period : 0.0; }

// sin(x)/x for complex x
Complex sinc(Complex x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

quadrature::Options options(double rel_tol) {
  quadrature::Options o;
  o.rel_tol = rel_tol;
  o.abs_tol = 1e-300;
  return o;
}

}  // namespace

QuadratureResult reduced_integral_helmholtz(double d, double r, const WaveNumber& wn,
                                            double rel_tol) {
  if (!(rel_tol > 0.0)) throw DomainError("reduced_integral_helmholtz: tol must be positive");
  if (!(r > 0.0) || !(d >= 0.0)) throw DomainError("reduced_integral_helmholtz: bad geometry");
  const Complex kap = wn.kappa();
  auto integrand = [&](double z) -> Complex {
    // e^{i kappa z} / (4 pi z) * A(z); A = 4 pi z^2 on the full-sphere part.
    if (d <= r && z <= r - d) return std::exp(kI * kap * z) * z;
    return std::exp(kI * kap * z) * geometry::cap_area(z, d, r) / (4.0 * kPi * z);
  };
  const double lo = std::max(0.0, d - r);
  const std::array<double, 1> split{std::abs(r - d)};
  const auto breaks = quadrature::make_breaks(lo, d + r, split, panel_width(2.0 * kPi / kap.real()));
  return quadrature::integrate(integrand, breaks, options(rel_tol));
}

QuadratureResult reduced_integral_schrodinger(double d, double r, double mt, double rel_tol) {
  if (!(rel_tol > 0.0)) throw DomainError("reduced_integral_schrodinger: tol must be positive");
  if (!(r > 0.0) || !(d >= 0.0) || !(mt > 0.0)) {
    throw DomainError("reduced_integral_schrodinger: bad arguments");
  }
  const double lo = std::max(0.0, d - r);
  const double hi = d + r;
  // Phase zeros z_n = sqrt(2 pi n / M) plus the cap/full-sphere split.
  std::vector<double> extra{std::abs(r - d)};
  const auto n_lo = static_cast<long>(std::floor(mt * lo * lo / (2.0 * kPi)));
  const auto n_hi = static_cast<long>(std::ceil(mt * hi * hi / (2.0 * kPi)));
  for (long n = std::max(1L, n_lo); n <= n_hi; ++n) extra.push_back(std::sqrt(2.0 * kPi * n / mt));
  const auto breaks = quadrature::make_breaks(lo, hi, extra, 0.0);
  // Each panel is integrated in the offset from its left end so the phase
  // M (za + s)^2 = M za^2 + M s (2 za + s) keeps full accuracy.
  QuadratureResult res;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double za = breaks[i];
    const Complex base = special::cis_product(mt, za, za);
    auto integrand = [&](double s) -> Complex {
      return base * std::polar(1.0, mt * s * (2.0 * za + s)) *
             geometry::sphere_ball_intersection_area(za + s, d, r);
    };
    const QuadratureResult part =
        quadrature::integrate(integrand, 0.0, breaks[i + 1] - za, options(rel_tol));
    res.value += part.value;
    res.abs_error_estimate += part.abs_error_estimate;
    res.evaluations += part.evaluations;
  }
  const Complex pre = std::polar(1.0, -0.75 * kPi) * std::pow(mt / kPi, 1.5);
  res.value *= pre;
  res.abs_error_estimate *= std::abs(pre);
  return res;
}

QuadratureResult reduced_volume(double d, double r, double rel_tol) {
  auto integrand = [&](double z) -> Complex {
    return geometry::sphere_ball_intersection_area(z, d, r);
  };
  const std::array<double, 1> split{std::abs(r - d)};
  const auto breaks = quadrature::make_breaks(std::max(0.0, d - r), d + r, split, 0.0);
  return quadrature::integrate(integrand, breaks, options(rel_tol));
}

QuadratureResult radial_reference_helmholtz(const std::function<double(double)>& f, double R,
                                            std::span<const double> kinks, double d,
                                            const WaveNumber& wn, double rel_tol) {
  if (!(R > 0.0) || !(d >= 0.0)) throw DomainError("radial_reference_helmholtz: bad geometry");
  const Complex kap = wn.kappa();
  // Potential of the unit-density sphere of radius rho at distance d:
  //   rho e^{ik max(rho,d)} sin(k min(rho,d)) / (k d)
  auto integrand = [&](double rho) -> Complex {
    const double lo = std::min(rho, d);
    const double hi = std::max(rho, d);
    const Complex shell = rho * std::exp(kI * kap * hi) * lo * sinc(kap * lo) / (d > 0.0 ? d : 1.0);
    return f(rho) * (d > 0.0 ? shell : rho * std::exp(kI * kap * rho));
  };
  std::vector<double> extra(kinks.begin(), kinks.end());
  extra.push_back(d);
  const auto breaks = quadrature::make_breaks(0.0, R, extra, panel_width(2.0 * kPi / kap.real()));
  return quadrature::integrate(integrand, breaks, options(rel_tol));
}

QuadratureResult radial_reference_schrodinger(const std::function<double(double)>& f, double R,
                                              std::span<const double> kinks, double d, double mt,
                                              double rel_tol) {
  if (!(R > 0.0) || !(d >= 0.0) || !(mt > 0.0)) {
    throw DomainError("radial_reference_schrodinger: bad arguments");
  }
  // Sphere of radius rho: (2 pi rho / d) int_{|d-rho|}^{d+rho} e^{iMz^2} z dz
  //   = 2 pi rho e^{iM(d^2+rho^2)} sin(2 M d rho) / (M d)
  auto integrand = [&](double rho) -> Complex {
    const double arg = 2.0 * mt * d * rho;
    const double s = arg == 0.0 ? 1.0 : std::sin(arg) / arg;
    return f(rho) * 4.0 * kPi * rho * rho * s * special::cis_product(mt, d, d) * special::cis_product(mt, rho, rho);
  };
  std::vector<double> extra(kinks.begin(), kinks.end());
  // Local angular frequency in rho is at most 2 M (R + d).
  const double width = kPi / (2.0 * mt * (R + d));
  const auto breaks = quadrature::make_breaks(0.0, R, extra, width);
  QuadratureResult res = quadrature::integrate(integrand, breaks, options(rel_tol));
  const Complex pre = std::polar(1.0, -0.75 * kPi) * std::pow(mt / kPi, 1.5);
  res.value *= pre;
  res.abs_error_estimate *= std::abs(pre);
  return res;
}

Vec3 Rng::direction() {
  const double z = 2.0 * uniform() - 1.0;
  const double phi = 2.0 * kPi * uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

Vec3 Rng::in_unit_ball() {
  for (;;) {
    const Vec3 p{2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0};
    if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] <= 1.0) return p;
  }
}

std::uint64_t lane_seed(std::uint64_t seed, unsigned lane) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (lane + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Runs body(lane, count) on kLanes threads; lane l handles n/kLanes samples
// (the first n % kLanes lanes one extra).
template <class Body>
void run_lanes(std::int64_t n, Body body) {
  std::vector<std::jthread> workers;
  workers.reserve(kLanes);
  for (unsigned lane = 0; lane < kLanes; ++lane) {
    const std::int64_t count = n / kLanes + (static_cast<std::int64_t>(lane) < n % kLanes ? 1 : 0);
    workers.emplace_back([&body, lane, count] { body(lane, count); });
  }
}

}  // namespace

MonteCarloEstimate spherical_mean(const Vec3& point, const Ball& ball, double ct,
                                  std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1000) throw DomainError("spherical_mean: need at least 1000 samples");
  if (!(ct >= 0.0)) throw DomainError("spherical_mean: radius must be non-negative");
  std::array<std::int64_t, kLanes> hits{};
  run_lanes(n_samples, [&](unsigned lane, std::int64_t count) {
    Rng rng(lane_seed(seed, lane));
    std::int64_t h = 0;
    const double r2 = ball.radius * ball.radius;
    for (std::int64_t i = 0; i < count; ++i) {
      const Vec3 u = rng.direction();
      const double dx = point[0] + ct * u[0] - ball.center[0];
      const double dy = point[1] + ct * u[1] - ball.center[1];
      const double dz = point[2] + ct * u[2] - ball.center[2];
      if (dx * dx + dy * dy + dz * dz <= r2) ++h;
    }
    hits[lane] = h;
  });
  std::int64_t total = 0;
  for (auto h : hits) total += h;
  const double p = static_cast<double>(total) / static_cast<double>(n_samples);
  MonteCarloEstimate out;
  out.value = 4.0 * kPi * p;
  out.std_error = 4.0 * kPi * std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples));
  out.samples = n_samples;
  return out;
}

QuadratureResult monte_carlo_3d(const std::function<Complex(const Vec3&)>& kernel,
                                const Ball& ball, std::int64_t n, std::uint64_t seed) {
  if (n < 10000) throw DomainError("monte_carlo_3d: need at least 10^4 samples");
  struct Moments {
    Complex sum{0.0, 0.0};
    double sum_sq = 0.0;  // sum of |k|^2
  };
  std::array<Moments, kLanes> lanes{};
  run_lanes(n, [&](unsigned lane, std::int64_t count) {
    Rng rng(lane_seed(seed, lane));
    Moments m;
    for (std::int64_t i = 0; i < count; ++i) {
      const Vec3 u = rng.in_unit_ball();
      const Vec3 y{ball.center[0] + ball.radius * u[0], ball.center[1] + ball.radius * u[1],
                   ball.center[2] + ball.radius * u[2]};
      const Complex v = kernel(y);
      m.sum += v;
      m.sum_sq += std::norm(v);
    }
    lanes[lane] = m;
  });
  Moments all;
  for (const auto& m : lanes) {
    all.sum += m.sum;
    all.sum_sq += m.sum_sq;
  }
  const double nn = static_cast<double>(n);
  const Complex mean = all.sum / nn;
  const double var = std::max(0.0, all.sum_sq / nn - std::norm(mean)) * nn / (nn - 1.0);
  const double volume = 4.0 * kPi * ball.radius * ball.radius * ball.radius / 3.0;
  QuadratureResult out;
  out.value = volume * mean;
  out.abs_error_estimate = volume * std::sqrt(var / nn);
  out.evaluations = n;
  return out;
}

FdReport fd_residual(const std::function<Complex(const Vec3&, double)>& field,
                     const FdOperator& op,
                     const std::function<Complex(const Vec3&, double)>& expected,
                     const FdGrid& grid) {
  if (grid.points.empty()) throw DomainError("fd_residual: empty grid");
  if (!(grid.h > 0.0) || grid.levels < 2) throw DomainError("fd_residual: need h > 0 and >= 2 levels");
  if (grid.excluded) {
    for (const auto& p : grid.points) {
      if (grid.excluded(p.x, p.t, grid.h)) {
        throw DomainError("fd_residual: grid point stencil crosses an excluded band");
      }
    }
  }
  FdReport rep;
  for (int level = 0; level < grid.levels; ++level) {
    const double h = grid.h / std::ldexp(1.0, level);
    double worst = 0.0;
    std::vector<Complex> residuals;
    residuals.reserve(grid.points.size());
    for (const auto& p : grid.points) {
      const Vec3& x = p.x;
      const Complex u0 = field(x, p.t);
      Complex lap = -6.0 * u0;
      for (int axis = 0; axis < 3; ++axis) {
        Vec3 xp = x;
        Vec3 xm = x;
        xp[axis] += h;
        xm[axis] -= h;
        lap += field(xp, p.t) + field(xm, p.t);
      }
      lap /= h * h;
      Complex res;
      if (op.kind == FdOperator::Kind::Helmholtz) {
        res = lap + op.k_squared * u0;
      } else {
        const double ht = h / op.c;
        const Complex utt = (field(x, p.t + ht) - 2.0 * u0 + field(x, p.t - ht)) / (ht * ht);
        res = utt - op.c * op.c * lap;
      }
      residuals.push_back(res);
      worst = std::max(worst, std::abs(res - expected(x, p.t)));
    }
    rep.steps.push_back(h);
    rep.max_errors.push_back(worst);
    if (level + 1 == grid.levels) rep.finest_residuals = std::move(residuals);
  }
  for (std::size_t i = 0; i + 1 < rep.max_errors.size(); ++i) {
    rep.orders.push_back(std::log2(rep.max_errors[i] / rep.max_errors[i + 1]));
  }
  return rep;
}

L2Result l2_norm_radial(const std::function<Complex(double)>& g, double L,
                        std::span<const double> breaks, double max_width, double rel_tol) {
  if (!(L > 0.0)) throw DomainError("l2_norm_radial: truncation radius must be positive");
  auto integrand = [&](double rho) -> Complex { return 4.0 * kPi * std::norm(g(rho)) * rho * rho; };
  const auto pts = quadrature::make_breaks(0.0, L, breaks, max_width);
  const QuadratureResult q = quadrature::integrate(integrand, pts, options(rel_tol));
  L2Result out;
  out.norm_squared = q.value.real();
  out.norm = std::sqrt(std::max(0.0, out.norm_squared));
  out.abs_error_estimate = q.abs_error_estimate;
  out.evaluations = q.evaluations;
  return out;
}

}  // namespace ballsolve::oracle
