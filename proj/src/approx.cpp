// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ballsolve/quadrature.hpp"

namespace ballsolve {
namespace {

quadrature::Options opts(double rel_tol) {
  quadrature::Options o;
  o.rel_tol = rel_tol;
  o.abs_tol = 1e-300;
  return o;
}

}  // namespace

RadialProfile::RadialProfile(std::string name, Function f, double support_radius,
                             std::vector<double> kinks, std::optional<double> h1_norm)
    : name_(std::move(name)), f_(std::move(f)), R_(support_radius), kinks_(std::move(kinks)),
      h1_norm_(h1_norm) {
  if (!(R_ > 0.0) || !std::isfinite(R_)) throw DomainError("radial profile: R must be positive");
  if (!f_) throw DomainError("radial profile: missing evaluator");
  if (h1_norm_) {
    if (!(*h1_norm_ >= 0.0)) throw DomainError("radial profile: H1 norm must be non-negative");
    if (*h1_norm_ < l2_norm() * (1.0 - 1e-9)) {
      throw DomainError("radial profile: supplied H1 norm is below the L2 norm");
    }
  }
}

RadialProfile RadialProfile::constant(double R, double value) {
  return RadialProfile("constant", [value](double) { return value; }, R);
}

RadialProfile RadialProfile::parabolic(double R) {
  return RadialProfile("parabolic", [R](double rho) { return 1.0 - (rho * rho) / (R * R); }, R);
}

RadialProfile RadialProfile::cosine_bump(double R) {
  return RadialProfile("cosine-bump",
                       [R](double rho) { return 0.5 * (1.0 + std::cos(kPi * rho / R)); }, R);
}

RadialProfile RadialProfile::tabulated(std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) throw DomainError("tabulated profile: need at least two points");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!std::isfinite(table[i].first) || !std::isfinite(table[i].second)) {
      throw DomainError("tabulated profile: non-finite entry");
    }
    if (i > 0 && !(table[i].first > table[i - 1].first)) {
      throw DomainError("tabulated profile: radii must be strictly increasing");
    }
  }
  if (table.front().first != 0.0) throw DomainError("tabulated profile: first radius must be 0");
  const double R = table.back().first;
  std::vector<double> kinks;
  for (std::size_t i = 1; i + 1 < table.size(); ++i) kinks.push_back(table[i].first);
  auto f = [table](double rho) {
    if (rho <= table.front().first) return table.front().second;
    if (rho >= table.back().first) return table.back().second;
    const auto it = std::upper_bound(table.begin(), table.end(), rho,
                                     [](double x, const auto& p) { return x < p.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (rho - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
  };
  RadialProfile p("tabulated", f, R, std::move(kinks));
  p.table_ = std::move(table);
  return p;
}

RadialProfile RadialProfile::builtin(const std::string& name, double R) {
  if (name == "constant") return constant(R);
  if (name == "parabolic") return parabolic(R);
  if (name == "cosine-bump") return cosine_bump(R);
  throw DomainError("unknown radial profile '" + name + "'");
}

double RadialProfile::operator()(double rho) const {
  if (rho < 0.0 || rho > R_) return 0.0;
  return f_(rho);
}

double RadialProfile::h1_norm() const { return h1_norm_ ? *h1_norm_ : estimate_h1_norm(); }

double RadialProfile::estimate_h1_norm() const {
  const double step = 1e-6 * R_;
  auto deriv = [&](double rho) {
    const double lo = std::max(0.0, rho - step);
    const double hi = std::min(R_, rho + step);
    return (f_(hi) - f_(lo)) / (hi - lo);
  };
  auto integrand = [&](double rho) -> Complex {
    const double v = f_(rho);
    const double dv = deriv(rho);
    return 4.0 * kPi * (v * v + dv * dv) * rho * rho;
  };
  const auto breaks = quadrature::make_breaks(0.0, R_, kinks_, 0.0);
  return std::sqrt(quadrature::integrate(integrand, breaks, opts(1e-10)).value.real());
}

double RadialProfile::l2_norm() const {
  auto integrand = [&](double rho) -> Complex {
    const double v = f_(rho);
    return 4.0 * kPi * v * v * rho * rho;
  };
  const auto breaks = quadrature::make_breaks(0.0, R_, kinks_, 0.0);
  return std::sqrt(quadrature::integrate(integrand, breaks, opts(1e-10)).value.real());
}

double AnnulusDecomposition::radius(int i) const {
  if (i >= n) return R;
  return R * static_cast<double>(i) / static_cast<double>(n);
}

namespace approx {

AnnulusDecomposition decompose(const RadialProfile& f, int n, double rel_tol) {
  if (n < 1) throw DomainError("decompose: N must be at least 1");
  AnnulusDecomposition dec;
  dec.n = n;
  dec.R = f.support_radius();
  dec.dr = dec.R / n;
  dec.means.resize(static_cast<std::size_t>(n));
  auto integrand = [&](double rho) -> Complex { return f(rho) * rho * rho; };
  for (int i = 0; i < n; ++i) {
    const double a = dec.radius(i);
    const double b = dec.radius(i + 1);
    const auto breaks = quadrature::make_breaks(a, b, f.kinks(), 0.0);
    quadrature::Options o = opts(rel_tol);
    o.abs_tol = 1e-15 * b * b * b;
    double num = 0.0;
    try {
      num = quadrature::integrate(integrand, breaks, o).value.real();
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("decompose: annulus " + std::to_string(i) + ": " + e.what());
    }
    const double vol = (b * b * b - a * a * a) / 3.0;
    dec.means[static_cast<std::size_t>(i)] = num / vol;
  }
  return dec;
}

double eval_fN(const AnnulusDecomposition& dec, double rho) {
  if (rho < 0.0 || rho > dec.R || dec.n == 0) return 0.0;
  int i = std::min(dec.n - 1, static_cast<int>(std::floor(rho / dec.dr)));
  // floor of the rounded ratio can land one annulus off.
  while (i > 0 && rho < dec.radius(i)) --i;
  while (i < dec.n - 1 && rho >= dec.radius(i + 1)) ++i;
  return dec.means[static_cast<std::size_t>(i)];
}

double l2_error(const RadialProfile& f, const AnnulusDecomposition& dec) {
  std::vector<double> extra(f.kinks());
  for (int i = 1; i < dec.n; ++i) extra.push_back(dec.radius(i));
  const auto breaks = quadrature::make_breaks(0.0, dec.R, extra, 0.0);
  auto integrand = [&](double rho) -> Complex {
    const double e = eval_fN(dec, rho) - f(rho);
    return 4.0 * kPi * e * e * rho * rho;
  };
  quadrature::Options o = opts(1e-10);
  o.abs_tol = 1e-28;
  return std::sqrt(quadrature::integrate(integrand, breaks, o).value.real());
}

namespace {

template <class T, class Ball>
T superpose(const AnnulusDecomposition& dec, Ball ball_solution) {
  if (dec.n < 1) throw DomainError("superpose: empty decomposition");
  const auto& m = dec.means;
  T acc = m.back() * ball_solution(dec.R);
  for (int j = 1; j < dec.n; ++j) {
    const double w = m[static_cast<std::size_t>(j - 1)] - m[static_cast<std::size_t>(j)];
    if (w != 0.0) acc += w * ball_solution(dec.radius(j));
  }
  return acc;
}

WaveSample superpose_wave(const AnnulusDecomposition& dec, const WaveParams& p, double d,
                          CauchyWeights w) {
  if (dec.n < 1) throw DomainError("superpose: empty decomposition");
  const auto& m = dec.means;
  WaveSample acc = wave::combine(WaveSample{}, 0.0, wave::eval_cauchy(d, dec.R, p, w), m.back());
  for (int j = 1; j < dec.n; ++j) {
    const double wj = m[static_cast<std::size_t>(j - 1)] - m[static_cast<std::size_t>(j)];
    if (wj != 0.0) acc = wave::combine(acc, 1.0, wave::eval_cauchy(d, dec.radius(j), p, w), wj);
  }
  return acc;
}

}  // namespace

Complex solve_helmholtz_N(const AnnulusDecomposition& dec, const WaveNumber& wn, double d) {
  return superpose<Complex>(dec, [&](double r) { return helmholtz::eval(d, r, wn).value; });
}

Complex solve_schrodinger_N(const AnnulusDecomposition& dec, const SchrodingerParams& p, double d) {
  return superpose<Complex>(dec, [&](double r) { return schrodinger::eval(d, r, p); });
}

WaveSample solve_wave_N(const AnnulusDecomposition& dec_f, const AnnulusDecomposition& dec_g,
                        const WaveParams& p, double d) {
  const WaveSample f = superpose_wave(dec_f, p, d, CauchyWeights{1.0, 0.0});
  const WaveSample g = superpose_wave(dec_g, p, d, CauchyWeights{0.0, 1.0});
  return wave::combine(f, 1.0, g, 1.0);
}

WaveSample solve_wave_N(const AnnulusDecomposition& dec_f, const WaveParams& p, double d) {
  return superpose_wave(dec_f, p, d, CauchyWeights{1.0, 0.0});
}

WaveSample solve_wave_N(const AnnulusDecomposition& dec, const WaveParams& p, double d,
                        CauchyWeights w) {
  return superpose_wave(dec, p, d, w);
}

std::vector<double> wave_breakpoints(const AnnulusDecomposition& dec, double ct) {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(3 * dec.n + 3));
  for (int j = 1; j <= dec.n; ++j) {
    const double r = dec.radius(j);
    pts.push_back(r);
    pts.push_back(std::abs(r - ct));
    pts.push_back(r + ct);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double bound_helmholtz(double R, int n, double h1_norm) {
  if (n < 1) throw DomainError("bound: N must be at least 1");
  return std::pow(R, 1.5) / (std::sqrt(4.0 * kPi) * n) * h1_norm;
}

double bound_helmholtz(const RadialProfile& f, int n) {
  return bound_helmholtz(f.support_radius(), n, f.h1_norm());
}

double bound_schrodinger(double R, int n, double h1_norm, const SchrodingerParams& p) {
  if (n < 1) throw DomainError("bound: N must be at least 1");
  const double ht = p.hbar() * p.t();
  const double m = p.mass();
  return (m * m * m / (6.0 * kPi * kPi * ht * ht * ht)) * (R * R * R * R / n) * h1_norm;
}

double bound_schrodinger(const RadialProfile& f, int n, const SchrodingerParams& p) {
  return bound_schrodinger(f.support_radius(), n, f.h1_norm(), p);
}

double bound_schrodinger_L2(double R, int n, double h1_norm) {
  if (n < 1) throw DomainError("bound: N must be at least 1");
  return R / n * h1_norm;
}

double bound_schrodinger_L2(const RadialProfile& f, int n) {
  return bound_schrodinger_L2(f.support_radius(), n, f.h1_norm());
}

double bound_wave_rate_factor(double R, int n, double h1_f, double h1_g) {
  if (n < 1) throw DomainError("bound: N must be at least 1");
  return R / n * (h1_f + h1_g);
}

}  // namespace approx
}  // namespace ballsolve
