// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <string>

namespace ballsolve::quadrature {
namespace {

// Kronrod 21-point abscissae (positive half, descending) and weights; the
// odd entries are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208063842710, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Interval {
  double a;
  double b;
  Complex value;
  double error;
  double roundoff;  // error level below which refinement cannot help
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gauss_kronrod(const std::function<Complex(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<Complex, 21> fv;
  fv[20] = f(center);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv[2 * j] = f(center - dx);
    fv[2 * j + 1] = f(center + dx);
  }
  Complex kron = kWgk[10] * fv[20];
  Complex gauss{0.0, 0.0};
  double resabs = kWgk[10] * std::abs(fv[20]);
  for (std::size_t j = 0; j < 10; ++j) {
    const Complex sum = fv[2 * j] + fv[2 * j + 1];
    kron += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  const Complex mean = 0.5 * kron;
  double resasc = kWgk[10] * std::abs(fv[20] - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  }
  const double scale = std::abs(half);
  kron *= half;
  gauss *= half;
  resabs *= scale;
  resasc *= scale;
  // QUADPACK error scaling.
  double err = std::abs(kron - gauss);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double kRoundoff = 2.0 * std::numeric_limits<double>::epsilon();
  return {a, b, kron, err, kRoundoff * resabs};
}

}  // namespace

Result integrate(const std::function<Complex(double)>& f, std::span<const double> breaks,
                 const Options& opts) {
  if (breaks.size() < 2) throw DomainError("integrate: need at least two breakpoints");
  std::priority_queue<Interval> heap;
  Result out;
  Complex total{0.0, 0.0};
  double total_err = 0.0;
  double total_roundoff = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] >= breaks[i])) throw DomainError("integrate: breakpoints must be ascending");
    if (breaks[i + 1] == breaks[i]) continue;
    Interval iv = gauss_kronrod(f, breaks[i], breaks[i + 1]);
    out.evaluations += 21;
    total += iv.value;
    total_err += iv.error;
    total_roundoff += iv.roundoff;
    heap.push(iv);
  }
  auto target = [&] {
    return std::max({opts.abs_tol, opts.rel_tol * std::abs(total), total_roundoff});
  };
  while (!heap.empty() && total_err > target()) {
    if (heap.size() >= opts.max_intervals) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "integrate: no convergence after %zu intervals (error estimate %.3g, target %.3g)",
                    heap.size(), total_err, target());
      throw ConvergenceError(msg);
    }
    const Interval worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("integrate: interval width reached floating-point resolution");
    }
    heap.pop();
    const Interval left = gauss_kronrod(f, worst.a, mid);
    const Interval right = gauss_kronrod(f, mid, worst.b);
    out.evaluations += 42;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_roundoff += left.roundoff + right.roundoff - worst.roundoff;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed drift from the running updates.
  total = Complex{0.0, 0.0};
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.abs_error_estimate = total_err;
  return out;
}

Result integrate(const std::function<Complex(double)>& f, double a, double b, const Options& opts) {
  const std::array<double, 2> br{a, b};
  return integrate(f, br, opts);
}

std::vector<double> make_breaks(double a, double b, std::span<const double> extra,
                                double max_width) {
  std::vector<double> pts{a, b};
  for (double x : extra) {
    if (x > a && x < b) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (!(max_width > 0.0) || !std::isfinite(max_width)) return pts;
  std::vector<double> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i];
    const double hi = pts[i + 1];
    const auto pieces = static_cast<std::size_t>(std::ceil((hi - lo) / max_width));
    out.push_back(lo);
    for (std::size_t j = 1; j < pieces; ++j) {
      out.push_back(lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(pieces));
    }
  }
  out.push_back(pts.back());
  return out;
}

}  // namespace ballsolve::quadrature
