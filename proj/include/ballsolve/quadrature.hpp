// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ballsolve/types.hpp"

namespace ballsolve::quadrature {

struct Options {
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  std::size_t max_intervals = 200000;
};

struct Result {
  Complex value;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (10/21) integration of a complex-valued
/// integrand over [breaks.front(), breaks.back()]. Interior breakpoints start
/// as separate intervals; the interval with the largest error is bisected
/// until the total estimate meets max(abs_tol, rel_tol * |value|) or falls to
/// the roundoff level of the integrand.
///
/// Throws ConvergenceError when max_intervals is exhausted.
Result integrate(const std::function<Complex(double)>& f, std::span<const double> breaks,
                 const Options& opts = {});

Result integrate(const std::function<Complex(double)>& f, double a, double b,
                 const Options& opts = {});

/// Sorted, de-duplicated breakpoints in [a, b] with each gap split into
/// pieces no longer than max_width. Extra points outside [a, b] are dropped.
std::vector<double> make_breaks(double a, double b, std::span<const double> extra,
                                double max_width);

}  // namespace ballsolve::quadrature
