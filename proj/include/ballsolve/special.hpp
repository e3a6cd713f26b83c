// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ballsolve/types.hpp"

namespace ballsolve::special {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz), valid on the whole plane.
///
/// Rational and series approximations in the style of TOMS 680, with
/// symmetry relations for the lower half-plane.
Complex faddeeva(Complex z);

/// exp(-z^2), with z^2 formed by error-free products so the phase stays
/// accurate when |z| is large.
Complex exp_minus_square(Complex z);

/// e^{i m a b}, with the product m a b formed in double-double and reduced
/// modulo 2 pi before rounding, so large phases keep their absolute accuracy.
Complex cis_product(double m, double a, double b);

/// R(a) = w(zeta) - i / (sqrt(pi) zeta) with zeta = e^{i pi/4} a, a > 0: the
/// Faddeeva function on the diagonal less its leading asymptotic term, with
/// no cancellation for large a. On the ray z = e^{i3pi/4} X,
///   erf(z) = -sign(X) (1 - e^{iX^2} (e^{i pi/4} / (sqrt(pi) |X|) + R(|X|))).
Complex ray_faddeeva_tail(double a);

/// Complex error function erf(z) = 2/sqrt(pi) * int_0^z exp(-t^2) dt.
Complex erf(Complex z);

/// Complementary error function 1 - erf(z).
Complex erfc(Complex z);

/// erf(a) - erf(b) without the cancellation of the naive difference.
///
/// Close arguments are integrated directly along the segment [b, a]; pairs
/// deep in one half-plane are differenced through erfc, which carries the
/// small quantity explicitly.
Complex erf_diff(Complex a, Complex b);

}  // namespace ballsolve::special
