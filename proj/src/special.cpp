// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/special.hpp"

#include <array>
#include <cmath>

namespace ballsolve::special {
namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257390;

// Gauss-Legendre nodes/weights on [-1, 1], 20 points (positive half).
constexpr std::array<double, 10> kGlNodes = {
    0.0765265211334973337546404, 0.2277858511416450780804962,
    0.3737060887154195606725482, 0.5108670019508270980043641,
    0.6360536807265150254528367, 0.7463319064601507926143051,
    0.8391169718222188233945291, 0.9122344282513259058677524,
    0.9639719272779137912676661, 0.9931285991850949247861224};
constexpr std::array<double, 10> kGlWeights = {
    0.1527533871307258506980843, 0.1491729864726037467878287,
    0.1420961093183820513292983, 0.1316886384491766268984945,
    0.1181945319615184173123774, 0.1019301198172404350367501,
    0.0832767415767047487247581, 0.0626720483341090635695065,
    0.0406014298003869413310400, 0.0176140071391521183118620};

// Maclaurin series of erf, used only for |z| < 1 where terms do not cancel.
Complex erf_series(Complex z) {
  const Complex z2 = z * z;
  Complex term = z;
  Complex sum = z;
  for (int n = 1; n < 60; ++n) {
    term *= -z2 / static_cast<double>(n);
    const Complex add = term / static_cast<double>(2 * n + 1);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// w(z) for Im z >= 0 and Re z >= 0 (first quadrant), after Poppe & Wijers.
// Also returns exp(-z^2) when the power-series branch computed it.
Complex faddeeva_first_quadrant(double x, double y) {
  const double xs = x / 6.3;
  const double ys = y / 4.4;
  double qrho = xs * xs + ys * ys;
  const double xquad = (x - y) * (x + y);
  const double yquad = 2.0 * x * y;

  if (qrho < 0.085264) {
    qrho = (1.0 - 0.85 * ys) * std::sqrt(qrho);
    const int n_terms = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
    int j = 2 * n_terms + 1;
    double xsum = 1.0 / j;
    double ysum = 0.0;
    for (int i = n_terms; i >= 1; --i) {
      j -= 2;
      const double xaux = (xsum * xquad - ysum * yquad) / i;
      ysum = (xsum * yquad + ysum * xquad) / i;
      xsum = xaux + 1.0 / j;
    }
    const double u1 = -kTwoOverSqrtPi * (xsum * y + ysum * x) + 1.0;
    const double v1 = kTwoOverSqrtPi * (xsum * x - ysum * y);
    const double daux = std::exp(-xquad);
    const double u2 = daux * std::cos(yquad);
    const double v2 = -daux * std::sin(yquad);
    return {u1 * u2 - v1 * v2, u1 * v2 + v1 * u2};
  }

  double h = 0.0;
  double h2 = 0.0;
  int kapn = 0;
  int nu = 0;
  if (qrho > 1.0) {
    qrho = std::sqrt(qrho);
    nu = static_cast<int>(3.0 + 1442.0 / (26.0 * qrho + 77.0));
  } else {
    qrho = (1.0 - ys) * std::sqrt(1.0 - qrho);
    h = 1.88 * qrho;
    h2 = 2.0 * h;
    kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
    nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
  }
  double qlambda = h > 0.0 ? std::pow(h2, kapn) : 0.0;
  double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
  for (int n = nu; n >= 0; --n) {
    const double np1 = n + 1;
    double tx = y + h + np1 * rx;
    const double ty = x - np1 * ry;
    const double c = 0.5 / (tx * tx + ty * ty);
    rx = c * tx;
    ry = c * ty;
    if (h > 0.0 && n <= kapn) {
      tx = qlambda + sx;
      sx = rx * tx - ry * sy;
      sy = ry * tx + rx * sy;
      qlambda /= h2;
    }
  }
  Complex w = h == 0.0 ? Complex(kTwoOverSqrtPi * rx, kTwoOverSqrtPi * ry)
                       : Complex(kTwoOverSqrtPi * sx, kTwoOverSqrtPi * sy);
  if (y == 0.0) w.real(std::exp(-x * x));
  return w;
}

// Upper half-plane value, any sign of Re z.
Complex faddeeva_upper(Complex z) {
  const Complex w = faddeeva_first_quadrant(std::abs(z.real()), z.imag());
  // w(-conj z) = conj(w(z))
  return z.real() < 0.0 ? std::conj(w) : w;
}

// erfc for Re z >= 0, through the upper half-plane Faddeeva value.
Complex erfc_right(Complex z) {
  const Complex e = exp_minus_square(z);
  if (e == Complex(0.0, 0.0)) return {0.0, 0.0};
  return e * faddeeva_upper(Complex(-z.imag(), z.real()));
}

Complex erf_segment(Complex a, Complex b) {
  // 2/sqrt(pi) * int_b^a exp(-t^2) dt along the straight segment.
  const Complex mid = 0.5 * (a + b);
  const Complex half = 0.5 * (a - b);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
    const Complex off = kGlNodes[i] * half;
    sum += kGlWeights[i] * (exp_minus_square(mid + off) + exp_minus_square(mid - off));
  }
  return kTwoOverSqrtPi * half * sum;
}

}  // namespace

Complex exp_minus_square(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  // Re(z^2) = x^2 - y^2 and Im(z^2) = 2xy, each carried as value + error.
  const double xx = x * x;
  const double exx = std::fma(x, x, -xx);
  const double yy = y * y;
  const double eyy = std::fma(y, y, -yy);
  const double re = (xx - yy) + (exx - eyy);
  const double im = 2.0 * x * y;
  const double eim = std::fma(2.0 * x, y, -im);
  const double mag = std::exp(-re);
  if (mag == 0.0) return {0.0, 0.0};
  const double c = std::cos(im);
  const double s = std::sin(im);
  // exp(-i(im + eim)) ~ (c - i s)(1 - i eim)
  return {mag * (c - s * eim), mag * (-s - c * eim)};
}

Complex faddeeva(Complex z) {
  if (z.imag() >= 0.0) return faddeeva_upper(z);
  // w(z) = 2 exp(-z^2) - w(-z)
  return 2.0 * exp_minus_square(z) - faddeeva_upper(-z);
}

Complex erf(Complex z) {
  if (z.real() < 0.0) return -erf(-z);
  if (std::abs(z) < 1.0) return erf_series(z);
  return 1.0 - erfc_right(z);
}

Complex erfc(Complex z) {
  if (std::abs(z) < 1.0) return 1.0 - erf_series(z);
  if (z.real() >= 0.0) return erfc_right(z);
  return 2.0 - erfc_right(-z);
}

Complex erf_diff(Complex a, Complex b) {
  if (a == b) return {0.0, 0.0};
  const double sep = std::abs(a - b);
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (sep * scale <= 0.5) return erf_segment(a, b);
  const double min_mod = std::min(std::abs(a), std::abs(b));
  if (min_mod >= 1.0) {
    if (a.real() >= 0.0 && b.real() >= 0.0) return erfc_right(b) - erfc_right(a);
    if (a.real() <= 0.0 && b.real() <= 0.0) return erfc_right(-a) - erfc_right(-b);
  }
  return erf(a) - erf(b);
}

Complex cis_product(double m, double a, double b) {
  constexpr double kTwoPiHi = 6.283185307179586;
  constexpr double kTwoPiLo = 2.4492935982947064e-16;
  const double p_hi = m * a;
  const double p_lo = std::fma(m, a, -p_hi);
  const double q_hi = p_hi * b;
  const double q_lo = std::fma(p_hi, b, -q_hi) + p_lo * b;
  const double n = std::nearbyint(q_hi / kTwoPiHi);
  const double rem = std::fma(-n, kTwoPiHi, q_hi) - n * kTwoPiLo + q_lo;
  return std::polar(1.0, rem);
}

Complex ray_faddeeva_tail(double a) {
  if (!(a > 0.0)) throw DomainError("ray_faddeeva_tail: argument must be positive");
  constexpr double kSqrtHalf = 0.70710678118654752440;
  constexpr double kInvSqrtPi = 0.56418958354775628695;
  const Complex zeta{kSqrtHalf * a, kSqrtHalf * a};
  if (a < 4.0) return faddeeva(zeta) - Complex(0.0, kInvSqrtPi) / zeta;
  // Laplace continued fraction w = (i/sqrt(pi)) / (zeta - K),
  // K = (1/2) / (zeta - 1 / (zeta - (3/2) / (zeta - ...))).
  Complex k{0.0, 0.0};
  for (int n = 40; n >= 1; --n) k = (0.5 * n) / (zeta - k);
  return Complex(0.0, kInvSqrtPi) * k / (zeta * (zeta - k));
}

}  // namespace ballsolve::special
