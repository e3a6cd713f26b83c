// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballsolve/helmholtz.hpp"
#include "ballsolve/schrodinger.hpp"
#include "ballsolve/types.hpp"
#include "ballsolve/wave.hpp"

namespace ballsolve {

/// A radial function rho -> f(rho) on [0, R], zero outside.
class RadialProfile {
 public:
  using Function = std::function<double(double)>;

  /// `kinks` lists radii where f or f' may jump (used as quadrature splits).
  /// A supplied H1 norm must not be smaller than the L2 norm.
  RadialProfile(std::string name, Function f, double support_radius,
                std::vector<double> kinks = {}, std::optional<double> h1_norm = std::nullopt);

  static RadialProfile constant(double R, double value = 1.0);
  /// 1 - rho^2 / R^2
  static RadialProfile parabolic(double R);
  /// (1 + cos(pi rho / R)) / 2
  static RadialProfile cosine_bump(double R);
  /// Piecewise-linear interpolation of (rho, value) pairs; R is the last rho.
  static RadialProfile tabulated(std::vector<std::pair<double, double>> table);
  /// "constant", "parabolic" or "cosine-bump".
  static RadialProfile builtin(const std::string& name, double R);

  double operator()(double rho) const;
  const std::string& name() const { return name_; }
  double support_radius() const { return R_; }
  const std::vector<double>& kinks() const { return kinks_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }
  std::optional<double> supplied_h1_norm() const { return h1_norm_; }

  /// Supplied H1 norm if any, else the numerical estimate.
  double h1_norm() const;
  /// sqrt(4 pi int (f^2 + f'^2) rho^2), f' by central differences of step 1e-6 R.
  double estimate_h1_norm() const;
  /// sqrt(4 pi int f^2 rho^2)
  double l2_norm() const;

 private:
  std::string name_;
  Function f_;
  double R_;
  std::vector<double> kinks_;
  std::optional<double> h1_norm_;
  std::vector<std::pair<double, double>> table_;
};

/// Piecewise-constant approximation by volume means on N equal-width annuli.
struct AnnulusDecomposition {
  int n = 0;
  double R = 0.0;
  double dr = 0.0;
  std::vector<double> means;

  /// r_i = i R / N, with r_N == R exactly.
  double radius(int i) const;
};

namespace approx {

/// mean_i = int_{r_i}^{r_{i+1}} f rho^2 / int_{r_i}^{r_{i+1}} rho^2.
/// Throws ConvergenceError naming the annulus index on failure.
AnnulusDecomposition decompose(const RadialProfile& f, int n, double rel_tol = 1e-10);

/// f_N(rho): mean_i on [r_i, r_{i+1}) (last annulus closed at R), 0 beyond R.
double eval_fN(const AnnulusDecomposition& dec, double rho);

/// ||f_N - f||_{L2(B)} by radial quadrature.
double l2_error(const RadialProfile& f, const AnnulusDecomposition& dec);

/// sum_i mean_i (U(r_{i+1}) - U(r_i)) for the ball solution U, written as
/// mean_{N-1} U(R) + sum_{j>=1} (mean_{j-1} - mean_j) U(r_j) so constant data
/// reproduces the single-ball value exactly.
Complex solve_helmholtz_N(const AnnulusDecomposition& dec, const WaveNumber& wn, double d);
Complex solve_schrodinger_N(const AnnulusDecomposition& dec, const SchrodingerParams& p, double d);
WaveSample solve_wave_N(const AnnulusDecomposition& dec_f, const AnnulusDecomposition& dec_g,
                        const WaveParams& p, double d);
/// Displacement data only (g = 0).
WaveSample solve_wave_N(const AnnulusDecomposition& dec_f, const WaveParams& p, double d);
/// Data (wf f_N, wg f_N) from a single decomposition.
WaveSample solve_wave_N(const AnnulusDecomposition& dec, const WaveParams& p, double d,
                        CauchyWeights w);

/// Radii where a superposed wave field has jumps or kinks at time t.
std::vector<double> wave_breakpoints(const AnnulusDecomposition& dec, double ct);

/// Sup-norm bound R^{3/2} / (sqrt(4 pi) N) ||f||_{H1} for the Helmholtz
/// superposition error.
double bound_helmholtz(double R, int n, double h1_norm);
double bound_helmholtz(const RadialProfile& f, int n);

/// Sup-norm bound (m^3 / (6 pi^2 (hbar t)^3)) (R^4 / N) ||f||_{H1}.
double bound_schrodinger(double R, int n, double h1_norm, const SchrodingerParams& p);
double bound_schrodinger(const RadialProfile& f, int n, const SchrodingerParams& p);

/// (R / N) ||f||_{H1}; bounds ||f_N - f||_{L2} and the Schrodinger L2 error.
double bound_schrodinger_L2(double R, int n, double h1_norm);
double bound_schrodinger_L2(const RadialProfile& f, int n);

/// (R / N)(||f||_{H1} + ||g||_{H1}). The wave L2 error is bounded by this
/// times a constant C_T that depends on the final time and is not known;
/// the returned value excludes it.
double bound_wave_rate_factor(double R, int n, double h1_f, double h1_g);

}  // namespace approx
}  // namespace ballsolve
