// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ballsolve/approx.hpp"
#include "ballsolve/helmholtz.hpp"
#include "ballsolve/parallel.hpp"
#include "ballsolve/schrodinger.hpp"
#include "ballsolve/special.hpp"
#include "ballsolve/wave.hpp"

namespace ballsolve::validation {
namespace {

using Json = nlohmann::ordered_json;

// One seed stream per check, so adding a check never shifts another's draws.
enum Stream : unsigned {
  kHelmholtzOracle = 1,
  kSchrodingerOracle,
  kSphericalMean,
  kPropagation,
};

Clause at_most(std::string name, double measured, double limit, bool tolerance = false) {
  return {std::move(name), measured, Relation::AtMost, limit, 0.0, tolerance};
}

Clause at_least(std::string name, double measured, double limit) {
  return {std::move(name), measured, Relation::AtLeast, limit, 0.0, false};
}

Clause info(std::string name, double measured) {
  return {std::move(name), measured, Relation::Info, 0.0, 0.0, false};
}

Clause within(std::string name, double measured, double lo, double hi) {
  return {std::move(name), measured, Relation::Within, hi, lo, false};
}

void apply_tol(Check& c, const Settings& s) {
  if (!s.tol) return;
  for (auto& cl : c.clauses) {
    if (cl.tolerance) cl.limit = *s.tol;
  }
}

double rel_err(Complex a, Complex ref) {
  const double den = std::abs(ref);
  return den > 0.0 ? std::abs(a - ref) / den : std::abs(a - ref);
}

Vec3 scaled(const Vec3& u, double a) { return {a * u[0], a * u[1], a * u[2]}; }

Vec3 plus(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

std::vector<double> n_sweep() { return {2, 4, 8, 16, 32, 64}; }

}  // namespace

bool Clause::passed() const {
  switch (relation) {
    case Relation::AtMost:
      return measured <= limit;
    case Relation::AtLeast:
      return measured >= limit;
    case Relation::Within:
      return measured >= limit_lo && measured <= limit;
    case Relation::Info:
      return true;
  }
  return false;
}

bool Check::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed(); });
}

double loglog_slope(const std::vector<double>& n, const std::vector<double>& err) {
  if (n.size() != err.size() || n.size() < 2) throw DomainError("loglog_slope: need >= 2 pairs");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x = std::log(n[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(n.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

Check helmholtz_oracle(const Settings& s) {
  Check c{"helmholtz_oracle", "Helmholtz closed form vs reduced 1D quadrature", {}};
  oracle::Rng rng(oracle::lane_seed(s.seed, kHelmholtzOracle));
  struct Case {
    double d, r, k;
  };
  std::vector<Case> cases;
  for (int i = 0; i < s.oracle_cases; ++i) {
    const double r = rng.uniform(0.1, 2.0);
    const double k = std::exp(rng.uniform(std::log(0.1), std::log(50.0)));
    const double d = rng.uniform(0.0, 5.0) * r;
    cases.push_back({d, r, k});
  }
  const auto errs = parallel_map(cases.size(), [&](std::size_t i) {
    const WaveNumber wn(cases[i].k);
    const Complex closed = helmholtz::eval(cases[i].d, cases[i].r, wn).value;
    return rel_err(closed, oracle::reduced_integral_helmholtz(cases[i].d, cases[i].r, wn).value);
  });
  const auto worst = std::max_element(errs.begin(), errs.end());
  c.clauses.push_back(at_most("max_relative_error", *worst, 1e-8, true));
  const auto& w = cases[static_cast<std::size_t>(worst - errs.begin())];
  c.detail["cases"] = s.oracle_cases;
  c.detail["sampling"] = "r in [0.1, 2], k log-uniform in [0.1, 50], d/r in [0, 5]";
  c.detail["worst_case"] = {{"d", w.d}, {"r", w.r}, {"k", w.k}};
  apply_tol(c, s);
  return c;
}

Check schrodinger_oracle(const Settings& s) {
  Check c{"schrodinger_oracle", "Schrodinger closed form vs reduced 1D quadrature", {}};
  oracle::Rng rng(oracle::lane_seed(s.seed, kSchrodingerOracle));
  struct Case {
    double d, r, mt;
  };
  std::vector<Case> cases;
  for (int i = 0; i < s.oracle_cases; ++i) {
    const double r = rng.uniform(0.1, 2.0);
    const double mt = std::exp(rng.uniform(std::log(0.01), std::log(100.0)));
    const double d = rng.uniform(0.0, 5.0) * r;
    cases.push_back({d, r, mt});
  }
  const auto errs = parallel_map(cases.size(), [&](std::size_t i) {
    const auto p = SchrodingerParams::from_mt(cases[i].mt);
    const Complex closed = schrodinger::eval(cases[i].d, cases[i].r, p);
    return rel_err(closed,
                   oracle::reduced_integral_schrodinger(cases[i].d, cases[i].r, cases[i].mt).value);
  });
  const auto worst = std::max_element(errs.begin(), errs.end());
  c.clauses.push_back(at_most("max_relative_error", *worst, 1e-8, true));

  // erf along e^{i3pi/4} x, as used by every case above.
  double ray_max = 0.0;
  for (int i = 0; i <= 3000; ++i) {
    const double x = 0.01 * i;
    const Complex z{-x / std::sqrt(2.0), x / std::sqrt(2.0)};
    ray_max = std::max(ray_max, std::abs(special::erf(z)));
  }
  c.clauses.push_back(info("max_abs_erf_on_ray", ray_max));
  const auto& w = cases[static_cast<std::size_t>(worst - errs.begin())];
  c.detail["cases"] = s.oracle_cases;
  c.detail["sampling"] = "r in [0.1, 2], Mt log-uniform in [0.01, 100], d/r in [0, 5]";
  c.detail["worst_case"] = {{"d", w.d}, {"r", w.r}, {"mt", w.mt}};
  apply_tol(c, s);
  return c;
}

Check wave_spherical_mean(const Settings& s) {
  Check c{"wave_spherical_mean", "Velocity-data solution vs spherical means", {}};
  oracle::Rng rng(oracle::lane_seed(s.seed, kSphericalMean));
  double cap_worst = 0.0;
  double z_worst = 0.0;
  for (int i = 0; i < s.mc_configs; ++i) {
    const double r = rng.uniform(0.2, 2.0);
    const double d = rng.uniform(0.0, 3.0) * r;
    const double cspeed = rng.uniform(0.5, 2.0);
    const double lo = std::max(0.0, d - r);
    const double ct = rng.uniform(std::max(1e-3, lo - 0.1 * r), d + r + 0.1 * r);
    const WaveParams p(cspeed, ct / cspeed);
    const Vec3 center{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const Vec3 point = plus(center, scaled(rng.direction(), d));
    const double dd = distance(point, center);

    const double v = wave::eval_velocitydata(dd, r, p).value;
    const double scaled_v = v * 4.0 * kPi * cspeed * cspeed * p.t;
    const double area = geometry::sphere_ball_intersection_area(ct, dd, r);
    cap_worst = std::max(cap_worst, std::abs(scaled_v - area) / std::max(1.0, area));

    const auto mc = oracle::spherical_mean(point, Ball(center, r), ct, s.mc_samples,
                                           oracle::lane_seed(s.seed, 1000 + i));
    const double expected = scaled_v / (ct * ct);
    const double se = std::max(mc.std_error, 4.0 * kPi / static_cast<double>(s.mc_samples));
    z_worst = std::max(z_worst, std::abs(mc.value - expected) / se);
  }
  c.clauses.push_back(at_most("max_cap_formula_error", cap_worst, 1e-12, true));
  c.clauses.push_back(at_most("max_monte_carlo_z", z_worst, 3.0));
  c.detail["configurations"] = s.mc_configs;
  c.detail["samples_per_configuration"] = s.mc_samples;
  apply_tol(c, s);
  return c;
}

Check helmholtz_continuity(const Settings& s) {
  Check c{"helmholtz_continuity", "Helmholtz branches agree at the boundary", {}};
  double worst = 0.0;
  double worst_center = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    for (double k : {0.1, 1.0, 7.0, 30.0}) {
      for (double sigma : {0.0, 0.5}) {
        const WaveNumber wn(k, sigma);
        const Complex in = helmholtz::eval_interior(r, r, wn);
        const Complex out = helmholtz::eval_exterior(r, r, wn);
        worst = std::max(worst, std::abs(in - out) / std::max(1.0, std::abs(out)));
        const Complex near = helmholtz::eval_interior(1e-12 * r, r, wn);
        worst_center = std::max(worst_center, std::abs(near - helmholtz::eval_center(r, wn)));
      }
    }
  }
  c.clauses.push_back(at_most("max_boundary_mismatch", worst, 1e-14, true));
  c.clauses.push_back(at_most("max_center_mismatch", worst_center, 1e-10, true));

  // |u_in(r - delta) - u_out(r + delta)| / delta stays bounded.
  const WaveNumber wn(1.0);
  double ratio_max = 0.0;
  for (int e = 3; e <= 9; ++e) {
    const double delta = std::pow(10.0, -e);
    const Complex in = helmholtz::eval_interior(1.0 - delta, 1.0, wn);
    const Complex out = helmholtz::eval_exterior(1.0 + delta, 1.0, wn);
    ratio_max = std::max(ratio_max, std::abs(in - out) / delta);
  }
  c.clauses.push_back(at_most("max_jump_over_delta", ratio_max, 10.0));
  apply_tol(c, s);
  return c;
}

Check schrodinger_continuity(const Settings& s) {
  Check c{"schrodinger_continuity", "Schrodinger near-center value vs center formula", {}};
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    for (double mt : {0.01, 0.5, 3.0, 50.0}) {
      const auto p = SchrodingerParams::from_mt(mt);
      worst = std::max(worst, std::abs(schrodinger::eval(1e-10 * r, r, p) -
                                       schrodinger::eval_center(r, p)));
    }
  }
  c.clauses.push_back(at_most("max_center_mismatch", worst, 1e-9, true));
  apply_tol(c, s);
  return c;
}

Check wave_continuity(const Settings& s) {
  Check c{"wave_continuity", "Wave interior and exterior branches agree at d = r", {}};
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    const double below = std::nextafter(r, 0.0);
    const double above = std::nextafter(r, 2.0 * r);
    for (int i = 1; i <= 300; ++i) {
      const WaveParams p(1.0, 3.0 * r * i / 300.0);
      for (CauchyWeights w : {CauchyWeights{1.0, 0.0}, CauchyWeights{0.0, 1.0}}) {
        const double in = wave::eval_cauchy(below, r, p, w, 0.0).value;
        const double out = wave::eval_cauchy(above, r, p, w, 0.0).value;
        worst = std::max(worst, std::abs(in - out));
      }
    }
  }
  c.clauses.push_back(at_most("max_branch_mismatch", worst, 1e-14, true));
  apply_tol(c, s);
  return c;
}

Check helmholtz_residual(const Settings& s) {
  Check c{"helmholtz_residual", "Seven-point (Lap + k^2) u vs the source", {}};
  const Ball ball({0.0, 0.0, 0.0}, 1.0);
  double order_lo = std::numeric_limits<double>::infinity();
  double order_hi = -order_lo;
  Json levels = Json::array();
  for (double sigma : {0.0, 0.5}) {
    const WaveNumber wn(2.0, sigma);
    for (bool interior : {true, false}) {
      oracle::FdGrid g;
      g.h = 0.05;
      g.levels = 3;
      if (interior) {
        g.points = {{{0.3, 0.1, 0.0}, 0.0}, {{0.5, 0.2, -0.1}, 0.0}, {{0.05, 0.02, 0.01}, 0.0}};
      } else {
        g.points = {{{1.6, 0.3, 0.2}, 0.0}, {{0.0, 2.5, 0.0}, 0.0}, {{-1.2, -1.1, 0.4}, 0.0}};
      }
      g.excluded = [&](const Vec3& x, double, double h) {
        return std::abs(distance(x, ball.center) - ball.radius) <= 3.0 * h;
      };
      oracle::FdOperator op;
      op.k_squared = wn.kappa() * wn.kappa();
      // The closed form satisfies (Lap + k^2) u = -chi_B.
      const auto rep = oracle::fd_residual(
          [&](const Vec3& x, double) { return helmholtz::eval(x, ball, wn).value; }, op,
          [&](const Vec3& x, double) -> Complex {
            return distance(x, ball.center) < ball.radius ? -1.0 : 0.0;
          },
          g);
      for (double o : rep.orders) {
        order_lo = std::min(order_lo, o);
        order_hi = std::max(order_hi, o);
      }
      levels.push_back({{"sigma", sigma},
                        {"region", interior ? "interior" : "exterior"},
                        {"steps", rep.steps},
                        {"max_errors", rep.max_errors}});
    }
  }
  c.clauses.push_back(within("min_order", order_lo, 1.8, 2.2));
  c.clauses.push_back(within("max_order", order_hi, 1.8, 2.2));
  c.detail["levels"] = levels;
  apply_tol(c, s);
  return c;
}

Check wave_residual(const Settings& s) {
  Check c{"wave_residual", "Spacetime residual u_tt - c^2 Lap u away from fronts", {}};
  const Ball ball({0.0, 0.0, 0.0}, 1.0);
  double order_lo = std::numeric_limits<double>::infinity();
  double order_hi = -order_lo;
  Json levels = Json::array();
  const double cspeed = 1.0;
  for (CauchyWeights w : {CauchyWeights{1.0, 0.0}, CauchyWeights{0.0, 1.0}}) {
    oracle::FdGrid g;
    g.h = 0.05;
    g.levels = 3;
    g.points = {{{2.0, 0.1, 0.0}, 1.5}, {{0.3, 0.2, 0.1}, 1.0}, {{0.5, 0.0, 0.0}, 0.9},
                {{2.5, 0.5, 0.5}, 2.0}};
    g.excluded = [&](const Vec3& x, double t, double h) {
      const double d = distance(x, ball.center);
      const double ct = cspeed * t;
      const double band = 3.0 * h;
      return std::abs(ct - std::abs(d - ball.radius)) <= band ||
             std::abs(ct - (d + ball.radius)) <= band || d <= band;
    };
    oracle::FdOperator op;
    op.kind = oracle::FdOperator::Kind::Wave;
    op.c = cspeed;
    const auto rep = oracle::fd_residual(
        [&](const Vec3& x, double t) -> Complex {
          return wave::eval_cauchy(distance(x, ball.center), ball.radius, WaveParams(cspeed, t), w)
              .value;
        },
        op, [](const Vec3&, double) -> Complex { return 0.0; }, g);
    for (double o : rep.orders) {
      order_lo = std::min(order_lo, o);
      order_hi = std::max(order_hi, o);
    }
    levels.push_back({{"data", w.displacement != 0.0 ? "displacement" : "velocity"},
                      {"steps", rep.steps},
                      {"max_errors", rep.max_errors}});
  }
  c.clauses.push_back(within("min_order", order_lo, 1.8, 2.2));
  c.clauses.push_back(within("max_order", order_hi, 1.8, 2.2));
  c.detail["levels"] = levels;
  apply_tol(c, s);
  return c;
}

Check sommerfeld(const Settings& s) {
  Check c{"sommerfeld", "Radiation condition |d (u_d - i k u)| decay", {}};
  const WaveNumber wn(1.0);
  std::vector<double> q;
  for (double d : {1e2, 1e3, 1e4}) {
    const Complex u = helmholtz::eval_exterior(d, 1.0, wn);
    const Complex du = helmholtz::eval_exterior_radial_derivative(d, 1.0, wn);
    q.push_back(std::abs(d * (du - Complex(0.0, 1.0) * u)));
  }
  c.clauses.push_back(at_least("decay_factor_1e2_1e3", q[0] / q[1], 9.0));
  c.clauses.push_back(at_least("decay_factor_1e3_1e4", q[1] / q[2], 9.0));
  c.detail["values"] = q;
  apply_tol(c, s);
  return c;
}

Check conservation(const Settings& s) {
  Check c{"conservation", "Schrodinger L2 norm equals the ball volume", {}};
  const double r = 1.0;
  const double volume = 4.0 * kPi * r * r * r / 3.0;
  const std::vector<double> mts{0.5, 2.0};
  struct Out {
    double rel, tail, bound;
  };
  const auto outs = parallel_map(mts.size(), [&](std::size_t i) {
    const double mt = mts[i];
    const auto p = SchrodingerParams::from_mt(mt);
    const double L = 3e4 / mt;
    const std::array<double, 1> br{r};
    auto g = [&](double d) -> Complex { return schrodinger::eval(d, r, p); };
    const double width = kPi / (2.0 * mt * r);
    const auto full = oracle::l2_norm_radial(g, L, br, width, 1e-10);
    const auto half = oracle::l2_norm_radial(g, 0.5 * L, br, width, 1e-10);
    // |u|^2 d^2 ~ 1/d^2 far out, so the tail past L matches the mass in [L/2, L].
    const double tail = full.norm_squared - half.norm_squared;
    return Out{std::abs(full.norm_squared + tail - volume) / volume, tail, 4.0 * r * r / (mt * L)};
  });
  double rel = 0.0, tail = 0.0;
  Json per = Json::array();
  for (std::size_t i = 0; i < mts.size(); ++i) {
    rel = std::max(rel, outs[i].rel);
    tail = std::max(tail, outs[i].tail);
    per.push_back({{"mt", mts[i]},
                   {"relative_error", outs[i].rel},
                   {"tail_estimate", outs[i].tail},
                   {"tail_bound", outs[i].bound}});
  }
  c.clauses.push_back(at_most("max_relative_error", rel, 1e-3, true));
  c.clauses.push_back(at_most("max_truncation_tail", tail, 1e-4));
  c.detail["runs"] = per;
  c.detail["truncation"] = "L = 3e4 / Mt; tail estimated by the mass in [L/2, L]";
  apply_tol(c, s);
  return c;
}

Check helmholtz_superposition_bound(const Settings& s) {
  Check c{"helmholtz_superposition_bound", "Annulus superposition sup error vs bound", {}};
  const auto f = RadialProfile::parabolic(1.0);
  const double R = f.support_radius();
  const WaveNumber wn(2.0);
  std::vector<double> ds;
  for (int i = 0; i <= 300; ++i) ds.push_back(3.0 * R * i / 300.0);
  const auto ref = parallel_map(ds.size(), [&](std::size_t i) {
    return oracle::radial_reference_helmholtz([&](double rho) { return f(rho); }, R, f.kinks(),
                                              ds[i], wn)
        .value;
  });
  const auto ns = n_sweep();
  std::vector<double> errs;
  double ratio = 0.0;
  Json rows = Json::array();
  const double h1 = f.h1_norm();
  for (double n : ns) {
    const auto dec = approx::decompose(f, static_cast<int>(n));
    double e = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      e = std::max(e, std::abs(approx::solve_helmholtz_N(dec, wn, ds[i]) - ref[i]));
    }
    const double b = approx::bound_helmholtz(R, static_cast<int>(n), h1);
    errs.push_back(e);
    ratio = std::max(ratio, e / b);
    rows.push_back({{"N", n}, {"sup_error", e}, {"bound", b}});
  }
  c.clauses.push_back(at_most("max_error_over_bound", ratio, 1.0));
  c.clauses.push_back(within("loglog_slope", loglog_slope(ns, errs), -1.3, -0.8));
  c.detail["profile"] = "1 - rho^2, R = 1, k = 2";
  c.detail["h1_norm"] = h1;
  c.detail["reference"] = "radial quadrature of the sphere potentials, d in [0, 3R] step 0.01";
  c.detail["table"] = rows;
  apply_tol(c, s);
  return c;
}

Check approximation_estimate(const Settings& s) {
  Check c{"approximation_estimate", "||f_N - f|| <= (R/N) ||f||_H1", {}};
  const auto ns = n_sweep();
  double ratio = 0.0;
  Json rows = Json::array();
  for (const char* name : {"constant", "parabolic", "cosine-bump"}) {
    const auto f = RadialProfile::builtin(name, 1.0);
    const double h1 = f.h1_norm();
    std::vector<double> errs;
    bool monotone = true;
    for (double n : ns) {
      const auto dec = approx::decompose(f, static_cast<int>(n));
      const double e = approx::l2_error(f, dec);
      const double b = approx::bound_schrodinger_L2(f.support_radius(), static_cast<int>(n), h1);
      if (!errs.empty() && e > errs.back()) monotone = false;
      errs.push_back(e);
      ratio = std::max(ratio, e / b);
      rows.push_back({{"profile", name}, {"N", n}, {"l2_error", e}, {"bound", b}});
    }
    if (std::string(name) != "constant") {
      const std::vector<double> tail_n(ns.begin() + 1, ns.end());
      const std::vector<double> tail_e(errs.begin() + 1, errs.end());
      c.clauses.push_back(
          within(std::string("loglog_slope_") + name, loglog_slope(tail_n, tail_e), -1.3, -0.8));
      c.clauses.push_back(at_least(std::string("monotone_") + name, monotone ? 1.0 : 0.0, 1.0));
    }
  }
  c.clauses.insert(c.clauses.begin(), at_most("max_error_over_bound", ratio, 1.0));
  c.detail["table"] = rows;
  apply_tol(c, s);
  return c;
}

Check schrodinger_isometry(const Settings& s) {
  Check c{"schrodinger_isometry", "||u_N - u|| equals ||f_N - f|| for Schrodinger", {}};
  const auto f = RadialProfile::parabolic(1.0);
  const double R = f.support_radius();
  const double mt = 0.5;
  const auto p = SchrodingerParams::from_mt(mt);
  const std::vector<int> ns{4, 8, 16};
  struct Out {
    double field, data, rel;
  };
  const auto outs = parallel_map(ns.size(), [&](std::size_t i) {
    const auto dec = approx::decompose(f, ns[i]);
    auto g = [&](double d) -> Complex {
      const auto ref = oracle::radial_reference_schrodinger([&](double rho) { return f(rho); }, R,
                                                            f.kinks(), d, mt, 1e-11);
      return approx::solve_schrodinger_N(dec, p, d) - ref.value;
    };
    const double L = 1000.0;
    const std::array<double, 1> br{R};
    const double width = kPi / (2.0 * mt * R);
    const auto full = oracle::l2_norm_radial(g, L, br, width, 1e-8);
    const auto half = oracle::l2_norm_radial(g, 0.5 * L, br, width, 1e-8);
    const double field = std::sqrt(full.norm_squared + (full.norm_squared - half.norm_squared));
    const double data = approx::l2_error(f, dec);
    return Out{field, data, std::abs(field - data) / data};
  });
  double rel = 0.0;
  Json rows = Json::array();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    rel = std::max(rel, outs[i].rel);
    rows.push_back({{"N", ns[i]}, {"field_l2", outs[i].field}, {"data_l2", outs[i].data}});
  }
  c.clauses.push_back(at_most("max_relative_difference", rel, 1e-3, true));
  c.detail["profile"] = "1 - rho^2, R = 1, Mt = 0.5";
  c.detail["truncation"] = "L = 1000; tail estimated by the mass in [L/2, L]";
  c.detail["table"] = rows;
  apply_tol(c, s);
  return c;
}

Check wave_rate(const Settings& s) {
  Check c{"wave_rate", "Wave superposition L2 error rate at t = 0.3", {}};
  const auto f = RadialProfile::parabolic(1.0);
  const double R = f.support_radius();
  const WaveParams p(1.0, 0.3);
  const double ct = p.c * p.t;
  const auto ref = approx::decompose(f, 512);
  const auto ref_breaks = approx::wave_breakpoints(ref, ct);
  const std::vector<double> ns{4, 8, 16, 32, 64};
  const auto errs = parallel_map(ns.size(), [&](std::size_t i) {
    const auto dec = approx::decompose(f, static_cast<int>(ns[i]));
    auto br = approx::wave_breakpoints(dec, ct);
    br.insert(br.end(), ref_breaks.begin(), ref_breaks.end());
    auto g = [&](double d) -> Complex {
      return approx::solve_wave_N(dec, p, d).value - approx::solve_wave_N(ref, p, d).value;
    };
    return oracle::l2_norm_radial(g, R + ct, br, 0.0, 1e-8).norm;
  });
  c.clauses.push_back(within("loglog_slope", loglog_slope(ns, errs), -1.3, -0.8));
  Json rows = Json::array();
  for (std::size_t i = 0; i < ns.size(); ++i) rows.push_back({{"N", ns[i]}, {"l2_error", errs[i]}});
  c.detail["reference"] = "self-convergence against N = 512";
  c.detail["data"] = "f = 1 - rho^2, g = 0, c = 1";
  c.detail["table"] = rows;
  apply_tol(c, s);
  return c;
}

Check finite_propagation(const Settings& s) {
  Check c{"finite_propagation", "Exterior wave samples vanish outside [d - r, d + r]", {}};
  oracle::Rng rng(oracle::lane_seed(s.seed, kPropagation));
  int nonzero = 0;
  for (int i = 0; i < s.propagation_configs; ++i) {
    const double r = rng.uniform(0.1, 2.0);
    const double d = r * rng.uniform(1.0 + 1e-6, 5.0);
    const double cspeed = rng.uniform(0.2, 3.0);
    const bool early = rng.uniform() < 0.5;
    const double ct = early ? rng.uniform(0.0, d - r) * (1.0 - 1e-12) : (d + r) * rng.uniform(1.0 + 1e-12, 3.0);
    const WaveParams p(cspeed, ct / cspeed);
    if (p.c * p.t >= d - r && p.c * p.t <= d + r) continue;  // rounding moved ct inside
    for (CauchyWeights w : {CauchyWeights{1.0, 0.0}, CauchyWeights{0.0, 1.0}}) {
      const WaveSample smp = wave::eval_cauchy(d, r, p, w);
      if (std::signbit(smp.value) || smp.value != 0.0 || smp.singular) ++nonzero;
    }
  }
  c.clauses.push_back(at_most("nonzero_samples", nonzero, 0.0));
  c.detail["configurations"] = s.propagation_configs;
  apply_tol(c, s);
  return c;
}

bool is_suite(const std::string& name) {
  return name == "helmholtz" || name == "schrodinger" || name == "wave" || name == "approx" ||
         name == "all";
}

std::vector<Check> run_suite(const std::string& name, const Settings& s) {
  if (!is_suite(name)) throw DomainError("unknown suite '" + name + "'");
  std::vector<Check> out;
  const bool all = name == "all";
  if (all || name == "helmholtz") {
    out.push_back(helmholtz_oracle(s));
    out.push_back(helmholtz_continuity(s));
    out.push_back(helmholtz_residual(s));
    out.push_back(sommerfeld(s));
  }
  if (all || name == "schrodinger") {
    out.push_back(schrodinger_oracle(s));
    out.push_back(schrodinger_continuity(s));
    out.push_back(conservation(s));
  }
  if (all || name == "wave") {
    out.push_back(wave_spherical_mean(s));
    out.push_back(wave_continuity(s));
    out.push_back(wave_residual(s));
    out.push_back(finite_propagation(s));
  }
  if (all || name == "approx") {
    out.push_back(helmholtz_superposition_bound(s));
    out.push_back(approximation_estimate(s));
    out.push_back(schrodinger_isometry(s));
    out.push_back(wave_rate(s));
  }
  return out;
}

nlohmann::ordered_json report(const std::string& suite, const Settings& s,
                              const std::vector<Check>& checks) {
  Json j;
  j["suite"] = suite;
  j["seed"] = s.seed;
  j["tolerance_override"] = s.tol ? Json(*s.tol) : Json(nullptr);
  bool all = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["id"] = c.id;
    cj["title"] = c.title;
    cj["passed"] = c.passed();
    Json cls = Json::array();
    for (const auto& cl : c.clauses) {
      Json x;
      x["name"] = cl.name;
      x["measured"] = cl.measured;
      switch (cl.relation) {
        case Relation::AtMost:
          x["relation"] = "<=";
          x["limit"] = cl.limit;
          break;
        case Relation::AtLeast:
          x["relation"] = ">=";
          x["limit"] = cl.limit;
          break;
        case Relation::Within:
          x["relation"] = "within";
          x["limit"] = {cl.limit_lo, cl.limit};
          break;
        case Relation::Info:
          x["relation"] = "info";
          break;
      }
      x["passed"] = cl.passed();
      cls.push_back(x);
    }
    cj["clauses"] = cls;
    cj["detail"] = c.detail;
    all = all && c.passed();
    arr.push_back(cj);
  }
  j["passed"] = all;
  j["checks"] = arr;
  return j;
}

}  // namespace ballsolve::validation
