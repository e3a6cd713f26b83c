// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/converge.hpp"

#include <algorithm>
#include <cmath>

#include "ballsolve/oracle.hpp"
#include "ballsolve/parallel.hpp"
#include "ballsolve/schrodinger.hpp"
#include "ballsolve/validation.hpp"
#include "ballsolve/wave.hpp"

namespace ballsolve::converge {
namespace {

constexpr int kWaveReferenceN = 512;

std::vector<double> sample_distances(double R, int points) {
  std::vector<double> ds;
  for (int i = 0; i < points; ++i) ds.push_back(3.0 * R * i / (points - 1));
  return ds;
}

}  // namespace

bool Table::bounds_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.within_bound; });
}

void check_n_list(const std::vector<int>& ns) {
  if (ns.size() < 3) throw ParseError("--N needs at least three entries");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw ParseError("--N entries must be positive");
    if (i > 0 && ns[i] <= ns[i - 1]) throw ParseError("--N must be strictly ascending");
  }
}

Table run(const RadialProfile& f, Equation eq, const std::vector<int>& ns, const Options& opt) {
  check_n_list(ns);
  if (opt.points < 2) throw DomainError("converge: need at least two sample points");
  Table tab;
  tab.profile = f.name();
  tab.equation = eq;
  tab.h1_norm = f.h1_norm();
  const double R = f.support_radius();
  auto fn = [&f](double rho) { return f(rho); };

  std::vector<double> errors(ns.size());
  switch (eq) {
    case Equation::Helmholtz:
    case Equation::Schrodinger: {
      const std::vector<double> ds = sample_distances(R, opt.points);
      const bool helm = eq == Equation::Helmholtz;
      const WaveNumber wn(opt.k, opt.sigma);
      const SchrodingerParams sp = SchrodingerParams::from_mt(opt.mt);
      const auto ref = parallel_map(ds.size(), [&](std::size_t i) {
        return helm ? oracle::radial_reference_helmholtz(fn, R, f.kinks(), ds[i], wn).value
                    : oracle::radial_reference_schrodinger(fn, R, f.kinks(), ds[i], opt.mt).value;
      });
      for (std::size_t j = 0; j < ns.size(); ++j) {
        const auto dec = approx::decompose(f, ns[j]);
        const auto err = parallel_map(ds.size(), [&](std::size_t i) {
          const Complex v = helm ? approx::solve_helmholtz_N(dec, wn, ds[i])
                                 : approx::solve_schrodinger_N(dec, sp, ds[i]);
          return std::abs(v - ref[i]);
        });
        errors[j] = *std::max_element(err.begin(), err.end());
        Row row{ns[j], errors[j],
                helm ? approx::bound_helmholtz(R, ns[j], tab.h1_norm)
                     : approx::bound_schrodinger(R, ns[j], tab.h1_norm, sp)};
        row.within_bound = row.error <= row.bound;
        tab.rows.push_back(row);
      }
      tab.norm = "sup over d in [0, 3R]";
      tab.reference = "radial quadrature of the sphere potentials";
      tab.bound_formula = helm ? "R^{3/2} / (sqrt(4 pi) N) ||f||_H1"
                               : "m^3 / (6 pi^2 (hbar t)^3) (R^4 / N) ||f||_H1";
      break;
    }
    case Equation::Wave: {
      const WaveParams p(1.0, opt.t);
      const double ct = p.c * p.t;
      const auto ref = approx::decompose(f, kWaveReferenceN);
      const auto ref_breaks = approx::wave_breakpoints(ref, ct);
      errors = parallel_map(ns.size(), [&](std::size_t j) {
        const auto dec = approx::decompose(f, ns[j]);
        auto br = approx::wave_breakpoints(dec, ct);
        br.insert(br.end(), ref_breaks.begin(), ref_breaks.end());
        auto g = [&](double d) -> Complex {
          return approx::solve_wave_N(dec, p, d).value - approx::solve_wave_N(ref, p, d).value;
        };
        return oracle::l2_norm_radial(g, R + ct, br, 0.0, 1e-8).norm;
      });
      for (std::size_t j = 0; j < ns.size(); ++j) {
        Row row{ns[j], errors[j], approx::bound_wave_rate_factor(R, ns[j], tab.h1_norm, 0.0)};
        row.bound_asserted = false;
        tab.rows.push_back(row);
      }
      tab.norm = "L2 over the ball of radius R + ct";
      tab.reference = "self-convergence against N = 512";
      tab.bound_formula = "C_T (R / N) ||f||_H1, C_T not asserted";
      break;
    }
  }

  if (std::none_of(errors.begin(), errors.end(), [](double e) { return e == 0.0; })) {
    tab.slope = validation::loglog_slope(std::vector<double>(ns.begin(), ns.end()), errors);
  }
  return tab;
}

nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["profile"] = t.profile;
  j["equation"] = to_string(t.equation);
  j["norm"] = t.norm;
  j["reference"] = t.reference;
  j["bound"] = t.bound_formula;
  j["h1_norm"] = t.h1_norm;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"N", r.n},
                    {"error", r.error},
                    {"bound", r.bound},
                    {"bound_asserted", r.bound_asserted},
                    {"within_bound", r.within_bound}});
  }
  j["table"] = rows;
  j["slope"] = t.slope ? nlohmann::ordered_json(*t.slope) : nlohmann::ordered_json(nullptr);
  j["bounds_hold"] = t.bounds_hold();
  return j;
}

}  // namespace ballsolve::converge
