// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballsolve/oracle.hpp"

namespace ballsolve::validation {

/// How a clause compares its measurement with its limit.
enum class Relation {
  AtMost,   // measured <= limit
  AtLeast,  // measured >= limit
  Within,   // limit_lo <= measured <= limit
  Info      // reported, not asserted
};

struct Clause {
  std::string name;
  double measured = 0.0;
  Relation relation = Relation::AtMost;
  double limit = 0.0;
  double limit_lo = 0.0;
  /// Error-type clause whose limit `--tol` replaces.
  bool tolerance = false;

  bool passed() const;
};

struct Check {
  std::string id;
  std::string title;
  std::vector<Clause> clauses;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();

  bool passed() const;
};

struct Settings {
  std::uint64_t seed = oracle::kDefaultSeed;
  /// Replaces the limit of every tolerance clause when set.
  std::optional<double> tol;

  int oracle_cases = 200;
  int mc_configs = 50;
  std::int64_t mc_samples = 1'000'000;
  int propagation_configs = 10'000;
};

// Closed forms against reduced 1D quadrature.
Check helmholtz_oracle(const Settings& s);
Check schrodinger_oracle(const Settings& s);
// Velocity-data solution against the cap formula and Monte Carlo spherical means.
Check wave_spherical_mean(const Settings& s);

Check helmholtz_continuity(const Settings& s);
Check schrodinger_continuity(const Settings& s);
Check wave_continuity(const Settings& s);

// Seven-point residuals and their convergence order.
Check helmholtz_residual(const Settings& s);
Check wave_residual(const Settings& s);

Check sommerfeld(const Settings& s);
Check conservation(const Settings& s);
Check helmholtz_superposition_bound(const Settings& s);
Check approximation_estimate(const Settings& s);
Check schrodinger_isometry(const Settings& s);
Check wave_rate(const Settings& s);
Check finite_propagation(const Settings& s);

/// Suite names: helmholtz, schrodinger, wave, approx, all.
bool is_suite(const std::string& name);
std::vector<Check> run_suite(const std::string& name, const Settings& s);

/// Deterministic report: no timings, doubles in shortest round-trip form.
nlohmann::ordered_json report(const std::string& suite, const Settings& s,
                              const std::vector<Check>& checks);

/// Least-squares slope of log(err) against log(N).
double loglog_slope(const std::vector<double>& n, const std::vector<double>& err);

}  // namespace ballsolve::validation
