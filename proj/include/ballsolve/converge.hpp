// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballsolve/approx.hpp"
#include "ballsolve/scenario.hpp"

namespace ballsolve::converge {

struct Options {
  double k = 2.0;      // helmholtz
  double sigma = 0.0;  // helmholtz
  double mt = 1.0;     // schrodinger
  double t = 0.3;      // wave, c = 1
  int points = 301;    // sup-norm sample count on [0, 3R]
};

struct Row {
  int n = 0;
  double error = 0.0;
  double bound = 0.0;
  /// False for wave rows: their bound omits the constant C_T.
  bool bound_asserted = true;
  bool within_bound = true;
};

struct Table {
  std::string profile;
  Equation equation = Equation::Helmholtz;
  std::string norm;
  std::string reference;
  std::string bound_formula;
  double h1_norm = 0.0;
  std::vector<Row> rows;
  /// Absent when some error is exactly zero.
  std::optional<double> slope;

  bool bounds_hold() const;
};

/// Throws ParseError unless the list is strictly ascending with at least
/// three positive entries.
void check_n_list(const std::vector<int>& ns);

/// Sup error over d in [0, 3R] against radial quadrature (helmholtz,
/// schrodinger) or L2 error against N = 512 (wave).
Table run(const RadialProfile& f, Equation eq, const std::vector<int>& ns,
          const Options& opt = {});

nlohmann::ordered_json to_json(const Table& t);

}  // namespace ballsolve::converge
