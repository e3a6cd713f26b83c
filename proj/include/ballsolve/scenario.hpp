// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ballsolve/types.hpp"

namespace ballsolve {

inline constexpr int kSchemaVersion = 1;

enum class Equation { Helmholtz, Schrodinger, Wave };

std::string to_string(Equation e);
Equation equation_from_string(const std::string& s);

/// Which Cauchy datum the wave sources describe: u(0) = f, u_t(0) = g.
enum class DataKind { F, G, Both };

struct ProfileSpec {
  std::string builtin;  // empty for tabulated
  double R = 1.0;
  std::vector<std::pair<double, double>> table;
  std::optional<double> h1_norm;

  bool operator==(const ProfileSpec&) const = default;
};

struct SourceSpec {
  enum class Kind { Ball, Annulus, Profile };
  Kind kind = Kind::Ball;
  Vec3 center{};
  double radius = 1.0;        // ball
  double inner_radius = 0.0;  // annulus
  double outer_radius = 1.0;  // annulus
  ProfileSpec profile;        // profile
  int n = 16;                 // profile: number of annuli
  Complex weight{1.0, 0.0};

  bool operator==(const SourceSpec&) const = default;
};

struct GridSpec {
  enum class Kind { Lattice, Points };
  Kind kind = Kind::Points;
  Vec3 origin{};
  Vec3 spacing{1.0, 1.0, 1.0};
  std::array<int, 3> counts{1, 1, 1};
  std::vector<Vec3> points;

  /// Lattice points in x-fastest order, or the explicit list.
  std::vector<Vec3> expand() const;
  bool operator==(const GridSpec&) const = default;
};

struct OutputSpec {
  enum class Format { Csv, Jsonl };
  Format format = Format::Csv;
  std::string path = "-";  // "-" is stdout

  bool operator==(const OutputSpec&) const = default;
};

struct Scenario {
  int schema_version = kSchemaVersion;
  Equation equation = Equation::Helmholtz;
  // helmholtz
  double k = 1.0;
  double sigma = 0.0;
  // schrodinger
  double mass = 1.0;
  double hbar = 1.0;
  // wave
  double c = 1.0;
  DataKind data = DataKind::F;
  // schrodinger and wave
  std::vector<double> times;

  std::vector<SourceSpec> sources;
  GridSpec grid;
  OutputSpec output;

  bool operator==(const Scenario&) const = default;
};

/// Parse and validate a JSON scenario. Syntax errors report line and column;
/// schema errors name the offending field path, e.g. sources[1].radius.
/// Throws ParseError.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
nlohmann::ordered_json to_json(const Scenario& s);

struct FieldRecord {
  Vec3 x{};
  std::optional<double> t;
  Complex value{0.0, 0.0};
  std::string branch;
  bool singular = false;

  bool operator==(const FieldRecord&) const = default;
};

/// One record per grid point and time, ordered by grid point then time.
/// Points are evaluated in parallel lanes; the order does not depend on
/// scheduling. Domain errors name the offending source index.
std::vector<FieldRecord> evaluate(const Scenario& s);

/// CSV columns x,y,z,t,re,im,branch,singular; 17 significant digits.
void write_csv(std::ostream& os, const std::vector<FieldRecord>& records);
/// One JSON object per line with the same fields.
void write_jsonl(std::ostream& os, const std::vector<FieldRecord>& records);

}  // namespace ballsolve
