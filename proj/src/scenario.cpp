// SPDX-License-Identifier: Apache-2.0
#include "ballsolve/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "ballsolve/approx.hpp"
#include "ballsolve/geometry.hpp"
#include "ballsolve/helmholtz.hpp"
#include "ballsolve/schrodinger.hpp"
#include "ballsolve/wave.hpp"

namespace ballsolve {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& member(const Json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path, std::string("missing field '") + key + "'");
  return obj.at(key);
}

void only_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; })) {
      fail(path, "unknown field '" + k + "'");
    }
  }
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "must be finite");
  return v;
}

double positive(const Json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v > 0.0)) fail(path, "must be positive");
  return v;
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Vec3 vec3(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected [x, y, z]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]"), number(j[2], path + "[2]")};
}

Complex weight(const Json& j, const std::string& path) {
  if (j.is_number()) return {number(j, path), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
  fail(path, "expected a number or [re, im]");
}

std::string describe_position(const std::string& src, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < src.size(); ++i) {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

RadialProfile make_profile(const ProfileSpec& ps) {
  RadialProfile base = ps.builtin.empty() ? RadialProfile::tabulated(ps.table)
                                          : RadialProfile::builtin(ps.builtin, ps.R);
  if (!ps.h1_norm) return base;
  return RadialProfile(
      base.name(), [base](double rho) { return base(rho); }, base.support_radius(), base.kinks(),
      ps.h1_norm);
}

ProfileSpec parse_profile(const Json& j, const std::string& path) {
  only_keys(j, path, {"name", "R", "table", "h1_norm"});
  ProfileSpec p;
  if (j.contains("table")) {
    if (j.contains("name") || j.contains("R")) fail(path, "give either name and R or table");
    const Json& t = j.at("table");
    if (!t.is_array()) fail(path + ".table", "expected [[rho, value], ...]");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string tp = path + ".table[" + std::to_string(i) + "]";
      if (!t[i].is_array() || t[i].size() != 2) fail(tp, "expected [rho, value]");
      p.table.emplace_back(number(t[i][0], tp + "[0]"), number(t[i][1], tp + "[1]"));
    }
    p.R = p.table.empty() ? 0.0 : p.table.back().first;
  } else {
    p.builtin = text(member(j, path, "name"), path + ".name");
    p.R = positive(member(j, path, "R"), path + ".R");
  }
  if (j.contains("h1_norm")) p.h1_norm = number(j.at("h1_norm"), path + ".h1_norm");
  try {
    (void)make_profile(p);
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
  return p;
}

SourceSpec parse_source(const Json& j, const std::string& path, Equation eq) {
  const std::string type = text(member(j, path, "type"), path + ".type");
  SourceSpec s;
  if (type == "ball") {
    only_keys(j, path, {"type", "center", "radius", "weight"});
    s.kind = SourceSpec::Kind::Ball;
    s.radius = positive(member(j, path, "radius"), path + ".radius");
  } else if (type == "annulus") {
    only_keys(j, path, {"type", "center", "inner_radius", "outer_radius", "weight"});
    s.kind = SourceSpec::Kind::Annulus;
    s.inner_radius = number(member(j, path, "inner_radius"), path + ".inner_radius");
    s.outer_radius = positive(member(j, path, "outer_radius"), path + ".outer_radius");
    if (s.inner_radius < 0.0 || s.inner_radius >= s.outer_radius) {
      fail(path, "need 0 <= inner_radius < outer_radius");
    }
  } else if (type == "profile") {
    only_keys(j, path, {"type", "center", "profile", "N", "weight"});
    s.kind = SourceSpec::Kind::Profile;
    s.profile = parse_profile(member(j, path, "profile"), path + ".profile");
    s.n = integer(member(j, path, "N"), path + ".N");
    if (s.n < 1) fail(path + ".N", "must be at least 1");
  } else {
    fail(path + ".type", "expected ball, annulus or profile");
  }
  s.center = vec3(member(j, path, "center"), path + ".center");
  if (j.contains("weight")) s.weight = weight(j.at("weight"), path + ".weight");
  if (eq == Equation::Wave && s.weight.imag() != 0.0) fail(path + ".weight", "wave weights must be real");
  return s;
}

GridSpec parse_grid(const Json& j, const std::string& path) {
  const std::string type = text(member(j, path, "type"), path + ".type");
  GridSpec g;
  if (type == "lattice") {
    only_keys(j, path, {"type", "origin", "spacing", "counts"});
    g.kind = GridSpec::Kind::Lattice;
    g.origin = vec3(member(j, path, "origin"), path + ".origin");
    g.spacing = vec3(member(j, path, "spacing"), path + ".spacing");
    const Json& c = member(j, path, "counts");
    if (!c.is_array() || c.size() != 3) fail(path + ".counts", "expected [nx, ny, nz]");
    for (std::size_t i = 0; i < 3; ++i) {
      g.counts[i] = integer(c[i], path + ".counts[" + std::to_string(i) + "]");
      if (g.counts[i] < 1) fail(path + ".counts", "grid is empty");
    }
  } else if (type == "points") {
    only_keys(j, path, {"type", "points"});
    g.kind = GridSpec::Kind::Points;
    const Json& pts = member(j, path, "points");
    if (!pts.is_array()) fail(path + ".points", "expected a list of [x, y, z]");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      g.points.push_back(vec3(pts[i], path + ".points[" + std::to_string(i) + "]"));
    }
    if (g.points.empty()) fail(path + ".points", "grid is empty");
  } else {
    fail(path + ".type", "expected lattice or points");
  }
  return g;
}

std::vector<double> parse_times(const Json& params, bool strictly_positive) {
  const Json& t = member(params, "params", "times");
  if (!t.is_array() || t.empty()) fail("params.times", "expected a non-empty list");
  std::vector<double> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string tp = "params.times[" + std::to_string(i) + "]";
    const double v = number(t[i], tp);
    if (strictly_positive ? !(v > 0.0) : !(v >= 0.0)) {
      fail(tp, strictly_positive ? "must be positive" : "must be non-negative");
    }
    out.push_back(v);
  }
  return out;
}

const char* data_name(DataKind d) {
  switch (d) {
    case DataKind::F: return "f";
    case DataKind::G: return "g";
    case DataKind::Both: return "both";
  }
  return "f";
}

Json weight_json(Complex w) {
  if (w.imag() == 0.0) return w.real();
  return Json::array({w.real(), w.imag()});
}

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Ball outer_ball(const SourceSpec& s) {
  switch (s.kind) {
    case SourceSpec::Kind::Ball: return Ball(s.center, s.radius);
    case SourceSpec::Kind::Annulus: return Ball(s.center, s.outer_radius);
    case SourceSpec::Kind::Profile: return Ball(s.center, s.profile.R);
  }
  return Ball(s.center, s.radius);
}

Annulus shell_of(const SourceSpec& s) { return Annulus(s.center, s.inner_radius, s.outer_radius); }

CauchyWeights cauchy(DataKind d) {
  switch (d) {
    case DataKind::F: return {1.0, 0.0};
    case DataKind::G: return {0.0, 1.0};
    case DataKind::Both: return {1.0, 1.0};
  }
  return {1.0, 0.0};
}

}  // namespace

std::string to_string(Equation e) {
  switch (e) {
    case Equation::Helmholtz: return "helmholtz";
    case Equation::Schrodinger: return "schrodinger";
    case Equation::Wave: return "wave";
  }
  return "helmholtz";
}

Equation equation_from_string(const std::string& s) {
  if (s == "helmholtz") return Equation::Helmholtz;
  if (s == "schrodinger") return Equation::Schrodinger;
  if (s == "wave") return Equation::Wave;
  throw ParseError("unknown equation '" + s + "' (expected helmholtz, schrodinger or wave)");
}

std::vector<Vec3> GridSpec::expand() const {
  if (kind == Kind::Points) return points;
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(counts[0]) * counts[1] * counts[2]);
  for (int k = 0; k < counts[2]; ++k) {
    for (int j = 0; j < counts[1]; ++j) {
      for (int i = 0; i < counts[0]; ++i) {
        out.push_back({origin[0] + i * spacing[0], origin[1] + j * spacing[1],
                       origin[2] + k * spacing[2]});
      }
    }
  }
  return out;
}

Scenario parse_scenario(const std::string& src) {
  Json j;
  try {
    j = Json::parse(src);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("scenario syntax error at " + describe_position(src, e.byte));
  }
  only_keys(j, "scenario", {"schema_version", "equation", "params", "sources", "grid", "output"});
  Scenario s;
  s.schema_version = integer(member(j, "scenario", "schema_version"), "schema_version");
  if (s.schema_version != kSchemaVersion) {
    fail("schema_version", "unsupported version " + std::to_string(s.schema_version));
  }
  try {
    s.equation = equation_from_string(text(member(j, "scenario", "equation"), "equation"));
  } catch (const ParseError& e) {
    fail("equation", e.what());
  }

  const Json& params = member(j, "scenario", "params");
  switch (s.equation) {
    case Equation::Helmholtz:
      only_keys(params, "params", {"k", "sigma"});
      s.k = positive(member(params, "params", "k"), "params.k");
      if (params.contains("sigma")) s.sigma = number(params.at("sigma"), "params.sigma");
      if (s.sigma < 0.0) fail("params.sigma", "must be non-negative");
      break;
    case Equation::Schrodinger:
      only_keys(params, "params", {"mass", "hbar", "times"});
      if (params.contains("mass")) s.mass = positive(params.at("mass"), "params.mass");
      if (params.contains("hbar")) s.hbar = positive(params.at("hbar"), "params.hbar");
      s.times = parse_times(params, true);
      break;
    case Equation::Wave: {
      only_keys(params, "params", {"c", "times", "data"});
      if (params.contains("c")) s.c = positive(params.at("c"), "params.c");
      s.times = parse_times(params, false);
      if (params.contains("data")) {
        const std::string d = text(params.at("data"), "params.data");
        if (d == "f") {
          s.data = DataKind::F;
        } else if (d == "g") {
          s.data = DataKind::G;
        } else if (d == "both") {
          s.data = DataKind::Both;
        } else {
          fail("params.data", "expected f, g or both");
        }
      }
      break;
    }
  }

  const Json& sources = member(j, "scenario", "sources");
  if (!sources.is_array() || sources.empty()) fail("sources", "expected a non-empty list");
  for (std::size_t i = 0; i < sources.size(); ++i) {
    s.sources.push_back(parse_source(sources[i], "sources[" + std::to_string(i) + "]", s.equation));
  }
  s.grid = parse_grid(member(j, "scenario", "grid"), "grid");

  if (j.contains("output")) {
    const Json& o = j.at("output");
    only_keys(o, "output", {"format", "path"});
    if (o.contains("format")) {
      const std::string f = text(o.at("format"), "output.format");
      if (f == "csv") {
        s.output.format = OutputSpec::Format::Csv;
      } else if (f == "jsonl") {
        s.output.format = OutputSpec::Format::Jsonl;
      } else {
        fail("output.format", "expected csv or jsonl");
      }
    }
    if (o.contains("path")) s.output.path = text(o.at("path"), "output.path");
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

nlohmann::ordered_json to_json(const Scenario& s) {
  Json j;
  j["schema_version"] = s.schema_version;
  j["equation"] = to_string(s.equation);
  Json params = Json::object();
  switch (s.equation) {
    case Equation::Helmholtz:
      params["k"] = s.k;
      params["sigma"] = s.sigma;
      break;
    case Equation::Schrodinger:
      params["mass"] = s.mass;
      params["hbar"] = s.hbar;
      params["times"] = s.times;
      break;
    case Equation::Wave:
      params["c"] = s.c;
      params["times"] = s.times;
      params["data"] = data_name(s.data);
      break;
  }
  j["params"] = params;
  Json sources = Json::array();
  for (const auto& src : s.sources) {
    Json o;
    switch (src.kind) {
      case SourceSpec::Kind::Ball:
        o["type"] = "ball";
        o["center"] = vec_json(src.center);
        o["radius"] = src.radius;
        break;
      case SourceSpec::Kind::Annulus:
        o["type"] = "annulus";
        o["center"] = vec_json(src.center);
        o["inner_radius"] = src.inner_radius;
        o["outer_radius"] = src.outer_radius;
        break;
      case SourceSpec::Kind::Profile: {
        o["type"] = "profile";
        o["center"] = vec_json(src.center);
        Json p;
        if (src.profile.builtin.empty()) {
          Json t = Json::array();
          for (const auto& [rho, v] : src.profile.table) t.push_back(Json::array({rho, v}));
          p["table"] = t;
        } else {
          p["name"] = src.profile.builtin;
          p["R"] = src.profile.R;
        }
        if (src.profile.h1_norm) p["h1_norm"] = *src.profile.h1_norm;
        o["profile"] = p;
        o["N"] = src.n;
        break;
      }
    }
    o["weight"] = weight_json(src.weight);
    sources.push_back(o);
  }
  j["sources"] = sources;
  Json g;
  if (s.grid.kind == GridSpec::Kind::Lattice) {
    g["type"] = "lattice";
    g["origin"] = vec_json(s.grid.origin);
    g["spacing"] = vec_json(s.grid.spacing);
    g["counts"] = s.grid.counts;
  } else {
    g["type"] = "points";
    Json pts = Json::array();
    for (const auto& p : s.grid.points) pts.push_back(vec_json(p));
    g["points"] = pts;
  }
  j["grid"] = g;
  j["output"] = {{"format", s.output.format == OutputSpec::Format::Csv ? "csv" : "jsonl"},
                 {"path", s.output.path}};
  return j;
}

std::vector<FieldRecord> evaluate(const Scenario& s) {
  const std::vector<Vec3> points = s.grid.expand();
  if (points.empty()) throw ParseError("grid: grid is empty");
  std::vector<std::optional<double>> times;
  if (s.equation == Equation::Helmholtz) {
    times.push_back(std::nullopt);
  } else {
    for (double t : s.times) times.emplace_back(t);
  }

  std::vector<AnnulusDecomposition> decs(s.sources.size());
  for (std::size_t i = 0; i < s.sources.size(); ++i) {
    if (s.sources[i].kind != SourceSpec::Kind::Profile) continue;
    try {
      decs[i] = approx::decompose(make_profile(s.sources[i].profile), s.sources[i].n);
    } catch (const DomainError& e) {
      throw DomainError("source " + std::to_string(i) + ": " + e.what());
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("source " + std::to_string(i) + ": " + e.what());
    }
  }

  const std::optional<WaveNumber> wn =
      s.equation == Equation::Helmholtz ? std::optional<WaveNumber>(WaveNumber(s.k, s.sigma))
                                        : std::nullopt;

  auto eval_point = [&](const Vec3& x, const std::optional<double>& t) {
    FieldRecord rec;
    rec.x = x;
    rec.t = t;
    rec.branch = s.sources.size() == 1
                     ? std::string(to_string(geometry::classify(x, outer_ball(s.sources[0]))))
                     : "composite";
    WaveSample acc;
    for (std::size_t i = 0; i < s.sources.size(); ++i) {
      const SourceSpec& src = s.sources[i];
      try {
        const double d = distance(x, src.center);
        switch (s.equation) {
          case Equation::Helmholtz: {
            Complex u;
            if (src.kind == SourceSpec::Kind::Ball) {
              u = helmholtz::eval(x, Ball(src.center, src.radius), *wn).value;
            } else if (src.kind == SourceSpec::Kind::Annulus) {
              u = helmholtz::eval(x, shell_of(src), *wn);
            } else {
              u = approx::solve_helmholtz_N(decs[i], *wn, d);
            }
            rec.value += src.weight * u;
            break;
          }
          case Equation::Schrodinger: {
            const SchrodingerParams p(s.mass, s.hbar, *t);
            Complex u;
            if (src.kind == SourceSpec::Kind::Ball) {
              u = schrodinger::eval(x, Ball(src.center, src.radius), p);
            } else if (src.kind == SourceSpec::Kind::Annulus) {
              u = schrodinger::eval(x, shell_of(src), p);
            } else {
              u = approx::solve_schrodinger_N(decs[i], p, d);
            }
            rec.value += src.weight * u;
            break;
          }
          case Equation::Wave: {
            const WaveParams p(s.c, *t);
            const CauchyWeights w = cauchy(s.data);
            WaveSample u;
            if (src.kind == SourceSpec::Kind::Ball) {
              u = wave::eval_cauchy(d, src.radius, p, w);
            } else if (src.kind == SourceSpec::Kind::Annulus) {
              u = wave::eval(x, shell_of(src), p, w);
            } else {
              u = approx::solve_wave_N(decs[i], p, d, w);
            }
            acc = wave::combine(acc, 1.0, u, src.weight.real());
            break;
          }
        }
      } catch (const DomainError& e) {
        throw DomainError("source " + std::to_string(i) + ": " + e.what());
      }
    }
    if (s.equation == Equation::Wave) {
      rec.value = {acc.value, 0.0};
      rec.singular = acc.singular;
    }
    return rec;
  };

  const std::size_t nt = times.size();
  const std::size_t total = points.size() * nt;
  std::vector<FieldRecord> out(total);
  const std::size_t lanes =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), total));
  std::vector<std::exception_ptr> errors(lanes);
  std::vector<std::size_t> error_at(lanes, total);
  {
    std::vector<std::jthread> pool;
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      pool.emplace_back([&, lane] {
        const std::size_t lo = total * lane / lanes;
        const std::size_t hi = total * (lane + 1) / lanes;
        for (std::size_t idx = lo; idx < hi; ++idx) {
          try {
            out[idx] = eval_point(points[idx / nt], times[idx % nt]);
          } catch (...) {
            errors[lane] = std::current_exception();
            error_at[lane] = idx;
            return;
          }
        }
      });
    }
  }
  // Report the failure that comes first in grid order.
  const auto first = std::min_element(error_at.begin(), error_at.end());
  if (*first < total) std::rethrow_exception(errors[static_cast<std::size_t>(first - error_at.begin())]);
  return out;
}

void write_csv(std::ostream& os, const std::vector<FieldRecord>& records) {
  os << "x,y,z,t,re,im,branch,singular\n";
  for (const auto& r : records) {
    os << fmt(r.x[0]) << ',' << fmt(r.x[1]) << ',' << fmt(r.x[2]) << ',';
    if (r.t) os << fmt(*r.t);
    os << ',' << fmt(r.value.real()) << ',' << fmt(r.value.imag()) << ',' << r.branch << ','
       << (r.singular ? "true" : "false") << '\n';
  }
}

void write_jsonl(std::ostream& os, const std::vector<FieldRecord>& records) {
  for (const auto& r : records) {
    os << "{\"x\":" << fmt(r.x[0]) << ",\"y\":" << fmt(r.x[1]) << ",\"z\":" << fmt(r.x[2])
       << ",\"t\":" << (r.t ? fmt(*r.t) : std::string("null")) << ",\"re\":" << fmt(r.value.real())
       << ",\"im\":" << fmt(r.value.imag()) << ",\"branch\":\"" << r.branch
       << "\",\"singular\":" << (r.singular ? "true" : "false") << "}\n";
  }
}

}  // namespace ballsolve
