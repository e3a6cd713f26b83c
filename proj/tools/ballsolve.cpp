// SPDX-License-Identifier: Apache-2.0
// Command-line front end: run, validate, converge, eval.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ballsolve/approx.hpp"
#include "ballsolve/converge.hpp"
#include "ballsolve/scenario.hpp"
#include "ballsolve/validation.hpp"

namespace bs = ballsolve;

namespace {

enum Exit { kOk = 0, kAssertion = 1, kUsage = 2, kNonConvergence = 3 };

int cmd_run(const std::string& file, const std::string& format, const std::string& output) {
  bs::Scenario s = bs::load_scenario(file);
  if (format == "csv") s.output.format = bs::OutputSpec::Format::Csv;
  if (format == "jsonl") s.output.format = bs::OutputSpec::Format::Jsonl;
  if (!output.empty()) s.output.path = output;
  const auto records = bs::evaluate(s);
  auto emit = [&](std::ostream& os) {
    if (s.output.format == bs::OutputSpec::Format::Csv) {
      bs::write_csv(os, records);
    } else {
      bs::write_jsonl(os, records);
    }
  };
  if (s.output.path == "-") {
    emit(std::cout);
  } else {
    std::ofstream out(s.output.path, std::ios::binary);
    if (!out) throw bs::ParseError("cannot open output file '" + s.output.path + "'");
    emit(out);
  }
  return kOk;
}

int cmd_validate(const std::string& suite, std::uint64_t seed, std::optional<double> tol,
                 const std::string& report_path) {
  if (!bs::validation::is_suite(suite)) {
    throw bs::ParseError("unknown suite '" + suite +
                         "' (expected helmholtz, schrodinger, wave, approx or all)");
  }
  bs::validation::Settings st;
  st.seed = seed;
  st.tol = tol;
  const auto checks = bs::validation::run_suite(suite, st);
  const std::string text = bs::validation::report(suite, st, checks).dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw bs::ParseError("cannot open report file '" + report_path + "'");
    out << text;
  }
  bool ok = true;
  for (const auto& c : checks) {
    std::fprintf(stderr, "%s %s\n", c.passed() ? "PASS" : "FAIL", c.id.c_str());
    ok = ok && c.passed();
  }
  return ok ? kOk : kAssertion;
}

int cmd_converge(const std::string& profile, const std::string& equation, double R,
                 const std::vector<int>& ns, const bs::converge::Options& opt) {
  const bs::Equation eq = bs::equation_from_string(equation);
  bs::converge::check_n_list(ns);
  const auto f = bs::RadialProfile::builtin(profile, R);
  const auto table = bs::converge::run(f, eq, ns, opt);
  std::cout << bs::converge::to_json(table).dump(2) << "\n";
  return table.bounds_hold() ? kOk : kAssertion;
}

struct EvalArgs {
  std::string equation;
  std::optional<double> d;
  std::vector<double> point;
  std::vector<double> center{0.0, 0.0, 0.0};
  double r = 1.0;
  double inner = 0.0;
  double k = 1.0;
  double sigma = 0.0;
  std::optional<double> mt;
  double mass = 1.0;
  double hbar = 1.0;
  double t = 1.0;
  double c = 1.0;
  std::string data = "f";
  std::string format = "jsonl";
};

int cmd_eval(const EvalArgs& a) {
  if (a.d.has_value() == !a.point.empty()) throw bs::ParseError("give exactly one of --d and --point");
  bs::Scenario s;
  s.equation = bs::equation_from_string(a.equation);
  s.k = a.k;
  s.sigma = a.sigma;
  s.c = a.c;
  s.mass = a.mass;
  s.hbar = a.hbar;
  if (s.equation == bs::Equation::Schrodinger && a.mt) {
    const auto p = bs::SchrodingerParams::from_mt(*a.mt);
    s.mass = p.mass();
    s.hbar = p.hbar();
    s.times = {p.t()};
  } else {
    s.times = {a.t};
  }
  if (a.data == "f") {
    s.data = bs::DataKind::F;
  } else if (a.data == "g") {
    s.data = bs::DataKind::G;
  } else if (a.data == "both") {
    s.data = bs::DataKind::Both;
  } else {
    throw bs::ParseError("--data: expected f, g or both");
  }
  bs::SourceSpec src;
  src.center = {a.center[0], a.center[1], a.center[2]};
  if (a.inner > 0.0) {
    src.kind = bs::SourceSpec::Kind::Annulus;
    src.inner_radius = a.inner;
    src.outer_radius = a.r;
  } else {
    src.radius = a.r;
  }
  s.sources = {src};
  s.grid.kind = bs::GridSpec::Kind::Points;
  if (a.d) {
    s.grid.points = {{src.center[0] + *a.d, src.center[1], src.center[2]}};
  } else {
    s.grid.points = {{a.point[0], a.point[1], a.point[2]}};
  }
  // Route through the scenario parser so eval sees the same domain checks as run.
  s = bs::parse_scenario(bs::to_json(s).dump());
  const auto records = bs::evaluate(s);
  if (a.format == "csv") {
    bs::write_csv(std::cout, records);
  } else {
    bs::write_jsonl(std::cout, records);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form solutions for ball-characteristic data"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Evaluate a scenario file on its grid");
  std::string scenario_file, run_format, run_output;
  run->add_option("scenario", scenario_file, "Scenario JSON file")->required();
  run->add_option("--format", run_format, "Override output format")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  run->add_option("-o,--output", run_output, "Override output path ('-' for stdout)");

  auto* val = app.add_subcommand("validate", "Run a validation suite and print a JSON report");
  std::string suite;
  std::uint64_t seed = bs::oracle::kDefaultSeed;
  std::optional<double> tol;
  std::string report_path;
  val->add_option("suite", suite, "helmholtz, schrodinger, wave, approx or all")->required();
  val->add_option("--seed", seed, "Random seed");
  val->add_option("--tol", tol, "Replace every error tolerance")->check(CLI::PositiveNumber);
  val->add_option("--report", report_path, "Write the report here instead of stdout");

  auto* conv = app.add_subcommand("converge", "Superposition error against N");
  std::string profile, conv_eq;
  std::vector<int> ns;
  double conv_R = 1.0;
  bs::converge::Options opt;
  conv->add_option("profile", profile, "constant, parabolic or cosine-bump")->required();
  conv->add_option("equation", conv_eq, "helmholtz, schrodinger or wave")->required();
  conv->add_option("--N", ns, "Ascending annulus counts, e.g. 4,8,16,32")
      ->delimiter(',')
      ->required();
  conv->add_option("--R", conv_R, "Support radius")->check(CLI::PositiveNumber);
  conv->add_option("--k", opt.k, "Wavenumber")->check(CLI::PositiveNumber);
  conv->add_option("--sigma", opt.sigma, "Attenuation")->check(CLI::NonNegativeNumber);
  conv->add_option("--mt", opt.mt, "M_t = m / (2 hbar t)")->check(CLI::PositiveNumber);
  conv->add_option("--t", opt.t, "Wave time, c = 1")->check(CLI::NonNegativeNumber);
  conv->add_option("--points", opt.points, "Sample count on [0, 3R]");

  auto* ev = app.add_subcommand("eval", "Evaluate one point");
  EvalArgs ea;
  ev->add_option("equation", ea.equation, "helmholtz, schrodinger or wave")->required();
  ev->add_option("--d", ea.d, "Distance from the center");
  ev->add_option("--point", ea.point, "x,y,z")->delimiter(',')->expected(3);
  ev->add_option("--center", ea.center, "x,y,z")->delimiter(',')->expected(3);
  ev->add_option("--r", ea.r, "Ball (outer) radius");
  ev->add_option("--inner", ea.inner, "Inner radius; makes the source an annulus");
  ev->add_option("--k", ea.k, "Wavenumber");
  ev->add_option("--sigma", ea.sigma, "Attenuation");
  ev->add_option("--mt", ea.mt, "M_t = m / (2 hbar t); overrides --mass, --hbar, --t");
  ev->add_option("--mass", ea.mass, "Mass");
  ev->add_option("--hbar", ea.hbar, "Reduced Planck constant");
  ev->add_option("--t", ea.t, "Time");
  ev->add_option("--c", ea.c, "Wave speed");
  ev->add_option("--data", ea.data, "Wave data: f, g or both");
  ev->add_option("--format", ea.format, "jsonl or csv")->check(CLI::IsMember({"csv", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(scenario_file, run_format, run_output);
    if (*val) return cmd_validate(suite, seed, tol, report_path);
    if (*conv) return cmd_converge(profile, conv_eq, conv_R, ns, opt);
    if (*ev) return cmd_eval(ea);
  } catch (const bs::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const bs::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const bs::ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNonConvergence;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kAssertion;
  }
  return kUsage;
}
