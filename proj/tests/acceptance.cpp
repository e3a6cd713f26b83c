// SPDX-License-Identifier: Apache-2.0
// Acceptance gate: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ballsolve/validation.hpp"

namespace v = ballsolve::validation;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
};

std::string describe(const v::Clause& c) {
  char buf[256];
  switch (c.relation) {
    case v::Relation::AtMost:
      std::snprintf(buf, sizeof buf, "%s = %.3g <= %.3g", c.name.c_str(), c.measured, c.limit);
      break;
    case v::Relation::AtLeast:
      std::snprintf(buf, sizeof buf, "%s = %.3g >= %.3g", c.name.c_str(), c.measured, c.limit);
      break;
    case v::Relation::Within:
      std::snprintf(buf, sizeof buf, "%s = %.3g in [%.3g, %.3g]", c.name.c_str(), c.measured,
                    c.limit_lo, c.limit);
      break;
    case v::Relation::Info:
      std::snprintf(buf, sizeof buf, "%s = %.3g", c.name.c_str(), c.measured);
      break;
  }
  return std::string(c.passed() ? "" : "[violated] ") + buf;
}

Outcome from_checks(const std::vector<v::Check>& checks) {
  Outcome o;
  for (const auto& ch : checks) {
    for (const auto& cl : ch.clauses) {
      o.passed = o.passed && cl.passed();
      o.notes.push_back(ch.id + "." + describe(cl));
    }
  }
  return o;
}

std::string capture(const std::string& cmd, int& status) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  std::string cli_path;
  app.add_option("--only", only, "Criterion numbers to run (default: all)")->delimiter(',');
  app.add_option("--cli", cli_path, "Path to the ballsolve executable")->required();
  CLI11_PARSE(app, argc, argv);

  const v::Settings s;
  using Runner = std::function<Outcome()>;
  const std::vector<std::pair<std::string, Runner>> criteria{
      {"Helmholtz closed form vs oracle, 200 cases, <= 30 s",
       [&] {
         const auto t0 = std::chrono::steady_clock::now();
         Outcome o = from_checks({v::helmholtz_oracle(s)});
         const double secs =
             std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
         char buf[64];
         std::snprintf(buf, sizeof buf, "runtime = %.3f s <= 30 s", secs);
         o.notes.emplace_back(buf);
         o.passed = o.passed && secs <= 30.0;
         return o;
       }},
      {"Schrodinger closed form vs oracle, 200 cases",
       [&] { return from_checks({v::schrodinger_oracle(s)}); }},
      {"Wave spherical-mean identity, 50 Monte Carlo configurations",
       [&] { return from_checks({v::wave_spherical_mean(s)}); }},
      {"Branch continuity",
       [&] {
         return from_checks(
             {v::helmholtz_continuity(s), v::schrodinger_continuity(s), v::wave_continuity(s)});
       }},
      {"PDE residual convergence order",
       [&] { return from_checks({v::helmholtz_residual(s), v::wave_residual(s)}); }},
      {"Sommerfeld decay", [&] { return from_checks({v::sommerfeld(s)}); }},
      {"Probability conservation", [&] { return from_checks({v::conservation(s)}); }},
      {"Helmholtz superposition bound and rate",
       [&] { return from_checks({v::helmholtz_superposition_bound(s)}); }},
      {"Piecewise-constant approximation estimate",
       [&] { return from_checks({v::approximation_estimate(s)}); }},
      {"Schrodinger isometry", [&] { return from_checks({v::schrodinger_isometry(s)}); }},
      {"Wave superposition rate", [&] { return from_checks({v::wave_rate(s)}); }},
      {"Finite propagation speed", [&] { return from_checks({v::finite_propagation(s)}); }},
      {"Deterministic validation report",
       [&] {
         Outcome o;
         const std::string cmd = cli_path + " validate all --seed 42 2>/dev/null";
         int st1 = 0, st2 = 0;
         const std::string a = capture(cmd, st1);
         const std::string b = capture(cmd, st2);
         o.passed = !a.empty() && a == b;
         o.notes.push_back("report bytes = " + std::to_string(a.size()) + ", " +
                           std::to_string(b.size()) + (a == b ? ", identical" : ", different"));
         return o;
       }},
  };

  if (only.empty()) {
    for (std::size_t i = 1; i <= criteria.size(); ++i) only.push_back(static_cast<int>(i));
  }
  bool all = true;
  for (int id : only) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "no criterion %d\n", id);
      return 2;
    }
    const auto& [title, run] = criteria[static_cast<std::size_t>(id - 1)];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %02d: %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str());
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
