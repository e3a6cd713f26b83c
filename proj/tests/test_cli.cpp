// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "ballsolve/converge.hpp"
#include "ballsolve/helmholtz.hpp"
#include "ballsolve/scenario.hpp"
#include "ballsolve/schrodinger.hpp"

using namespace ballsolve;

namespace {

const std::string kBall = R"({
  "schema_version": 1,
  "equation": "helmholtz",
  "params": {"k": 2.0},
  "sources": [{"type": "ball", "center": [0, 0, 0], "radius": 1.0}],
  "grid": {"type": "points", "points": [[0, 0, 0], [0.5, 0, 0], [2, 0, 0]]}
})";

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(BALLSOLVE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string parse_error(const std::string& text) {
  try {
    (void)parse_scenario(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("single ball matches direct library calls") {
  const Scenario s = parse_scenario(kBall);
  const auto rec = evaluate(s);
  REQUIRE(rec.size() == 3);
  const WaveNumber wn(2.0);
  const Ball b({0, 0, 0}, 1.0);
  for (const auto& r : rec) {
    const auto f = helmholtz::eval(r.x, b, wn);
    CHECK(r.value == f.value);
    CHECK(r.branch == to_string(f.branch));
    CHECK_FALSE(r.t.has_value());
  }
  CHECK(rec[0].branch == "center");
  CHECK(rec[2].branch == "exterior");
}

TEST_CASE("two balls with opposite weights give the annulus") {
  Scenario s = parse_scenario(kBall);
  s.equation = Equation::Schrodinger;
  s.times = {0.5};
  SourceSpec inner = s.sources[0];
  s.sources[0].radius = 2.0;
  inner.weight = -1.0;
  s.sources.push_back(inner);
  const auto rec = evaluate(s);
  const SchrodingerParams p(1.0, 1.0, 0.5);
  for (const auto& r : rec) {
    const Complex shell = schrodinger::eval(r.x, Annulus({0, 0, 0}, 1.0, 2.0), p);
    CHECK(std::abs(r.value - shell) <= 1e-15);
    CHECK(r.branch == "composite");
  }
}

TEST_CASE("round trip is the identity") {
  const std::string rich = R"({
    "schema_version": 1,
    "equation": "wave",
    "params": {"c": 1.5, "times": [0, 0.25, 1e-3], "data": "both"},
    "sources": [
      {"type": "annulus", "center": [0.1, 0.2, 0.30000000000000004], "inner_radius": 0.5,
       "outer_radius": 1.25, "weight": -2.5},
      {"type": "profile", "center": [1, 1, 1], "N": 12,
       "profile": {"table": [[0, 1], [0.5, 0.25], [1, 0]], "h1_norm": 10}}
    ],
    "grid": {"type": "lattice", "origin": [0, 0, 0], "spacing": [0.1, 0.2, 0.3], "counts": [2, 3, 1]},
    "output": {"format": "jsonl", "path": "out.jsonl"}
  })";
  for (const std::string& text : {kBall, rich}) {
    const Scenario a = parse_scenario(text);
    const Scenario b = parse_scenario(to_json(a).dump());
    CHECK(a == b);
    CHECK(to_json(a) == to_json(b));
  }
  Scenario c = parse_scenario(kBall);
  c.sources[0].weight = {0.5, -0.25};
  CHECK(parse_scenario(to_json(c).dump()) == c);
}

TEST_CASE("parse diagnostics") {
  CHECK(parse_error("{\n  \"equation\": ,\n}").find("line 2") != std::string::npos);
  std::string empty = kBall;
  empty.replace(empty.find("[[0, 0, 0], [0.5, 0, 0], [2, 0, 0]]"), 35, "[]");
  CHECK(parse_error(empty).find("grid is empty") != std::string::npos);
  std::string bad = kBall;
  bad.replace(bad.find("\"radius\": 1.0"), 13, "\"radius\": -1");
  CHECK(parse_error(bad).find("sources[0].radius") != std::string::npos);
  std::string extra = kBall;
  extra.replace(extra.find("\"k\": 2.0"), 8, "\"k\": 2.0, \"omega\": 1");
  CHECK(parse_error(extra).find("omega") != std::string::npos);
  std::string complex_wave = kBall;
  complex_wave.replace(complex_wave.find("\"helmholtz\""), 11, "\"wave\"");
  complex_wave.replace(complex_wave.find("\"k\": 2.0"), 8, "\"times\": [1]");
  complex_wave.replace(complex_wave.find("\"radius\": 1.0"), 13, "\"radius\": 1.0, \"weight\": [1, 2]");
  CHECK(parse_error(complex_wave).find("sources[0].weight") != std::string::npos);
}

TEST_CASE("csv layout") {
  const auto rec = evaluate(parse_scenario(kBall));
  std::ostringstream os;
  write_csv(os, rec);
  const std::string text = os.str();
  CHECK(text.rfind("x,y,z,t,re,im,branch,singular\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find("0,0,0,,") != std::string::npos);
  std::ostringstream js;
  write_jsonl(js, rec);
  CHECK(js.str().find("\"t\":null") != std::string::npos);
}

TEST_CASE("lattice expands x fastest") {
  GridSpec g;
  g.kind = GridSpec::Kind::Lattice;
  g.spacing = {1, 10, 100};
  g.counts = {2, 2, 1};
  const auto pts = g.expand();
  REQUIRE(pts.size() == 4);
  CHECK(pts[1] == Vec3{1, 0, 0});
  CHECK(pts[2] == Vec3{0, 10, 0});
}

TEST_CASE("converge table") {
  const auto one = converge::run(RadialProfile::constant(1.0), Equation::Helmholtz, {4, 8, 16});
  for (const auto& r : one.rows) CHECK(r.error <= 1e-12);
  const auto par = converge::run(RadialProfile::parabolic(1.0), Equation::Helmholtz, {4, 8, 16, 32});
  CHECK(par.bounds_hold());
  REQUIRE(par.slope.has_value());
  CHECK(*par.slope < -0.8);
  CHECK(par.rows[0].bound == doctest::Approx(1.0 / (std::sqrt(4 * kPi) * 4) * par.h1_norm));
  CHECK_THROWS_AS(converge::check_n_list({4, 8}), ParseError);
  CHECK_THROWS_AS(converge::check_n_list({8, 4, 16}), ParseError);
}

TEST_CASE("cli exit codes and output") {
  const std::string dir = BALLSOLVE_TEST_DATA "/scenarios/";
  const auto run = cli("run " + dir + "helmholtz_ball.json");
  CHECK(run.code == 0);
  CHECK(run.out.rfind("x,y,z,t,re,im,branch,singular\n", 0) == 0);
  CHECK(cli("run " + dir + "helmholtz_ball.json").out == run.out);
  CHECK(cli("run /nonexistent.json").code == 2);
  CHECK(cli("validate nosuch").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("converge parabolic helmholtz --N 4,8").code == 2);
  CHECK(cli("eval helmholtz --d 1 --r 0").code == 2);
  CHECK(cli("validate wave --tol 1e-16").code == 1);
  CHECK(cli("converge parabolic helmholtz --N 4,8,16,32").code == 0);
}

TEST_CASE("eval is bit-identical to the library") {
  const auto r = cli("eval schrodinger --d 2 --r 1 --mass 1 --hbar 1 --t 1");
  REQUIRE(r.code == 0);
  const Complex u = schrodinger::eval(2.0, 1.0, SchrodingerParams(1.0, 1.0, 1.0));
  char want[128];
  std::snprintf(want, sizeof want, "\"re\":%.17g,\"im\":%.17g", u.real(), u.imag());
  CHECK(r.out.find(want) != std::string::npos);
}
