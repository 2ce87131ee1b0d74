/* Copyright 2026 The sigwind Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// End-to-end runs of the sigwind executable.

#include <sys/wait.h>

#include <array>
#include <cstdio>

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "fixtures.hpp"

using namespace sigwind;
using namespace sigwind::testing;
using Catch::Approx;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "", bool merge_stderr = false) {
  const std::string cmd = env + " '" SIGWIND_CLI_PATH "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return "'" + std::string(SIGWIND_SAMPLES_DIR) + "/" + name + "'"; }

}  // namespace

TEST_CASE("signature subcommand", "[cli]") {
  auto r = run("signature " + sample("diagonal.csv") + " --words '1,2;2,1'");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["1,2"].get<double>() == 0.5);
  CHECK(j["2,1"].get<double>() == 0.5);

  r = run("signature " + sample("point.csv") + " --level 3");
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.size() == 1);
  CHECK(j[""].get<double>() == 1.0);

  r = run("signature " + sample("diagonal.csv") + " --level 1");
  j = json::parse(r.out);
  CHECK(j["1"].get<double>() == 1.0);
  CHECK(j["2"].get<double>() == 1.0);

  CHECK(run("signature " + sample("diagonal.csv")).code == 1);
}

TEST_CASE("moment subcommand", "[cli]") {
  auto r = run("moment " + sample("diagonal.csv") + " --alpha 1,0 --beta 0,1");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == Approx(0.5).epsilon(1e-15));
  CHECK(json::parse(run("moment " + sample("diagonal.csv") + " --alpha 1,0 --beta 0,0").out)["value"].get<double>() == 0.0);
  CHECK(json::parse(run("moment " + sample("diagonal.csv") + " --alpha 0,0 --beta 1,0").out)["value"].get<double>() == 1.0);

  r = run("moment " + sample("diagonal.csv") + " --alpha 2,0 --beta 0,1", "SIGWIND_SCALAR=rational");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<std::string>() == "1/3");

  CHECK(run("moment /nonexistent/file.csv --alpha 1,0 --beta 0,1").code == 1);
  CHECK(run("moment " + sample("diagonal.csv") + " --alpha 1,0,0 --beta 0,1").code == 1);
}

TEST_CASE("winding subcommand", "[cli]") {
  auto r = run("winding " + sample("polygon64_ccw.csv"));
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["winding"].get<long>() == 1);
  CHECK(j["certified"].get<bool>());
  CHECK(j["N"].get<long>() == 1);
  CHECK(j["F"][0].get<double>() == Approx(64 * std::sin(2 * std::numbers::pi / 64)).epsilon(1e-14));
  // reruns are bit-identical
  CHECK(run("winding " + sample("polygon64_ccw.csv")).out == r.out);

  r = run("winding " + sample("polygon64_cw.csv"));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["winding"].get<long>() == -1);

  r = run("winding " + sample("diamond.csv"), "", true);
  CHECK(r.code == 3);
  CHECK(r.out.find("fMin=0.5") != std::string::npos);

  r = run("winding " + sample("polygon64_ccw.csv") + " --n 0");
  j = json::parse(r.out);
  CHECK(j["N"].get<long>() == 0);
  CHECK(j["tailBound"].get<double>() == Approx(1.687).epsilon(1e-3));
  CHECK(j["winding"].get<long>() == 1);

  // a jittered loop in R^3 with oblique functionals
  const auto dir = scratch_dir("cli");
  const auto suite = winding_suite();
  const auto& c = suite.back();
  const std::string file = write_csv(dir / "loop3d.csv", c.vertices);
  r = run("winding '" + file + "' --x1 " + join(c.x1) + " --x2 " + join(c.x2) + " --xi1 " + join({c.xi1}) + " --xi2 " +
          join({c.xi2}));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["winding"].get<long>() == c.oracle_winding());

  r = run("winding " + sample("polygon64_ccw.csv"), "SIGWIND_SCALAR=rational");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["winding"].get<long>() == 1);
  std::filesystem::remove_all(dir);

  CHECK(run("winding " + sample("diagonal.csv")).code == 1);
}

TEST_CASE("interpolate subcommand", "[cli]") {
  const std::string gon = sample("polygon64_ccw.csv");
  auto r = run("interpolate " + gon + " --f 'x1^2 + x2^2' --g x1 --h x2 --s 2");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["N"].get<long>() == 2);
  CHECK(j["tailBound"].get<double>() == 0.0);

  const Polyline<double> path(2, circle_points(64, 1.0, 0, 0));
  SignatureView<double> view(path);
  const auto x1 = Polynomial<double>::variable(2, 1), x2 = Polynomial<double>::variable(2, 2);
  const auto f = x1 * x1 + x2 * x2;
  CHECK(j["value"]["re"].get<double>() == Approx(polynomial_integral(f.pow(2) * x1, x2, view)).epsilon(1e-13));

  r = run("interpolate " + gon + " --f 1 --g x1 --h x2 --s -0.7");
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["value"]["re"].get<double>() == Approx(j["F"][0].get<double>()).epsilon(1e-15));

  r = run("interpolate " + gon + " --f 'x1^2 + x2^2' --g x1 --h x2 --antisymmetric --s -1");
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["value"]["re"].get<double>() / (2 * std::numbers::pi) == Approx(1.0).epsilon(1e-9));

  CHECK(run("interpolate " + gon + " --f 'x1^2 + x2^2 +' --g x1 --h x2").code == 1);
  // f vanishes on the path
  CHECK(run("interpolate " + gon + " --f 'x1^2 + x2^2 - 1' --g x1 --h x2").code == 3);
}
