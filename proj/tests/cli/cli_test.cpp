// Copyright 2026 The su2pol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the installed binary through a shell, one process per case.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("su2pol_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

CliResult invoke(const std::string& args) {
  const fs::path err_path = scratch_dir() / "stderr.txt";
  const std::string cmd =
      std::string("\"") + SU2POL_CLI_PATH + "\" " + args + " 2>\"" + err_path.string() + "\"";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  r.err.assign(std::istreambuf_iterator<char>(err), {});
  return r;
}

const std::string kPsiPi4 =
    R"({"n_photons": 2, "amplitudes": [[0.7071067811865476, 0], [0, 0], [0.7071067811865476, 0]]})";

TEST(Cli, DegreeOfPsiPi4) {
  const CliResult r = invoke("degree " + write_file("psi.json", kPsiPi4));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_GE(json::parse(r.out).at("eta_q").get<double>(), 1.0 - 1e-6);
}

TEST(Cli, DegreeOfVacuumFromStdin) {
  const std::string path = write_file("vac.json", R"({"n_photons": 0, "amplitudes": [[1, 0]]})");
  const CliResult r = invoke("degree - < \"" + path + "\"");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("eta_q").get<double>(), 0.0);
}

TEST(Cli, LengthMismatchIsInputError) {
  const CliResult r = invoke("degree " + write_file("bad.json", R"({"n_photons": 3, "amplitudes": [[1, 0]]})"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("LengthMismatch"), std::string::npos) << r.err;
}

TEST(Cli, BadGridIsInputError) {
  EXPECT_EQ(invoke("degree --grid 4,4 " + write_file("psi.json", kPsiPi4)).exit_code, 2);
  EXPECT_EQ(invoke("degree --grid 0,4,4 " + write_file("psi.json", kPsiPi4)).exit_code, 2);
}

TEST(Cli, UnknownSubcommandIsInputError) { EXPECT_EQ(invoke("frobnicate").exit_code, 2); }

TEST(Cli, Bases) {
  const CliResult r = invoke("bases -n 2 --axis z");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("states").size(), 3u);
  EXPECT_EQ(j.at("axis"), "z");
  const CliResult three = invoke("bases -n 3 --axis y --seed zeta2");
  ASSERT_EQ(three.exit_code, 0) << three.err;
  EXPECT_EQ(json::parse(three.out).at("states").size(), 4u);
  EXPECT_EQ(invoke("bases -n 4").exit_code, 2);
}

TEST(Cli, LegendreZeros) {
  const CliResult r = invoke("legendre-zeros 2");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_NEAR(j[1].get<double>(), 0.5773502691896258, 1e-15);
}

TEST(Cli, ClassifyPsiPi4) {
  const CliResult r = invoke("classify " + write_file("psi.json", kPsiPi4));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("kind"), "Type1");
  EXPECT_EQ(j.at("label"), 1);
}

TEST(Cli, OrthogonalizeMiddleState) {
  const CliResult r = invoke("orthogonalize " +
                    write_file("mid.json", R"({"n_photons": 2, "amplitudes": [[0,0],[1,0],[0,0]]})"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.at("found").get<bool>());
  EXPECT_EQ(j.at("route"), "middle_state");
}

TEST(Cli, TransformOutputIsReingestibleAndStable) {
  const CliResult once = invoke("transform --beta 0.3 --theta 1.1 --alpha 2.0 " +
                       write_file("psi.json", kPsiPi4));
  ASSERT_EQ(once.exit_code, 0) << once.err;
  const CliResult again = invoke("transform " + write_file("once.json", once.out));
  ASSERT_EQ(again.exit_code, 0) << again.err;
  const CliResult thrice = invoke("transform " + write_file("again.json", again.out));
  EXPECT_EQ(again.out, thrice.out);
}

TEST(Cli, VerifyPasses) {
  const CliResult r = invoke("verify");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out).at("passed").get<bool>());
  EXPECT_NE(r.err.find("[PASS] 01"), std::string::npos);
}

}  // namespace
