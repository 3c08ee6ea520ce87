// Copyright 2026 The auvform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "auvform_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_scenario(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

int cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + AUVFORM_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kShort =
    R"({"trajectory": {"kind": "spiral"}, "sim": {"dt_s": 0.01, "duration_s": 1.0, "seed": 1},
        "mpc": {"enabled": false}})";

TEST(Cli, ValidateShippedScenarios) {
  for (const auto& e : fs::directory_iterator(AUVFORM_SCENARIO_DIR)) {
    if (e.path().extension() == ".json") {
      EXPECT_EQ(cli("validate " + e.path().string()), 0) << e.path();
    }
  }
}

TEST(Cli, ValidationErrorsExitOne) {
  const fs::path bad = write_scenario(
      "rho.json", R"({"trajectory": {}, "sim": {}, "controller": {"rho": 0.6}})");
  EXPECT_EQ(cli("validate " + bad.string()), 1);
  EXPECT_EQ(cli("validate " + (scratch() / "missing.json").string()), 1);
  EXPECT_EQ(cli("frobnicate"), 1);
  EXPECT_EQ(cli("run " + bad.string()), 1);
  const fs::path ok = write_scenario("short.json", kShort);
  EXPECT_EQ(cli("run " + ok.string() + " -o " + (scratch() / "dt0").string() + " --dt 0"), 1);
  EXPECT_EQ(cli("flow-grid " + ok.string() + " -o " + (scratch() / "g.csv").string() +
                " --t 0,abc"),
            1);
}

TEST(Cli, ShortRunWritesBundle) {
  const fs::path scen = write_scenario("short.json", kShort);
  const fs::path out = scratch() / "run";
  fs::remove_all(out);
  ASSERT_EQ(cli("run " + scen.string() + " -o " + out.string() + " --seed 3"), 0);
  for (const char* f : {"timeseries.csv", "metrics.csv", "summary.csv", "phase_x.csv"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const std::string ts = slurp(out / "timeseries.csv");
  EXPECT_EQ(ts.find('\r'), std::string::npos);
  EXPECT_EQ(ts.substr(0, 2), "t,");
  EXPECT_NE(slurp(out / "summary.csv").find("records,101\n"), std::string::npos);
}

TEST(Cli, FlowGridWritesFile) {
  const fs::path scen = write_scenario("short.json", kShort);
  const fs::path out = scratch() / "grid.csv";
  fs::remove(out);
  ASSERT_EQ(cli("flow-grid " + scen.string() + " -o " + out.string() + " --t 0,1.5"), 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "x,y,z,t,U,V,W");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 2u * 81u * 81u * 21u);
}

TEST(Cli, UnwritableOutputExitsTwo) {
  const fs::path scen = write_scenario("short.json", kShort);
  const fs::path blocker = scratch() / "blocker";
  std::ofstream(blocker) << "x";
  EXPECT_EQ(cli("run " + scen.string() + " -o " + (blocker / "sub").string()), 2);
}

TEST(Cli, CompareWritesBothRuns) {
  const fs::path scen = write_scenario("short.json", kShort);
  const fs::path out = scratch() / "cmp";
  fs::remove_all(out);
  ASSERT_EQ(cli("compare " + scen.string() + " -o " + out.string()), 0);
  EXPECT_TRUE(fs::exists(out / "compare_summary.csv"));
  EXPECT_TRUE(fs::exists(out / "baseline" / "timeseries.csv"));
}

}  // namespace
