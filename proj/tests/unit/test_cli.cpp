// Copyright 2026 The superrad Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string kCli = SUPERRAD_CLI;
const std::string kData = SUPERRAD_TEST_DATA;

int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" + kCli + "' " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write_config(const std::string& name, const std::string& body) {
    const auto dir = fs::temp_directory_path() / "superrad_cli_test";
    fs::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << body;
    return path;
}

const std::string kJc = "[scenario]\nscenario = jaynes_cummings\n[run]\ntrotter_steps = 400\n";

TEST(Cli, ListAndValidate) {
    EXPECT_EQ(run("list-scenarios"), 0);
    EXPECT_EQ(run("list-scenarios --show spatial_dilution"), 0);
    EXPECT_EQ(run("list-scenarios --show nothing"), 2);
    EXPECT_EQ(run("validate '" + kData + "/minimal.cfg'"), 0);
}

TEST(Cli, ConfigErrorsExitTwo) {
    EXPECT_EQ(run("validate '" + kData + "/bad_n_atoms.cfg'"), 2);
    EXPECT_EQ(run("run '" + kData + "/bad_n_atoms.cfg'"), 2);
    EXPECT_EQ(run("run '" + kData + "/missing.cfg'"), 2);
}

TEST(Cli, CapacityErrorExitsThree) {
    const auto cfg = write_config("cap.cfg", kJc);
    const auto out = fs::temp_directory_path() / "superrad_cli_test" / "cap_out";
    EXPECT_EQ(run("run '" + cfg.string() + "' --out-dir '" + out.string() + "'", "SUPERRAD_MAX_QUBITS=1"), 3);
    EXPECT_FALSE(fs::exists(out / "summary.csv"));
}

TEST(Cli, RunAndCheck) {
    const auto out = fs::temp_directory_path() / "superrad_cli_test" / "jc_out";
    fs::remove_all(out);
    const auto good = write_config("jc.cfg", kJc + "total_time_lifetimes = 12\n");
    EXPECT_EQ(run("run '" + good.string() + "' --check -q --out-dir '" + out.string() + "'"), 0);
    EXPECT_TRUE(fs::exists(out / "summary.csv"));

    // Too short to see two Rabi maxima, so the period check fails.
    const auto bad = write_config("jc_short.cfg", kJc + "total_time_lifetimes = 1\n");
    EXPECT_EQ(run("run '" + bad.string() + "' --check -q --out-dir '" + out.string() + "'"), 4);
    EXPECT_EQ(run("run '" + bad.string() + "' -q --out-dir '" + out.string() + "'"), 0);
    fs::remove_all(out);
}

}  // namespace
