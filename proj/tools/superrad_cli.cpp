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

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "superrad/checks.hpp"
#include "superrad/config.hpp"
#include "superrad/errors.hpp"
#include "superrad/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitCheck = 4;

int run_command(const std::string& path, bool check, std::size_t threads, const std::string& out_dir, bool quiet) {
    auto config = superrad::load_config(path);
    if (!out_dir.empty()) {
        config.out_dir = out_dir;
    }
    const auto result = superrad::run_scenario(config, threads, true);
    if (!quiet) {
        for (const auto& file : result.files) {
            fmt::print("wrote {}\n", file);
        }
    }
    if (!check) {
        return kExitOk;
    }
    bool all = true;
    for (const auto& c : superrad::check_scenario(result)) {
        fmt::print("{} {}: {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
        all = all && c.passed;
    }
    return all ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cooperative emission from atoms in a discretized radiation bath"};
    app.require_subcommand(1);

    std::string config_path;
    bool check = false;
    bool quiet = false;
    std::size_t threads = 0;
    std::string out_dir;
    auto* run = app.add_subcommand("run", "Run a scenario and write its CSV files");
    run->add_option("config", config_path, "Scenario config file")->required();
    run->add_flag("--check", check, "Evaluate the scenario's acceptance checks; exit 4 if any fail");
    run->add_option("--threads", threads, "Worker threads (default: SUPERRAD_THREADS or all cores)");
    run->add_option("--out-dir", out_dir, "Override out_dir from the config");
    run->add_flag("-q,--quiet", quiet, "Do not list written files");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Parse a config and print it fully resolved");
    validate->add_option("config", validate_path, "Scenario config file")->required();

    std::string show;
    auto* list = app.add_subcommand("list-scenarios", "List the built-in scenarios");
    list->add_option("--show", show, "Print the preset config of one scenario");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            return run_command(config_path, check, threads, out_dir, quiet);
        }
        if (*validate) {
            const auto config = superrad::load_config(validate_path);
            fmt::print("{}", superrad::emit_config(config));
            return kExitOk;
        }
        if (!show.empty()) {
            const auto kind = superrad::parse_scenario_kind(show);
            if (!kind) {
                throw superrad::ConfigError("scenario", 0, fmt::format("unknown scenario '{}'", show));
            }
            fmt::print("{}", superrad::emit_config(superrad::default_config(*kind)));
            return kExitOk;
        }
        for (auto kind : superrad::kAllScenarios) {
            fmt::print("{:<28}{}\n", superrad::to_string(kind), superrad::describe(kind));
        }
        return kExitOk;
    } catch (const superrad::ConfigError& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kExitConfig;
    } catch (const superrad::CapacityError& e) {
        fmt::print(stderr, "capacity error: {}\n", e.what());
        return kExitCapacity;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitFailure;
    }
}
