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

#include <random>
#include <string>

#include "superrad/config.hpp"
#include "superrad/errors.hpp"

namespace superrad {
namespace {

const std::string kData = SUPERRAD_TEST_DATA;

template <class F>
ConfigError capture(F&& f) {
    try {
        f();
    } catch (const ConfigError& e) {
        return e;
    }
    ADD_FAILURE() << "no ConfigError thrown";
    return ConfigError("", 0, "");
}

TEST(Config, PresetsAreValidAndRoundTrip) {
    for (auto kind : kAllScenarios) {
        const auto c = default_config(kind);
        EXPECT_NO_THROW(validate(c)) << to_string(kind);
        EXPECT_EQ(c.scenario, kind);
        EXPECT_EQ(parse_config(emit_config(c)), c) << to_string(kind);
        EXPECT_EQ(parse_scenario_kind(to_string(kind)), kind);
        EXPECT_FALSE(describe(kind).empty());
    }
    EXPECT_EQ(parse_scenario_kind("nope"), std::nullopt);
}

TEST(Config, GoldenFileMatchesExpectedStruct) {
    auto want = default_config(ScenarioKind::InhomogeneousGammaSweep);
    want.n_atoms = {2};
    want.gamma0 = {0.5, 1.5};
    want.atom_freq_spacing = 2.5;
    want.mode_count = 3;
    want.mode_window_width = 12;
    want.mode_qubits = {1, 2, 1};
    want.total_time_lifetimes = 1.5;
    want.trotter_steps = {50, 100};
    want.sample_stride = 5;
    want.backend = Backend::Exact;
    want.out_dir = "out/minimal";
    const auto got = load_config(kData + "/minimal.cfg");
    EXPECT_EQ(got, want);
    EXPECT_EQ(got.qubits_for_mode(1), 2u);
}

TEST(Config, MissingKeysComeFromScenarioPreset) {
    const auto c = parse_config("[scenario]\nscenario = jaynes_cummings\n");
    EXPECT_EQ(c, default_config(ScenarioKind::JaynesCummings));
}

TEST(Config, ScalarModeQubitsBroadcast) {
    const auto c = parse_config("[scenario]\nscenario = trotter_error\n[modes]\nmode_qubits = 2\n");
    for (std::size_t k = 0; k < c.mode_count; ++k) {
        EXPECT_EQ(c.qubits_for_mode(k), 2u);
    }
}

TEST(Config, ZeroAtomsNamesKeyAndLine) {
    const auto e = capture([] { load_config(kData + "/bad_n_atoms.cfg"); });
    EXPECT_EQ(e.key(), "n_atoms");
    EXPECT_EQ(e.line(), 6u);
    EXPECT_NE(std::string(e.what()).find("n_atoms"), std::string::npos);
}

TEST(Config, RejectsUnknownDuplicateAndMisplacedKeys) {
    auto e = capture([] { parse_config("[scenario]\nscenario = jaynes_cummings\n[run]\nfoo = 1\n"); });
    EXPECT_EQ(e.key(), "foo");
    EXPECT_EQ(e.line(), 4u);

    e = capture([] { parse_config("[scenario]\nscenario = jaynes_cummings\n[atoms]\ngamma0 = 1\ngamma0 = 2\n"); });
    EXPECT_EQ(e.key(), "gamma0");
    EXPECT_EQ(e.line(), 5u);

    e = capture([] { parse_config("[scenario]\nscenario = jaynes_cummings\n[run]\ngamma0 = 1\n"); });
    EXPECT_EQ(e.key(), "gamma0");
    EXPECT_EQ(e.line(), 4u);

    e = capture([] { parse_config("[atoms]\ngamma0 = 1\n"); });
    EXPECT_EQ(e.key(), "scenario");
}

TEST(Config, RejectsMalformedValues) {
    const std::string head = "[scenario]\nscenario = homogeneous_scaling\n";
    struct Case {
        std::string body;
        std::string key;
    };
    const Case cases[] = {
        {"[atoms]\ngamma0 = abc\n", "gamma0"},
        {"[atoms]\ngamma0 = -1\n", "gamma0"},
        {"[atoms]\nn_atoms = [1, 2\n", "n_atoms"},
        {"[atoms]\nn_atoms = 1.5\n", "n_atoms"},
        {"[modes]\nmode_qubits = [1, 2]\n", "mode_qubits"},
        {"[modes]\nmode_qubits = 0\n", "mode_qubits"},
        {"[modes]\ncoupling_convention = golden\n", "coupling_convention"},
        {"[run]\nbackend = quantum\n", "backend"},
        {"[run]\nsample_stride = 0\n", "sample_stride"},
        {"[run]\ntrotter_steps = [100, 0]\n", "trotter_steps"},
        {"[atoms]\npositions = [0, 1]\n", "positions"},
    };
    for (const auto& c : cases) {
        const auto e = capture([&] { parse_config(head + c.body); });
        EXPECT_EQ(e.key(), c.key) << c.body;
        EXPECT_EQ(e.line(), 4u) << c.body;
    }
}

TEST(Config, MissingFileIsConfigError) {
    const auto e = capture([] { load_config(kData + "/does_not_exist.cfg"); });
    EXPECT_EQ(e.line(), 0u);
}

TEST(Config, RandomConfigsRoundTrip) {
    std::mt19937_64 rng(20261018);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto c = default_config(kAllScenarios[pick(0, 4)]);
        c.n_atoms.clear();
        for (std::size_t i = 0, n = pick(1, 4); i < n; ++i) {
            c.n_atoms.push_back(pick(1, 6));
        }
        c.gamma0 = {unit(rng) * 10 + 1e-3, std::exp(unit(rng) * 5 - 3)};
        c.atom_freq_center = 50 + 100 * unit(rng);
        c.atom_freq_spacing = unit(rng) * 3;
        c.mode_count = pick(1, 9);
        c.mode_window_width = 10 + unit(rng) * 40;
        c.mode_qubits.assign(pick(0, 1) ? 1 : c.mode_count, pick(1, 3));
        c.dr_over_lambda = {0.0, unit(rng), 1.0 / 3.0};
        c.total_time_lifetimes = 0.1 + unit(rng) * 5;
        c.trotter_steps = {pick(1, 5000)};
        c.sample_stride = pick(1, 20);
        c.backend = static_cast<Backend>(pick(0, 2));
        c.coupling_convention = pick(0, 1) ? CouplingConvention::G2OverDelta : CouplingConvention::G2TimesDelta;
        if (pick(0, 1)) {
            c.coupling_g = unit(rng) + 0.01;
        } else {
            c.coupling_g.reset();
        }
        c.positions.reset();
        if (c.n_atoms.size() == 1 && pick(0, 1)) {
            c.positions = std::vector<double>(c.n_atoms.front());
            for (auto& p : *c.positions) {
                p = unit(rng) - 0.5;
            }
        }
        c.out_dir = "out/trial_" + std::to_string(trial);
        ASSERT_NO_THROW(validate(c));
        EXPECT_EQ(parse_config(emit_config(c)), c) << emit_config(c);
    }
}

}  // namespace
}  // namespace superrad
