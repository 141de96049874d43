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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superrad/hamiltonian.hpp"

namespace superrad {

enum class ScenarioKind {
    HomogeneousScaling,
    InhomogeneousGammaSweep,
    SpatialDilution,
    TrotterError,
    JaynesCummings,
};

enum class Backend { Trotter, Exact, Lindblad };

std::string_view to_string(ScenarioKind kind);
std::string_view to_string(Backend backend);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);
std::optional<Backend> parse_backend(std::string_view name);

inline constexpr ScenarioKind kAllScenarios[] = {
    ScenarioKind::HomogeneousScaling, ScenarioKind::InhomogeneousGammaSweep, ScenarioKind::SpatialDilution,
    ScenarioKind::TrotterError,       ScenarioKind::JaynesCummings,
};

/// One experiment. List-valued fields are sweeps; every combination of
/// n_atoms × gamma0 × dr_over_lambda × trotter_steps is one job.
struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::HomogeneousScaling;
    std::vector<std::size_t> n_atoms{4};
    std::vector<double> gamma0{2.0};
    double atom_freq_center = 100.0;
    /// Atom α sits at center + (α - (N-1)/2) · spacing.
    double atom_freq_spacing = 0.0;
    std::size_t mode_count = 7;
    double mode_window_width = 50.0;
    /// One entry for every mode, or a single entry applied to all.
    std::vector<std::size_t> mode_qubits{1};
    /// Explicit atom positions; when absent atoms sit on a line with spacing
    /// dr_over_lambda · λ₀, λ₀ = 1 / atom_freq_center.
    std::optional<std::vector<double>> positions;
    std::vector<double> dr_over_lambda{0.0};
    double total_time_lifetimes = 3.0;
    std::vector<std::size_t> trotter_steps{1600};
    std::size_t sample_stride = 4;
    Backend backend = Backend::Trotter;
    CouplingConvention coupling_convention = kDefaultCouplingConvention;
    /// Replaces the window-derived coupling when set. Written as `auto` when
    /// unset so a preset value can be cleared.
    std::optional<double> coupling_g;
    std::string out_dir = "out";

    bool operator==(const ScenarioConfig&) const = default;

    /// Qubit count of mode `k` after broadcasting a scalar allocation.
    std::size_t qubits_for_mode(std::size_t k) const;
};

/// Full-scale preset for one scenario.
ScenarioConfig default_config(ScenarioKind kind);

/// One-line description for list-scenarios.
std::string_view describe(ScenarioKind kind);

/// Parses `key = value` lines under optional [section] headers. `#` starts a
/// comment. Lists are written `[a, b, c]`. Unknown keys, malformed values and
/// constraint violations throw ConfigError naming the key and line. Keys not
/// given take the preset of the named scenario.
ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a file; an unreadable file is a ConfigError on line 0.
ScenarioConfig load_config(const std::string& path);

/// Writes every field, so parse_config(emit_config(c)) == c.
std::string emit_config(const ScenarioConfig& config);

/// Checks the invariants; throws ConfigError naming the offending key.
void validate(const ScenarioConfig& config);

}  // namespace superrad
