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

#include <string>
#include <vector>

#include "superrad/experiments.hpp"

namespace superrad {

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Row-level invariants every run must satisfy: unit norm (trace for the
/// master equation) within 1e-9 and the intensity decomposition within 1e-9.
std::vector<CheckOutcome> check_invariants(const ScenarioResult& result);

/// Scenario-specific expectations (energy drift, scaling exponents,
/// saturation, crossover, spatial predictor, Rabi period) followed by the
/// invariants. Checks whose inputs are absent from the sweep are skipped.
std::vector<CheckOutcome> check_scenario(const ScenarioResult& result);

/// Mean spacing of successive maxima of a sampled signal, refined by a
/// parabola through each peak sample. Throws NoCrossingError with fewer than
/// two maxima.
double oscillation_period(const std::vector<double>& times, const std::vector<double>& values);

}  // namespace superrad
