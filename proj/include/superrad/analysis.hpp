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
#include <span>
#include <vector>

#include "superrad/observables.hpp"

namespace superrad {

/// First time `values` reaches target_fraction·n_atoms, linearly interpolated
/// between samples. Throws NoCrossingError when the series never gets there.
double saturation_time(std::span<const double> times, std::span<const double> values, double target_fraction,
                       std::size_t n_atoms);

/// Same, reading time_lifetimes and total occupation from a series.
double saturation_time(const TimeSeries& series, double target_fraction, std::size_t n_atoms);

/// f(N) = a (N - b)^n + c
struct FitResult {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double n = 0.0;
    double residual = 0.0;
    /// Set when every value is equal; only `c` is meaningful then.
    bool flat = false;

    double operator()(double x) const;
};

struct ScalingPoint {
    double n_atoms = 0.0;
    double value = 0.0;
};

/// Least squares over (n, b) on a refining grid with (a, c) solved exactly
/// at each node. Needs at least four points with distinct abscissae.
FitResult fit_peak_scaling(std::span<const ScalingPoint> points);

/// 2 Σ_{n=1}^{N-1} (N - n) A cos(n Δr / λ₀), with A fixed so that Δr = 0
/// reproduces `max_at_zero`. Γ₀ cancels, so the result is in the units of
/// `max_at_zero`.
double predicted_max_coherence(double dr, double lambda0, std::size_t n_atoms, double max_at_zero);

struct Extremum {
    double time = 0.0;
    double value = 0.0;
    std::size_t index = 0;
};

/// Largest intensity sample.
Extremum peak_intensity(const TimeSeries& series);

/// Coherence sample of largest magnitude, sign kept.
Extremum max_coherence(const TimeSeries& series);

}  // namespace superrad
