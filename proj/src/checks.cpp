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

#include "superrad/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "superrad/analysis.hpp"
#include "superrad/errors.hpp"

namespace superrad {

namespace {

CheckOutcome outcome(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

double normalized(double raw, const Job& job) { return raw / (static_cast<double>(job.n_atoms) * job.gamma0); }

std::vector<const JobResult*> primary_runs(const ScenarioResult& result) {
    std::vector<const JobResult*> out;
    for (const auto& run : result.runs) {
        if (!run.job.companion) {
            out.push_back(&run);
        }
    }
    return out;
}

void check_trotter_error(const ScenarioResult& result, std::vector<CheckOutcome>& out) {
    for (const auto& run : result.runs) {
        const double drift = max_energy_drift(run.series, run.job.n_atoms, run.job.gamma0);
        if (run.job.backend == Backend::Exact) {
            out.push_back(outcome("energy drift, exact baseline", drift <= 1e-9, fmt::format("{:.3e}", drift)));
            continue;
        }
        if (run.job.backend != Backend::Trotter) {
            continue;
        }
        const double bound = run.job.trotter_steps >= 1600 ? 0.02 : 0.05;
        out.push_back(outcome(fmt::format("energy drift, N_T = {}", run.job.trotter_steps), drift <= bound,
                              fmt::format("{:.5f} (bound {})", drift, bound)));
    }
}

void check_homogeneous(const ScenarioResult& result, std::vector<CheckOutcome>& out) {
    const auto& c = result.config;
    const double gamma0 = c.gamma0.front();
    std::map<std::size_t, double> sim_peak;
    std::map<std::size_t, double> oracle_peak;
    std::map<std::size_t, const JobResult*> sim_runs;
    for (const auto& run : result.runs) {
        const Job& j = run.job;
        if (j.gamma0 != gamma0 || j.n_atoms < 2) {
            continue;
        }
        const double peak = peak_intensity(run.series).value / gamma0;
        if (j.backend == Backend::Lindblad) {
            oracle_peak[j.n_atoms] = peak;
        } else if (j.trotter_steps == c.trotter_steps.front() && j.dr_over_lambda == c.dr_over_lambda.front()) {
            sim_peak[j.n_atoms] = peak;
            sim_runs[j.n_atoms] = &run;
        }
    }
    auto fit_of = [](const std::map<std::size_t, double>& peaks) {
        std::vector<ScalingPoint> pts;
        for (auto [n, v] : peaks) {
            pts.push_back({static_cast<double>(n), v});
        }
        return fit_peak_scaling(pts);
    };
    if (sim_peak.size() >= 4) {
        const auto fit = fit_of(sim_peak);
        out.push_back(outcome("simulator peak scaling exponent", fit.n >= 1.7 && fit.n <= 2.3,
                              fmt::format("n = {:.4f}, want [1.7, 2.3]", fit.n)));
    }
    if (oracle_peak.size() >= 4) {
        const auto fit = fit_of(oracle_peak);
        out.push_back(outcome("master equation peak scaling exponent", fit.n >= 1.8 && fit.n <= 2.2,
                              fmt::format("n = {:.4f}, want [1.8, 2.2]", fit.n)));
    }
    for (auto [n, v] : sim_peak) {
        if (auto it = oracle_peak.find(n); it != oracle_peak.end()) {
            const double rel = std::abs(v - it->second) / it->second;
            out.push_back(outcome(fmt::format("peak vs master equation, N_A = {}", n), rel <= 0.15,
                                  fmt::format("{:.4f} vs {:.4f} Γ₀, deviation {:.2f}%", v, it->second, 100 * rel)));
        }
    }
    if (sim_runs.size() >= 2) {
        bool decreasing = true;
        std::string detail;
        double previous = std::numeric_limits<double>::infinity();
        for (auto [n, run] : sim_runs) {
            double t80 = std::numeric_limits<double>::quiet_NaN();
            try {
                t80 = saturation_time(run->series, 0.8, n);
            } catch (const NoCrossingError&) {
            }
            detail += fmt::format("{}N_A={}: {:.4f}", detail.empty() ? "" : ", ", n, t80);
            decreasing = decreasing && t80 < previous;
            previous = t80;
        }
        out.push_back(outcome("time to 80% saturation strictly decreasing", decreasing, detail));
    }
    if (auto it = sim_runs.find(5); it != sim_runs.end()) {
        const double n_total = it->second->series.records.back().total_occupation;
        const double rel = std::abs(n_total - 5.0) / 5.0;
        out.push_back(outcome("total occupation at T for N_A = 5", rel <= 0.05,
                              fmt::format("{:.4f} photons, {:.2f}% short", n_total, 100 * rel)));
    }
}

void check_inhomogeneous(const ScenarioResult& result, std::vector<CheckOutcome>& out) {
    std::map<double, const JobResult*> by_gamma;
    for (const auto* run : primary_runs(result)) {
        if (run->job.n_atoms == result.config.n_atoms.front()) {
            by_gamma.emplace(run->job.gamma0, run);
        }
    }
    if (by_gamma.empty()) {
        return;
    }
    const auto* weakest = by_gamma.begin()->second;
    double worst_coh = 0.0;
    double worst_gap = 0.0;
    for (const auto& r : weakest->series.records) {
        worst_coh = std::max(worst_coh, std::abs(normalized(r.coherence, weakest->job)));
        worst_gap = std::max(worst_gap, std::abs(normalized(r.intensity - r.intensity_nc, weakest->job)));
    }
    out.push_back(outcome(fmt::format("coherence small at gamma0 = {}", weakest->job.gamma0), worst_coh < 0.1,
                          fmt::format("max |coherence| = {:.4f}", worst_coh)));
    out.push_back(outcome(fmt::format("intensity tracks non-coherent at gamma0 = {}", weakest->job.gamma0),
                          worst_gap < 0.1, fmt::format("max gap = {:.4f}", worst_gap)));
    bool monotone = true;
    std::string detail;
    double previous = -std::numeric_limits<double>::infinity();
    for (auto [g, run] : by_gamma) {
        const double peak = normalized(peak_intensity(run->series).value, run->job);
        detail += fmt::format("{}{}: {:.4f}", detail.empty() ? "" : ", ", g, peak);
        monotone = monotone && peak >= previous;
        previous = peak;
    }
    if (by_gamma.size() >= 2) {
        out.push_back(outcome("peak intensity non-decreasing in gamma0", monotone, detail));
        const auto* strongest = by_gamma.rbegin()->second;
        const double peak = normalized(peak_intensity(strongest->series).value, strongest->job);
        out.push_back(outcome(fmt::format("superradiant excess at gamma0 = {}", strongest->job.gamma0),
                              peak >= 1.2, fmt::format("peak {:.4f}, want >= 1.2", peak)));
    }
}

void check_spatial(const ScenarioResult& result, std::vector<CheckOutcome>& out) {
    for (const auto* anchor : primary_runs(result)) {
        if (anchor->job.dr_over_lambda != 0.0 || anchor->job.n_atoms < 2) {
            continue;
        }
        const auto peak = max_coherence(anchor->series);
        const double at_zero = normalized(peak.value, anchor->job);
        double worst = 0.0;
        std::size_t points = 0;
        std::size_t shifted = 0;
        for (const auto* run : primary_runs(result)) {
            const Job& j = run->job;
            if (j.n_atoms != anchor->job.n_atoms || j.gamma0 != anchor->job.gamma0 ||
                j.trotter_steps != anchor->job.trotter_steps) {
                continue;
            }
            const double sim = normalized(run->series.records.at(peak.index).coherence, j);
            const double predicted = predicted_max_coherence(j.dr_over_lambda, 1.0, j.n_atoms, at_zero);
            worst = std::max(worst, std::abs(sim - predicted) / std::abs(at_zero));
            ++points;
            if (std::abs(max_coherence(run->series).time - peak.time) > 0.05) {
                ++shifted;
            }
        }
        out.push_back(outcome(fmt::format("max coherence follows predictor, N_A = {}", anchor->job.n_atoms),
                              worst <= 0.05,
                              fmt::format("{} points at t = {:.4f}, worst deviation {:.2f}% of the dr = 0 value; "
                                          "{} runs peak elsewhere",
                                          points, peak.time, 100 * worst, shifted)));
    }
}

void check_jaynes_cummings(const ScenarioResult& result, std::vector<CheckOutcome>& out) {
    for (const auto* run : primary_runs(result)) {
        const double g = job_coupling(result.config, run->job);
        std::vector<double> t;
        std::vector<double> n;
        for (const auto& r : run->series.records) {
            t.push_back(r.time / run->job.gamma0);
            n.push_back(r.mode_occupation.at(0));
        }
        try {
            const double period = oscillation_period(t, n);
            const double want = std::numbers::pi / g;
            const double rel = std::abs(period - want) / want;
            out.push_back(outcome("Rabi period of mode occupation", rel <= 0.05,
                                  fmt::format("{:.5f} vs pi/g = {:.5f}", period, want)));
        } catch (const NoCrossingError& e) {
            out.push_back(outcome("Rabi period of mode occupation", false, e.what()));
        }
        const double peak = *std::max_element(n.begin(), n.end());
        out.push_back(outcome("peak mode occupation", peak >= 0.95, fmt::format("{:.5f}", peak)));
    }
}

}  // namespace

double oscillation_period(const std::vector<double>& times, const std::vector<double>& values) {
    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (values[i] > values[i - 1] && values[i] >= values[i + 1]) {
            const double y0 = values[i - 1];
            const double y1 = values[i];
            const double y2 = values[i + 1];
            const double denom = y0 - 2 * y1 + y2;
            const double shift = denom != 0.0 ? 0.5 * (y0 - y2) / denom : 0.0;
            peaks.push_back(times[i] + shift * 0.5 * (times[i + 1] - times[i - 1]));
        }
    }
    if (peaks.size() < 2) {
        throw NoCrossingError(fmt::format("need two maxima to measure a period, found {}", peaks.size()));
    }
    return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

std::vector<CheckOutcome> check_invariants(const ScenarioResult& result) {
    std::vector<CheckOutcome> out;
    double worst_norm = 0.0;
    double worst_identity = 0.0;
    for (const auto& run : result.runs) {
        for (const auto& r : run.series.records) {
            worst_norm = std::max(worst_norm, std::abs(r.norm - 1.0));
            worst_identity =
                std::max(worst_identity, std::abs(normalized(r.intensity - r.coherence - r.intensity_nc, run.job)));
        }
    }
    out.push_back(outcome("norm drift below 1e-9", worst_norm < 1e-9, fmt::format("{:.3e}", worst_norm)));
    out.push_back(outcome("intensity = coherence + non-coherent within 1e-9", worst_identity <= 1e-9,
                          fmt::format("{:.3e}", worst_identity)));
    return out;
}

std::vector<CheckOutcome> check_scenario(const ScenarioResult& result) {
    std::vector<CheckOutcome> out;
    switch (result.config.scenario) {
        case ScenarioKind::TrotterError:
            check_trotter_error(result, out);
            break;
        case ScenarioKind::HomogeneousScaling:
            check_homogeneous(result, out);
            break;
        case ScenarioKind::InhomogeneousGammaSweep:
            check_inhomogeneous(result, out);
            break;
        case ScenarioKind::SpatialDilution:
            check_spatial(result, out);
            break;
        case ScenarioKind::JaynesCummings:
            check_jaynes_cummings(result, out);
            break;
    }
    for (auto& c : check_invariants(result)) {
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace superrad
