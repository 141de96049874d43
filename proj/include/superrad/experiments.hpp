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
#include <string>
#include <string_view>
#include <vector>

#include "superrad/config.hpp"
#include "superrad/hamiltonian.hpp"
#include "superrad/observables.hpp"

namespace superrad {

/// One point of a scenario sweep.
struct Job {
    std::size_t n_atoms = 1;
    double gamma0 = 1.0;
    double dr_over_lambda = 0.0;
    std::size_t trotter_steps = 1;
    Backend backend = Backend::Trotter;
    /// Added by the scenario as a reference curve rather than requested.
    bool companion = false;

    bool operator==(const Job&) const = default;
};

/// The requested sweep in order n_atoms, gamma0, dr_over_lambda,
/// trotter_steps, followed by the reference jobs the scenario adds.
std::vector<Job> expand_jobs(const ScenarioConfig& config);

/// Atom frequencies centred on atom_freq_center with the configured spacing.
std::vector<double> atom_frequencies(const ScenarioConfig& config, std::size_t n_atoms);

/// Coupling used for every mode of a job.
double job_coupling(const ScenarioConfig& config, const Job& job);

SystemSpec build_system(const ScenarioConfig& config, const Job& job);

/// Evolves one job on its backend and returns the sampled observables.
/// Sample times are identical across backends for the same step count.
TimeSeries run_job(const ScenarioConfig& config, const Job& job);

/// Throws InvariantViolation when a record breaks the norm or the
/// intensity = coherence + non-coherent identity.
void check_record(const ObservableRecord& r, std::size_t n_atoms, double gamma0);

/// CSV for one job: a `#` metadata block then the header and rows. The only
/// line that varies between reruns is the one starting with "# generated_at".
std::string format_csv(const ScenarioConfig& config, const Job& job, const TimeSeries& series,
                       std::string_view generated_at);

std::string job_file_name(const ScenarioConfig& config, const Job& job);

struct JobResult {
    Job job;
    TimeSeries series;
    std::string file;
};

struct ScenarioResult {
    ScenarioConfig config;
    std::vector<JobResult> runs;
    std::vector<std::string> files;

    const JobResult* find(const Job& job) const;
};

/// Runs every job on up to `threads` workers (0 picks SUPERRAD_THREADS or the
/// hardware concurrency). With `write` set, CSVs plus the scenario summaries go
/// to config.out_dir.
ScenarioResult run_scenario(const ScenarioConfig& config, std::size_t threads = 0, bool write = true);

/// Worker count from SUPERRAD_THREADS, else the hardware concurrency.
std::size_t configured_threads();

/// Rows (N_T, t, |⟨H⟩(t) - ⟨H⟩(0)| / (N_A Γ₀)) for every trotter and exact
/// run in the result; the exact baseline is labelled "exact" in the N_T column.
std::string trotter_error_report(const ScenarioResult& result);

/// Maximum of the energy_drift_rel column over a series.
double max_energy_drift(const TimeSeries& series, std::size_t n_atoms, double gamma0);

/// Headline numbers of one run, all intensities normalized by N_A Γ₀ and
/// times in lifetimes. NaN marks a quantity the backend does not provide or a
/// threshold that was never reached.
struct JobSummary {
    Job job;
    std::size_t qubits = 0;
    double coupling = 0.0;
    double peak_intensity = 0.0;
    double peak_time = 0.0;
    double max_coherence = 0.0;
    double max_coherence_time = 0.0;
    double t80 = 0.0;
    double final_total_occupation = 0.0;
    double max_energy_drift = 0.0;
    double max_norm_drift = 0.0;
};

JobSummary summarize(const ScenarioConfig& config, const JobResult& run);

std::string summary_csv(const ScenarioResult& result);

/// a (N - b)^n + c fits of peak intensity (in units of Γ₀) per backend over
/// N_A ≥ 2. Empty when fewer than four atom counts were run.
std::string scaling_fit_csv(const ScenarioResult& result);

/// Coherence of every spacing at the time the Δr = 0 run of the same N_A
/// peaks, against the predictor anchored at that peak. Each run's own
/// extremum is listed alongside. Empty when no Δr = 0 run exists.
std::string spatial_prediction_csv(const ScenarioResult& result);

}  // namespace superrad
