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

#include "superrad/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <thread>

#include <fmt/format.h>

#include "superrad/analysis.hpp"
#include "superrad/dense.hpp"
#include "superrad/errors.hpp"
#include "superrad/lindblad.hpp"
#include "superrad/statevector.hpp"

namespace superrad {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Lindblad steps per lifetime never drop below this.
constexpr double kLindbladStepsPerLifetime = 100.0;

std::size_t system_width(const ScenarioConfig& c, std::size_t n_atoms) {
    std::size_t w = n_atoms;
    for (std::size_t k = 0; k < c.mode_count; ++k) {
        w += c.qubits_for_mode(k);
    }
    return w;
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    }
    out << text;
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::vector<Job> expand_jobs(const ScenarioConfig& c) {
    std::vector<Job> jobs;
    for (auto n : c.n_atoms) {
        for (auto g : c.gamma0) {
            for (auto dr : c.dr_over_lambda) {
                for (auto steps : c.trotter_steps) {
                    jobs.push_back({n, g, dr, steps, c.backend, false});
                }
            }
        }
    }
    if (c.backend == Backend::Lindblad) {
        return jobs;
    }
    const std::size_t finest = *std::max_element(c.trotter_steps.begin(), c.trotter_steps.end());
    for (auto n : c.n_atoms) {
        for (auto g : c.gamma0) {
            switch (c.scenario) {
                case ScenarioKind::HomogeneousScaling:
                case ScenarioKind::InhomogeneousGammaSweep:
                    if (n <= 10) {
                        jobs.push_back({n, g, c.dr_over_lambda.front(), c.trotter_steps.front(), Backend::Lindblad,
                                        true});
                    }
                    break;
                case ScenarioKind::TrotterError:
                case ScenarioKind::JaynesCummings:
                    if (c.backend == Backend::Trotter && system_width(c, n) <= kMaxExactWidth) {
                        jobs.push_back({n, g, c.dr_over_lambda.front(), finest, Backend::Exact, true});
                    }
                    break;
                case ScenarioKind::SpatialDilution:
                    break;
            }
        }
    }
    return jobs;
}

std::vector<double> atom_frequencies(const ScenarioConfig& c, std::size_t n_atoms) {
    std::vector<double> out;
    for (std::size_t a = 0; a < n_atoms; ++a) {
        const double offset = static_cast<double>(a) - 0.5 * static_cast<double>(n_atoms - 1);
        out.push_back(c.atom_freq_center + offset * c.atom_freq_spacing);
    }
    return out;
}

double job_coupling(const ScenarioConfig& c, const Job& job) {
    if (c.coupling_g) {
        return *c.coupling_g;
    }
    return coupling_from_gamma(job.gamma0, window_spacing(c.mode_window_width, c.mode_count), c.coupling_convention);
}

SystemSpec build_system(const ScenarioConfig& c, const Job& job) {
    const auto freqs = atom_frequencies(c, job.n_atoms);
    const double lambda0 = 1.0 / c.atom_freq_center;
    std::vector<AtomSpec> atoms;
    for (std::size_t a = 0; a < job.n_atoms; ++a) {
        const double r = c.positions ? (*c.positions)[a] : static_cast<double>(a) * job.dr_over_lambda * lambda0;
        atoms.push_back({freqs[a], r, job.gamma0});
    }
    const double g = job_coupling(c, job);
    std::vector<ModeSpec> modes;
    const auto mode_freqs = standard_mode_window(c.atom_freq_center, c.mode_window_width, c.mode_count);
    for (std::size_t k = 0; k < mode_freqs.size(); ++k) {
        modes.push_back(ModeSpec::make(mode_freqs[k], g, c.qubits_for_mode(k)));
    }
    return SystemSpec::create(std::move(atoms), std::move(modes));
}

TimeSeries run_job(const ScenarioConfig& c, const Job& job) {
    const double total_time = c.total_time_lifetimes / job.gamma0;
    TimeSeries series{std::string(to_string(job.backend)), {}};

    if (job.backend == Backend::Lindblad) {
        const auto factor = static_cast<std::size_t>(
            std::ceil(kLindbladStepsPerLifetime * c.total_time_lifetimes / static_cast<double>(job.trotter_steps)));
        const std::size_t steps = job.trotter_steps * std::max<std::size_t>(factor, 1);
        const std::size_t stride = c.sample_stride * (steps / job.trotter_steps);
        const DickeMasterEquation eq(job.n_atoms, job.gamma0, c.atom_freq_center, DecayChannel::Collective,
                                     Frame::Rotating);
        for (const auto& [t, rho] : eq.integrate(DensityMatrix::fully_excited(job.n_atoms), total_time,
                                                 total_time / static_cast<double>(steps), stride)) {
            series.records.push_back(eq.record(t, rho));
        }
        return series;
    }

    const SystemSpec spec = build_system(c, job);
    const HamiltonianParts parts = build_total(spec);
    const ObservableSet observables(spec, parts.total);
    StateVector state = init_state(spec.layout());

    if (job.backend == Backend::Trotter) {
        const TrotterPlan plan = make_trotter_plan(parts, total_time, job.trotter_steps);
        series.records = evolve(
            state, plan, [&](double t, const StateVector& s) { return observables.measure(t, s); }, c.sample_stride);
        return series;
    }

    const ExactPropagator propagator(dense_realization(parts.total, spec.width()));
    const double dt = total_time / static_cast<double>(job.trotter_steps);
    for (std::size_t step = 0; step <= job.trotter_steps; ++step) {
        if (step % c.sample_stride == 0 || step == job.trotter_steps) {
            const double t = dt * static_cast<double>(step);
            series.records.push_back(observables.measure(t, propagator.evolve(state, t)));
        }
    }
    return series;
}

void check_record(const ObservableRecord& r, std::size_t n_atoms, double gamma0) {
    const double scale = static_cast<double>(n_atoms) * gamma0;
    const double gap = std::abs(r.intensity - r.coherence - r.intensity_nc) / scale;
    if (!(gap <= 1e-9)) {
        throw InvariantViolation(
            fmt::format("intensity decomposition off by {:.3e} (normalized) at t = {}", gap, r.time));
    }
    if (!(std::abs(r.norm - 1.0) < 1e-9)) {
        throw InvariantViolation(fmt::format("norm drifted to {:.15f} at t = {}", r.norm, r.time));
    }
}

double max_energy_drift(const TimeSeries& series, std::size_t n_atoms, double gamma0) {
    double worst = 0.0;
    if (series.records.empty()) {
        return worst;
    }
    const double e0 = series.records.front().energy;
    for (const auto& r : series.records) {
        const double d = std::abs(r.energy - e0) / (static_cast<double>(n_atoms) * gamma0);
        if (std::isnan(d)) {
            return kNaN;
        }
        worst = std::max(worst, d);
    }
    return worst;
}

std::string job_file_name(const ScenarioConfig& c, const Job& job) {
    (void)c;
    return fmt::format("{}_na{}_g{}_dr{}_nt{}.csv", to_string(job.backend), job.n_atoms, job.gamma0,
                       job.dr_over_lambda, job.trotter_steps);
}

std::string format_csv(const ScenarioConfig& c, const Job& job, const TimeSeries& series,
                       std::string_view generated_at) {
    std::string out;
    out += "# superrad observables\n";
    out += fmt::format("# generated_at: {}\n", generated_at);
    out += fmt::format("# job: backend={} n_atoms={} gamma0={} dr_over_lambda={} trotter_steps={} reference={}\n",
                       to_string(job.backend), job.n_atoms, job.gamma0, job.dr_over_lambda, job.trotter_steps,
                       job.companion ? "yes" : "no");
    if (job.backend != Backend::Lindblad) {
        out += fmt::format("# system: qubits={} coupling={} lambda0={}\n", system_width(c, job.n_atoms),
                           num(job_coupling(c, job)), num(1.0 / c.atom_freq_center));
    } else {
        out += fmt::format("# system: master_equation=collective_decay atoms={}\n", job.n_atoms);
    }
    out += "# config:\n";
    const std::string cfg = emit_config(c);
    std::size_t start = 0;
    while (start < cfg.size()) {
        const auto nl = cfg.find('\n', start);
        const auto line = std::string_view(cfg).substr(start, nl - start);
        out += line.empty() ? "#\n" : fmt::format("#   {}\n", line);
        start = nl + 1;
    }

    out += "time_lifetimes,backend,n_atoms,gamma0,intensity,intensity_nc,coherence,energy_drift_rel,n_total";
    for (std::size_t k = 0; k < c.mode_count; ++k) {
        out += fmt::format(",n_mode_{}", k);
    }
    for (std::size_t a = 0; a < job.n_atoms; ++a) {
        out += fmt::format(",pop_atom_{}", a);
    }
    out += ",intensity_raw,intensity_nc_raw,coherence_raw,energy,norm\n";

    const double scale = static_cast<double>(job.n_atoms) * job.gamma0;
    const double e0 = series.records.empty() ? 0.0 : series.records.front().energy;
    for (const auto& r : series.records) {
        check_record(r, job.n_atoms, job.gamma0);
        out += fmt::format("{},{},{},{},{},{},{},{},{}", num(r.time), series.backend, job.n_atoms, num(job.gamma0),
                           num(r.intensity / scale), num(r.intensity_nc / scale), num(r.coherence / scale),
                           num(std::abs(r.energy - e0) / scale), num(r.total_occupation));
        for (std::size_t k = 0; k < c.mode_count; ++k) {
            out += ",";
            out += num(k < r.mode_occupation.size() ? r.mode_occupation[k] : kNaN);
        }
        for (double p : r.excited_population) {
            out += ",";
            out += num(p);
        }
        out += fmt::format(",{},{},{},{},{}\n", num(r.intensity), num(r.intensity_nc), num(r.coherence),
                           num(r.energy), num(r.norm));
    }
    return out;
}

const JobResult* ScenarioResult::find(const Job& job) const {
    for (const auto& r : runs) {
        if (r.job == job) {
            return &r;
        }
    }
    return nullptr;
}

std::size_t configured_threads() {
    if (const char* env = std::getenv("SUPERRAD_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<std::size_t>(v);
        }
        throw InvalidArgument(fmt::format("SUPERRAD_THREADS must be a positive integer, got '{}'", env));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ScenarioResult run_scenario(const ScenarioConfig& config, std::size_t threads, bool write) {
    validate(config);
    ScenarioResult result{config, {}, {}};
    for (const auto& job : expand_jobs(config)) {
        result.runs.push_back({job, {}, job_file_name(config, job)});
    }
    // Surface capacity and parameter errors before any evolution starts.
    for (const auto& run : result.runs) {
        if (run.job.backend == Backend::Lindblad) {
            DickeMasterEquation(run.job.n_atoms, run.job.gamma0, config.atom_freq_center);
            continue;
        }
        const auto spec = build_system(config, run.job);
        if (run.job.backend == Backend::Exact && spec.width() > kMaxExactWidth) {
            throw CapacityError(fmt::format("exact backend limited to {} qubits, job needs {}", kMaxExactWidth,
                                            spec.width()),
                                spec.width(), kMaxExactWidth);
        }
    }

    const std::size_t workers = std::min(threads == 0 ? configured_threads() : threads, result.runs.size());
    std::vector<std::exception_ptr> errors(result.runs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < result.runs.size(); i = next++) {
            try {
                result.runs[i].series = run_job(config, result.runs[i].job);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back(work);
        }
        work();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    if (!write) {
        return result;
    }
    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    const std::string stamp = utc_now();
    auto emit = [&](const std::string& name, const std::string& text) {
        write_file(dir / name, text);
        result.files.push_back((dir / name).string());
    };
    for (const auto& run : result.runs) {
        emit(run.file, format_csv(config, run.job, run.series, stamp));
    }
    emit("summary.csv", summary_csv(result));
    if (config.scenario == ScenarioKind::TrotterError) {
        emit("trotter_error.csv", trotter_error_report(result));
    }
    if (auto fit = scaling_fit_csv(result); !fit.empty()) {
        emit("scaling_fit.csv", fit);
    }
    if (auto spatial = spatial_prediction_csv(result); !spatial.empty()) {
        emit("spatial_prediction.csv", spatial);
    }
    return result;
}

std::string trotter_error_report(const ScenarioResult& result) {
    std::string out = "N_T,t,drift\n";
    for (const auto& run : result.runs) {
        if (run.job.backend == Backend::Lindblad || run.series.records.empty()) {
            continue;
        }
        const std::string label =
            run.job.backend == Backend::Exact ? std::string("exact") : fmt::format("{}", run.job.trotter_steps);
        const double scale = static_cast<double>(run.job.n_atoms) * run.job.gamma0;
        const double e0 = run.series.records.front().energy;
        for (const auto& r : run.series.records) {
            out += fmt::format("{},{},{}\n", label, num(r.time), num(std::abs(r.energy - e0) / scale));
        }
    }
    return out;
}

JobSummary summarize(const ScenarioConfig& c, const JobResult& run) {
    JobSummary s;
    s.job = run.job;
    const double scale = static_cast<double>(run.job.n_atoms) * run.job.gamma0;
    if (run.job.backend != Backend::Lindblad) {
        s.qubits = system_width(c, run.job.n_atoms);
        s.coupling = job_coupling(c, run.job);
    } else {
        s.coupling = kNaN;
    }
    const auto peak = peak_intensity(run.series);
    s.peak_intensity = peak.value / scale;
    s.peak_time = peak.time;
    const auto coh = max_coherence(run.series);
    s.max_coherence = coh.value / scale;
    s.max_coherence_time = coh.time;
    try {
        s.t80 = saturation_time(run.series, 0.8, run.job.n_atoms);
    } catch (const NoCrossingError&) {
        s.t80 = kNaN;
    }
    s.final_total_occupation = run.series.records.back().total_occupation;
    s.max_energy_drift = max_energy_drift(run.series, run.job.n_atoms, run.job.gamma0);
    for (const auto& r : run.series.records) {
        s.max_norm_drift = std::max(s.max_norm_drift, std::abs(r.norm - 1.0));
    }
    return s;
}

std::string summary_csv(const ScenarioResult& result) {
    std::string out =
        "backend,reference,n_atoms,gamma0,dr_over_lambda,trotter_steps,qubits,coupling,peak_intensity,peak_time,"
        "max_coherence,max_coherence_time,t80,final_n_total,max_energy_drift_rel,max_norm_drift\n";
    for (const auto& run : result.runs) {
        const auto s = summarize(result.config, run);
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", to_string(s.job.backend),
                           s.job.companion ? 1 : 0, s.job.n_atoms, num(s.job.gamma0), num(s.job.dr_over_lambda),
                           s.job.trotter_steps, s.qubits, num(s.coupling), num(s.peak_intensity), num(s.peak_time),
                           num(s.max_coherence), num(s.max_coherence_time), num(s.t80),
                           num(s.final_total_occupation), num(s.max_energy_drift), num(s.max_norm_drift));
    }
    return out;
}

std::string scaling_fit_csv(const ScenarioResult& result) {
    std::map<std::pair<Backend, double>, std::vector<ScalingPoint>> groups;
    for (const auto& run : result.runs) {
        if (run.job.n_atoms < 2 || run.job.trotter_steps != result.config.trotter_steps.front() ||
            run.job.dr_over_lambda != result.config.dr_over_lambda.front()) {
            continue;
        }
        const auto peak = peak_intensity(run.series);
        groups[{run.job.backend, run.job.gamma0}].push_back(
            {static_cast<double>(run.job.n_atoms), peak.value / run.job.gamma0});
    }
    std::string body;
    for (const auto& [key, points] : groups) {
        if (points.size() < 4) {
            continue;
        }
        const auto fit = fit_peak_scaling(points);
        body += fmt::format("{},{},{},{},{},{},{},{}\n", to_string(key.first), num(key.second), points.size(),
                            num(fit.a), num(fit.b), num(fit.c), num(fit.n), num(fit.residual));
    }
    if (body.empty()) {
        return {};
    }
    return "backend,gamma0,points,a,b,c,n,residual\n" + body;
}

std::string spatial_prediction_csv(const ScenarioResult& result) {
    if (result.config.scenario != ScenarioKind::SpatialDilution && result.config.dr_over_lambda.size() < 2) {
        return {};
    }
    std::string body;
    for (const auto& anchor : result.runs) {
        if (anchor.job.dr_over_lambda != 0.0 || anchor.job.n_atoms < 2 || anchor.job.companion) {
            continue;
        }
        const double scale = static_cast<double>(anchor.job.n_atoms) * anchor.job.gamma0;
        const auto peak = max_coherence(anchor.series);
        const double at_zero = peak.value / scale;
        for (const auto& run : result.runs) {
            const Job& j = run.job;
            if (j.backend != anchor.job.backend || j.n_atoms != anchor.job.n_atoms || j.gamma0 != anchor.job.gamma0 ||
                j.trotter_steps != anchor.job.trotter_steps || j.companion) {
                continue;
            }
            const double sim = run.series.records.at(peak.index).coherence / scale;
            const auto own = max_coherence(run.series);
            const double predicted = predicted_max_coherence(j.dr_over_lambda, 1.0, j.n_atoms, at_zero);
            body += fmt::format("{},{},{},{},{},{},{},{},{}\n", j.n_atoms, num(j.gamma0), num(j.dr_over_lambda),
                                num(peak.time), num(sim), num(predicted), num(std::abs(sim - predicted) / std::abs(at_zero)),
                                num(own.value / scale), num(own.time));
        }
    }
    if (body.empty()) {
        return {};
    }
    return "n_atoms,gamma0,dr_over_lambda,anchor_time,max_coherence,predicted,error_rel_anchor,extremum,extremum_time\n" + body;
}

}  // namespace superrad
