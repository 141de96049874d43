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

#include "superrad/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "superrad/errors.hpp"

namespace superrad {

double saturation_time(std::span<const double> times, std::span<const double> values, double target_fraction,
                       std::size_t n_atoms) {
    if (times.size() != values.size() || times.empty()) {
        throw InvalidArgument("saturation_time: times and values must be non-empty and equally long");
    }
    const double target = target_fraction * static_cast<double>(n_atoms);
    if (values[0] >= target) {
        return times[0];
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] >= target) {
            const double f = (target - values[i - 1]) / (values[i] - values[i - 1]);
            return times[i - 1] + f * (times[i] - times[i - 1]);
        }
    }
    const double best = *std::max_element(values.begin(), values.end());
    throw NoCrossingError(
        fmt::format("occupation never reaches {} (maximum {:.6g}) for {} atoms", target, best, n_atoms));
}

double saturation_time(const TimeSeries& series, double target_fraction, std::size_t n_atoms) {
    std::vector<double> t;
    std::vector<double> n;
    for (const auto& r : series.records) {
        t.push_back(r.time);
        n.push_back(r.total_occupation);
    }
    return saturation_time(t, n, target_fraction, n_atoms);
}

double FitResult::operator()(double x) const {
    if (flat) {
        return c;
    }
    return a * std::pow(x - b, n) + c;
}

namespace {

struct LinearFit {
    double a;
    double c;
    double residual;
};

LinearFit solve_linear(std::span<const ScalingPoint> pts, double n, double b) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(pts.size());
    std::vector<double> xs;
    xs.reserve(pts.size());
    for (const auto& p : pts) {
        const double x = std::pow(p.n_atoms - b, n);
        xs.push_back(x);
        sx += x;
        sy += p.value;
        sxx += x * x;
        sxy += x * p.value;
    }
    const double det = m * sxx - sx * sx;
    if (!(std::abs(det) > 1e-300) || !std::isfinite(det)) {
        return {0.0, 0.0, std::numeric_limits<double>::infinity()};
    }
    const double a = (m * sxy - sx * sy) / det;
    const double c = (sy - a * sx) / m;
    double r = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = a * xs[i] + c - pts[i].value;
        r += d * d;
    }
    return {a, c, r};
}

}  // namespace

FitResult fit_peak_scaling(std::span<const ScalingPoint> points) {
    if (points.size() < 4) {
        throw InvalidArgument(fmt::format("fit_peak_scaling needs at least 4 points, got {}", points.size()));
    }
    double min_x = std::numeric_limits<double>::infinity();
    bool flat = true;
    for (const auto& p : points) {
        if (!std::isfinite(p.n_atoms) || !std::isfinite(p.value)) {
            throw InvalidArgument("fit_peak_scaling: non-finite point");
        }
        min_x = std::min(min_x, p.n_atoms);
        flat = flat && p.value == points.front().value;
    }
    if (flat) {
        FitResult r;
        r.c = points.front().value;
        r.flat = true;
        return r;
    }

    constexpr double n_lo = 0.25;
    constexpr double n_hi = 5.0;
    const double b_lo = min_x - 6.0;
    const double b_hi = min_x - 1e-3;

    FitResult best;
    best.residual = std::numeric_limits<double>::infinity();
    auto scan = [&](double n0, double n1, double b0, double b1, int steps) {
        for (int i = 0; i <= steps; ++i) {
            const double n = n0 + (n1 - n0) * i / steps;
            for (int j = 0; j <= steps; ++j) {
                const double b = b0 + (b1 - b0) * j / steps;
                const auto lin = solve_linear(points, n, b);
                if (lin.residual < best.residual) {
                    best = {lin.a, b, lin.c, n, lin.residual, false};
                }
            }
        }
    };

    scan(n_lo, n_hi, b_lo, b_hi, 120);
    double dn = (n_hi - n_lo) / 120.0;
    double db = (b_hi - b_lo) / 120.0;
    for (int round = 0; round < 40; ++round) {
        const double n0 = std::max(n_lo, best.n - 2 * dn);
        const double n1 = std::min(n_hi, best.n + 2 * dn);
        const double b0 = std::max(b_lo, best.b - 2 * db);
        const double b1 = std::min(b_hi, best.b + 2 * db);
        scan(n0, n1, b0, b1, 16);
        dn /= 4.0;
        db /= 4.0;
    }
    if (!std::isfinite(best.n) || !std::isfinite(best.residual)) {
        throw InvalidArgument("fit_peak_scaling: no finite fit");
    }
    best.residual = std::max(best.residual, 0.0);
    return best;
}

double predicted_max_coherence(double dr, double lambda0, std::size_t n_atoms, double max_at_zero) {
    if (n_atoms < 2) {
        throw InvalidArgument("predicted_max_coherence needs at least two atoms");
    }
    if (!(dr >= 0.0) || !(lambda0 > 0.0)) {
        throw InvalidArgument(fmt::format("predicted_max_coherence: need dr >= 0 and lambda0 > 0 (dr={}, lambda0={})",
                                          dr, lambda0));
    }
    double weight = 0.0;
    double sum = 0.0;
    for (std::size_t n = 1; n < n_atoms; ++n) {
        const double w = static_cast<double>(n_atoms - n);
        weight += w;
        sum += w * std::cos(static_cast<double>(n) * dr / lambda0);
    }
    return max_at_zero * sum / weight;
}

Extremum peak_intensity(const TimeSeries& series) {
    if (series.records.empty()) {
        throw InvalidArgument("peak_intensity: empty series");
    }
    Extremum e{series.records[0].time, series.records[0].intensity, 0};
    for (std::size_t i = 1; i < series.records.size(); ++i) {
        if (series.records[i].intensity > e.value) {
            e = {series.records[i].time, series.records[i].intensity, i};
        }
    }
    return e;
}

Extremum max_coherence(const TimeSeries& series) {
    if (series.records.empty()) {
        throw InvalidArgument("max_coherence: empty series");
    }
    Extremum e{series.records[0].time, series.records[0].coherence, 0};
    for (std::size_t i = 1; i < series.records.size(); ++i) {
        if (std::abs(series.records[i].coherence) > std::abs(e.value)) {
            e = {series.records[i].time, series.records[i].coherence, i};
        }
    }
    return e;
}

}  // namespace superrad
