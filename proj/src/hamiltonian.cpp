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

#include "superrad/hamiltonian.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "superrad/boson_encoding.hpp"
#include "superrad/errors.hpp"

namespace superrad {

std::size_t configured_max_qubits() {
    const char* env = std::getenv("SUPERRAD_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxQubits;
    }
    const std::string_view text(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw InvalidArgument(fmt::format("SUPERRAD_MAX_QUBITS must be a positive integer, got '{}'", text));
    }
    if (value > kHardMaxQubits) {
        throw CapacityError(fmt::format("SUPERRAD_MAX_QUBITS={} exceeds the hard limit {}", value, kHardMaxQubits),
                            value, kHardMaxQubits);
    }
    return value;
}

QubitLayout QubitLayout::build(std::size_t n_atoms, const std::vector<std::size_t>& mode_qubits) {
    QubitLayout layout;
    for (std::size_t a = 0; a < n_atoms; ++a) {
        layout.atom_qubits.push_back(a);
    }
    std::size_t next = n_atoms;
    for (const std::size_t q : mode_qubits) {
        if (q == 0) {
            throw InvalidArgument("every mode needs at least one qubit");
        }
        layout.mode_registers.push_back({next, q});
        next += q;
    }
    layout.total_qubits = next;
    return layout;
}

SystemSpec SystemSpec::create(std::vector<AtomSpec> atoms, std::vector<ModeSpec> modes, std::size_t max_qubits) {
    if (atoms.empty()) {
        throw InvalidArgument("a system needs at least one atom");
    }
    const double gamma0 = atoms.front().gamma0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        const auto& atom = atoms[a];
        if (!(atom.frequency > 0.0) || !std::isfinite(atom.frequency)) {
            throw InvalidArgument(fmt::format("atom {}: frequency must be positive, got {}", a, atom.frequency));
        }
        if (!(atom.gamma0 > 0.0) || !std::isfinite(atom.gamma0)) {
            throw InvalidArgument(fmt::format("atom {}: gamma0 must be positive, got {}", a, atom.gamma0));
        }
        if (atom.gamma0 != gamma0) {
            throw InvalidArgument(fmt::format("atom {}: all atoms must share gamma0 ({} vs {})", a, atom.gamma0,
                                              gamma0));
        }
        if (!std::isfinite(atom.position)) {
            throw InvalidArgument(fmt::format("atom {}: position must be finite", a));
        }
    }
    std::vector<std::size_t> mode_qubits;
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const auto& mode = modes[k];
        if (!(mode.frequency > 0.0) || !std::isfinite(mode.frequency)) {
            throw InvalidArgument(fmt::format("mode {}: frequency must be positive, got {}", k, mode.frequency));
        }
        if (mode.wavevector != mode.frequency) {
            throw InvalidArgument(fmt::format("mode {}: wavevector {} must equal frequency {} (c = 1)", k,
                                              mode.wavevector, mode.frequency));
        }
        if (!std::isfinite(mode.coupling)) {
            throw InvalidArgument(fmt::format("mode {}: coupling must be finite", k));
        }
        if (mode.qubits == 0) {
            throw InvalidArgument(fmt::format("mode {}: needs at least one qubit", k));
        }
        if (mode.qubits > kMaxModeQubits) {
            throw CapacityError(fmt::format("mode {}: {} qubits exceeds {}", k, mode.qubits, kMaxModeQubits),
                                mode.qubits, kMaxModeQubits);
        }
        if (k > 0 && !(mode.frequency > modes[k - 1].frequency)) {
            throw InvalidArgument(fmt::format("mode frequencies must be strictly increasing (mode {}: {} after {})",
                                              k, mode.frequency, modes[k - 1].frequency));
        }
        mode_qubits.push_back(mode.qubits);
    }

    SystemSpec spec;
    spec.layout_ = QubitLayout::build(atoms.size(), mode_qubits);
    if (spec.layout_.total_qubits > max_qubits) {
        throw CapacityError(fmt::format("system needs {} qubits, cap is {}", spec.layout_.total_qubits, max_qubits),
                            spec.layout_.total_qubits, max_qubits);
    }
    spec.atoms_ = std::move(atoms);
    spec.modes_ = std::move(modes);
    return spec;
}

std::string_view to_string(CouplingConvention c) {
    switch (c) {
        case CouplingConvention::G2TimesDelta: return "g2_times_delta";
        case CouplingConvention::G2OverDelta: return "g2_over_delta";
    }
    return "?";
}

CouplingConvention parse_coupling_convention(std::string_view name) {
    if (name == "g2_times_delta") {
        return CouplingConvention::G2TimesDelta;
    }
    if (name == "g2_over_delta") {
        return CouplingConvention::G2OverDelta;
    }
    throw InvalidArgument(fmt::format("unknown coupling convention '{}'", name));
}

double coupling_from_gamma(double gamma0, double mode_spacing, CouplingConvention convention) {
    if (!(gamma0 > 0.0) || !(mode_spacing > 0.0)) {
        throw InvalidArgument(
            fmt::format("coupling_from_gamma needs positive inputs (gamma0={}, spacing={})", gamma0, mode_spacing));
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    switch (convention) {
        case CouplingConvention::G2TimesDelta: return std::sqrt(gamma0 / (two_pi * mode_spacing));
        case CouplingConvention::G2OverDelta: return std::sqrt(gamma0 * mode_spacing / two_pi);
    }
    return 0.0;
}

std::vector<double> standard_mode_window(double center, double width, std::size_t count) {
    if (count < 1) {
        throw InvalidArgument("mode window needs at least one mode");
    }
    if (!(width > 0.0)) {
        throw InvalidArgument(fmt::format("mode window width must be positive, got {}", width));
    }
    if (count == 1) {
        return {center};
    }
    std::vector<double> out(count);
    const double step = width / static_cast<double>(count - 1);
    const double lo = center - 0.5 * width;
    const double mid = 0.5 * static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
        // Exact center for the middle mode of an odd window.
        out[k] = static_cast<double>(k) == mid ? center : lo + step * static_cast<double>(k);
    }
    return out;
}

double window_spacing(double width, std::size_t count) {
    if (count < 1 || !(width > 0.0)) {
        throw InvalidArgument("window_spacing needs count >= 1 and width > 0");
    }
    return count == 1 ? width : width / static_cast<double>(count - 1);
}

PauliSum build_h0(const SystemSpec& spec) {
    const std::size_t n = spec.width();
    const auto& layout = spec.layout();
    PauliSum h0(n);
    for (std::size_t a = 0; a < spec.n_atoms(); ++a) {
        h0 += PauliSum::from_letters("Z", -0.5 * spec.atoms()[a].frequency).embedded(n, layout.atom_qubits[a]);
    }
    for (std::size_t k = 0; k < spec.n_modes(); ++k) {
        const auto& reg = layout.mode_registers[k];
        h0 += boson_operators(reg.count).number.embedded(n, reg.first) * spec.modes()[k].frequency;
    }
    return h0.simplified();
}

std::vector<PauliSum> build_hint(const SystemSpec& spec) {
    const std::size_t n = spec.width();
    const auto& layout = spec.layout();
    const Complex i{0.0, 1.0};
    std::vector<PauliSum> out;
    out.reserve(spec.n_atoms() * spec.n_modes());
    for (std::size_t a = 0; a < spec.n_atoms(); ++a) {
        // σ⁺ + σ⁻ = X on the atom qubit.
        const PauliSum x_atom = PauliSum::from_letters("X").embedded(n, layout.atom_qubits[a]);
        for (std::size_t k = 0; k < spec.n_modes(); ++k) {
            const auto& mode = spec.modes()[k];
            const auto& reg = layout.mode_registers[k];
            const auto& ops = boson_operators(reg.count);
            const double phase = mode.wavevector * spec.atoms()[a].position;
            const Complex e_minus = std::polar(1.0, -phase);
            const PauliSum field = ops.creation.embedded(n, reg.first) * e_minus -
                                   ops.annihilation.embedded(n, reg.first) * std::conj(e_minus);
            const PauliSum term = multiply(x_atom, field) * (-i * mode.coupling);
            const double scale = std::max(1.0, std::abs(mode.coupling));
            if (!term.is_hermitian(1e-12 * scale)) {
                throw ConstructionError(fmt::format("interaction term (atom {}, mode {}) is not Hermitian", a, k));
            }
            out.push_back(term.real_part().simplified());
        }
    }
    return out;
}

HamiltonianParts build_total(const SystemSpec& spec) {
    HamiltonianParts parts{build_h0(spec), build_hint(spec), PauliSum(spec.width())};
    parts.total = parts.h0;
    for (const auto& term : parts.hint_terms) {
        parts.total += term;
    }
    parts.total = parts.total.simplified();
    if (!parts.total.is_hermitian()) {
        throw ConstructionError("assembled Hamiltonian is not Hermitian");
    }
    return parts;
}

}  // namespace superrad
