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
#include <string_view>
#include <vector>

#include "superrad/pauli.hpp"

namespace superrad {

/// Default cap on N_A + Σ q_k; SUPERRAD_MAX_QUBITS overrides it.
inline constexpr std::size_t kDefaultMaxQubits = 24;
/// Upper bound for the override (a 2^30 statevector is 16 GiB).
inline constexpr std::size_t kHardMaxQubits = 30;

/// Qubit cap after applying the SUPERRAD_MAX_QUBITS environment override.
std::size_t configured_max_qubits();

/// A two-level emitter. Positions are in natural units (c = 1), so k·r is a phase
/// when k = ω.
struct AtomSpec {
    double frequency = 0.0;
    double position = 0.0;
    double gamma0 = 0.0;
};

/// One discretized bath mode. The wavevector equals the frequency (c = 1).
struct ModeSpec {
    double frequency = 0.0;
    double wavevector = 0.0;
    double coupling = 0.0;
    std::size_t qubits = 1;

    static ModeSpec make(double frequency, double coupling, std::size_t qubits = 1) {
        return {frequency, frequency, coupling, qubits};
    }
};

struct QubitRange {
    std::size_t first = 0;
    std::size_t count = 0;

    bool operator==(const QubitRange&) const = default;
};

/// Atoms take the lowest qubit indices, one each; mode registers follow in
/// mode order (increasing frequency), each contiguous.
struct QubitLayout {
    std::vector<std::size_t> atom_qubits;
    std::vector<QubitRange> mode_registers;
    std::size_t total_qubits = 0;

    static QubitLayout build(std::size_t n_atoms, const std::vector<std::size_t>& mode_qubits);
};

class SystemSpec {
public:
    /// Validates the physical parameters and builds the layout. Throws
    /// InvalidArgument for unphysical input and CapacityError when the qubit
    /// total exceeds `max_qubits`.
    static SystemSpec create(std::vector<AtomSpec> atoms, std::vector<ModeSpec> modes,
                             std::size_t max_qubits = configured_max_qubits());

    const std::vector<AtomSpec>& atoms() const { return atoms_; }
    const std::vector<ModeSpec>& modes() const { return modes_; }
    const QubitLayout& layout() const { return layout_; }

    std::size_t n_atoms() const { return atoms_.size(); }
    std::size_t n_modes() const { return modes_.size(); }
    std::size_t width() const { return layout_.total_qubits; }
    double gamma0() const { return atoms_.front().gamma0; }

private:
    SystemSpec() = default;

    std::vector<AtomSpec> atoms_;
    std::vector<ModeSpec> modes_;
    QubitLayout layout_;
};

/// How the single-atom decay rate fixes the uniform coupling for a comb of
/// modes with spacing δ.
enum class CouplingConvention {
    /// Γ₀ = 2π g² δ, i.e. g = √(Γ₀ / 2πδ).
    G2TimesDelta,
    /// Γ₀ = 2π g² / δ, i.e. g = √(Γ₀ δ / 2π): Fermi's golden rule with density
    /// of states 1/δ.
    G2OverDelta,
};

/// The convention that reproduces e^{-Γ₀t} single-atom decay in simulation.
inline constexpr CouplingConvention kDefaultCouplingConvention = CouplingConvention::G2OverDelta;

std::string_view to_string(CouplingConvention c);
CouplingConvention parse_coupling_convention(std::string_view name);

double coupling_from_gamma(double gamma0, double mode_spacing,
                           CouplingConvention convention = kDefaultCouplingConvention);

/// `count` evenly spaced frequencies covering [center - width/2, center + width/2].
/// A single mode sits at the center.
std::vector<double> standard_mode_window(double center, double width, std::size_t count);

/// Spacing of a standard window; a lone mode is assigned the full width.
double window_spacing(double width, std::size_t count);

/// H₀ = -½ Σ_α ω_α Z_α + Σ_k ω_k n_k, with n_k the encoded number operator on
/// mode k's register (½(I - Z) for a single qubit). Diagonal.
PauliSum build_h0(const SystemSpec& spec);

/// One Hermitian sum per (atom, mode) pair, atoms outer and modes inner:
///
///     -i g_k (σ⁺_α + σ⁻_α)(e^{-i k r_α} a†_k - e^{i k r_α} a_k)
///
/// which on a one-qubit register is -g_k [cos(k r_α) X_α Y_k + sin(k r_α) X_α X_k].
/// Throws ConstructionError if an assembled term is not Hermitian.
std::vector<PauliSum> build_hint(const SystemSpec& spec);

struct HamiltonianParts {
    PauliSum h0;
    std::vector<PauliSum> hint_terms;
    PauliSum total;
};

HamiltonianParts build_total(const SystemSpec& spec);

}  // namespace superrad
