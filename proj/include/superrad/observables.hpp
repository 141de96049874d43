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
#include <vector>

#include "superrad/hamiltonian.hpp"
#include "superrad/pauli.hpp"
#include "superrad/statevector.hpp"

namespace superrad {

/// ⟨ψ|op|ψ⟩ evaluated term by term on the amplitudes (no dense operator).
Complex expectation(const StateVector& state, const PauliSum& op);

/// ⟨n_k⟩ for mode k, through the encoded number operator on its register.
double mode_occupation(const StateVector& state, const QubitLayout& layout, std::size_t mode);
double total_occupation(const StateVector& state, const QubitLayout& layout);

/// ⟨σ⁺_α σ⁻_α⟩, the probability that atom α is excited.
double excited_population(const StateVector& state, const QubitLayout& layout, std::size_t atom);

/// S⁺S⁻ = Σ_{αβ} σ⁺_α σ⁻_β on the atom qubits of a width-`layout.total_qubits` register.
PauliSum collective_emission_operator(const QubitLayout& layout);
/// Σ_{α≠β} σ⁺_α σ⁻_β.
PauliSum cross_emission_operator(const QubitLayout& layout);
/// Σ_α σ⁺_α σ⁻_α.
PauliSum independent_emission_operator(const QubitLayout& layout);

/// Γ₀⟨S⁺S⁻⟩.
double intensity(const StateVector& state, const SystemSpec& spec);
/// Γ₀ Σ_α ⟨σ⁺_α σ⁻_α⟩.
double intensity_noncoherent(const StateVector& state, const SystemSpec& spec);
/// Γ₀ Σ_{α≠β} ⟨σ⁺_α σ⁻_β⟩; negative for subradiant correlations.
double coherence(const StateVector& state, const SystemSpec& spec);

double energy(const StateVector& state, const PauliSum& h_total);

/// Everything sampled along a trajectory. `time` is in units of 1/Γ₀.
struct ObservableRecord {
    double time = 0.0;
    double intensity = 0.0;
    double intensity_nc = 0.0;
    double coherence = 0.0;
    double energy = 0.0;
    double norm = 1.0;
    double total_occupation = 0.0;
    std::vector<double> mode_occupation;
    std::vector<double> excited_population;
};

/// A sampled trajectory from one backend ("trotter", "exact" or "lindblad").
struct TimeSeries {
    std::string backend;
    std::vector<ObservableRecord> records;
};

/// Operators assembled once per system and reused for every sample.
class ObservableSet {
public:
    ObservableSet(const SystemSpec& spec, PauliSum h_total);

    /// `t` is the raw simulation time; the record stores t·Γ₀.
    ObservableRecord measure(double t, const StateVector& state) const;

private:
    double gamma0_;
    std::size_t width_;
    PauliSum emission_;
    PauliSum cross_;
    PauliSum h_total_;
    std::vector<PauliSum> mode_numbers_;
    std::vector<PauliSum> atom_populations_;
};

}  // namespace superrad
