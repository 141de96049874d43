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

#include "superrad/observables.hpp"

#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "superrad/boson_encoding.hpp"
#include "superrad/errors.hpp"

namespace superrad {

namespace {

const Complex kI{0.0, 1.0};

// Σ_b |ψ_b|² (-1)^{|b & z|}
double diagonal_expectation(std::span<const double> probabilities, std::uint64_t z) {
    double sum = 0.0;
    for (std::uint64_t b = 0; b < probabilities.size(); ++b) {
        sum += (std::popcount(b & z) & 1) ? -probabilities[b] : probabilities[b];
    }
    return sum;
}

// ⟨ψ|P|ψ⟩ = Σ_b conj(ψ_{b^x}) i^{#Y} (-1)^{|b & z|} ψ_b
Complex string_expectation(std::span<const Complex> amps, const PauliString& p) {
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    double re = 0.0;
    double im = 0.0;
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        const Complex prod = std::conj(amps[b ^ x]) * amps[b];
        if (std::popcount(b & z) & 1) {
            re -= prod.real();
            im -= prod.imag();
        } else {
            re += prod.real();
            im += prod.imag();
        }
    }
    return p.phase_on(0) * Complex{re, im};
}

Complex expectation_with(std::span<const Complex> amps, std::span<const double> probabilities, const PauliSum& op) {
    Complex sum{};
    for (const auto& term : op.terms()) {
        if (term.string.is_diagonal()) {
            sum += term.coefficient * diagonal_expectation(probabilities, term.string.z_mask());
        } else {
            sum += term.coefficient * string_expectation(amps, term.string);
        }
    }
    return sum;
}

std::vector<double> probabilities_of(const StateVector& state) {
    std::vector<double> p(state.dimension());
    for (std::size_t b = 0; b < p.size(); ++b) {
        p[b] = std::norm(state[b]);
    }
    return p;
}

void require_width(const StateVector& state, std::size_t width) {
    if (state.qubit_count() != width) {
        throw InvalidArgument(
            fmt::format("state has {} qubits, operator expects {}", state.qubit_count(), width));
    }
}

PauliSum sigma_plus(std::size_t width, std::size_t qubit) {
    return (PauliSum::from_letters("X", 0.5) + PauliSum::from_letters("Y", -0.5 * kI)).embedded(width, qubit);
}

PauliSum sigma_minus(std::size_t width, std::size_t qubit) {
    return (PauliSum::from_letters("X", 0.5) + PauliSum::from_letters("Y", 0.5 * kI)).embedded(width, qubit);
}

PauliSum emission_sum(const QubitLayout& layout, bool diagonal_pairs, bool cross_pairs) {
    const std::size_t n = layout.total_qubits;
    PauliSum out(n);
    for (const std::size_t a : layout.atom_qubits) {
        for (const std::size_t b : layout.atom_qubits) {
            if ((a == b && diagonal_pairs) || (a != b && cross_pairs)) {
                out += multiply(sigma_plus(n, a), sigma_minus(n, b));
            }
        }
    }
    return out.simplified();
}

PauliSum mode_number(const QubitLayout& layout, std::size_t mode) {
    if (mode >= layout.mode_registers.size()) {
        throw InvalidArgument(fmt::format("mode index {} out of range ({} modes)", mode, layout.mode_registers.size()));
    }
    const auto& reg = layout.mode_registers[mode];
    return boson_operators(reg.count).number.embedded(layout.total_qubits, reg.first);
}

PauliSum atom_population(const QubitLayout& layout, std::size_t atom) {
    if (atom >= layout.atom_qubits.size()) {
        throw InvalidArgument(fmt::format("atom index {} out of range ({} atoms)", atom, layout.atom_qubits.size()));
    }
    return (PauliSum::from_letters("I", 0.5) + PauliSum::from_letters("Z", -0.5))
        .embedded(layout.total_qubits, layout.atom_qubits[atom]);
}

}  // namespace

Complex expectation(const StateVector& state, const PauliSum& op) {
    require_width(state, op.width());
    const auto p = probabilities_of(state);
    return expectation_with(state.amplitudes(), p, op);
}

double mode_occupation(const StateVector& state, const QubitLayout& layout, std::size_t mode) {
    return expectation(state, mode_number(layout, mode)).real();
}

double total_occupation(const StateVector& state, const QubitLayout& layout) {
    double sum = 0.0;
    for (std::size_t k = 0; k < layout.mode_registers.size(); ++k) {
        sum += mode_occupation(state, layout, k);
    }
    return sum;
}

double excited_population(const StateVector& state, const QubitLayout& layout, std::size_t atom) {
    return expectation(state, atom_population(layout, atom)).real();
}

PauliSum collective_emission_operator(const QubitLayout& layout) { return emission_sum(layout, true, true); }
PauliSum cross_emission_operator(const QubitLayout& layout) { return emission_sum(layout, false, true); }
PauliSum independent_emission_operator(const QubitLayout& layout) { return emission_sum(layout, true, false); }

double intensity(const StateVector& state, const SystemSpec& spec) {
    return spec.gamma0() * expectation(state, collective_emission_operator(spec.layout())).real();
}

double intensity_noncoherent(const StateVector& state, const SystemSpec& spec) {
    return spec.gamma0() * expectation(state, independent_emission_operator(spec.layout())).real();
}

double coherence(const StateVector& state, const SystemSpec& spec) {
    return spec.gamma0() * expectation(state, cross_emission_operator(spec.layout())).real();
}

double energy(const StateVector& state, const PauliSum& h_total) { return expectation(state, h_total).real(); }

ObservableSet::ObservableSet(const SystemSpec& spec, PauliSum h_total)
    : gamma0_(spec.gamma0()),
      width_(spec.width()),
      emission_(collective_emission_operator(spec.layout())),
      cross_(cross_emission_operator(spec.layout())),
      h_total_(std::move(h_total)) {
    if (h_total_.width() != width_) {
        throw InvalidArgument("ObservableSet: Hamiltonian width differs from the system");
    }
    for (std::size_t k = 0; k < spec.n_modes(); ++k) {
        mode_numbers_.push_back(mode_number(spec.layout(), k));
    }
    for (std::size_t a = 0; a < spec.n_atoms(); ++a) {
        atom_populations_.push_back(atom_population(spec.layout(), a));
    }
}

ObservableRecord ObservableSet::measure(double t, const StateVector& state) const {
    require_width(state, width_);
    const auto p = probabilities_of(state);
    const auto amps = state.amplitudes();
    ObservableRecord r;
    r.time = t * gamma0_;
    double norm2 = 0.0;
    for (const double v : p) {
        norm2 += v;
    }
    r.norm = std::sqrt(norm2);
    r.intensity = gamma0_ * expectation_with(amps, p, emission_).real();
    r.coherence = gamma0_ * expectation_with(amps, p, cross_).real();
    r.energy = expectation_with(amps, p, h_total_).real();
    double nc = 0.0;
    for (const auto& op : atom_populations_) {
        const double pop = expectation_with(amps, p, op).real();
        r.excited_population.push_back(pop);
        nc += pop;
    }
    r.intensity_nc = gamma0_ * nc;
    for (const auto& op : mode_numbers_) {
        const double n = expectation_with(amps, p, op).real();
        r.mode_occupation.push_back(n);
        r.total_occupation += n;
    }
    return r;
}

}  // namespace superrad
