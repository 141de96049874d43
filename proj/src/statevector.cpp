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

#include "superrad/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "superrad/errors.hpp"

namespace superrad {

namespace {

void require_width(std::size_t state, std::size_t op, const char* what) {
    if (state != op) {
        throw InvalidArgument(fmt::format("{}: state has {} qubits, operator has {}", what, state, op));
    }
}

int letter_rank(char c) {
    switch (c) {
        case 'Y': return 0;
        case 'X': return 1;
        case 'Z': return 2;
        default: return 3;
    }
}

bool schedule_order(const PauliTerm& a, const PauliTerm& b) {
    const std::string la = a.string.letters();
    const std::string lb = b.string.letters();
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end(),
                                        [](char x, char y) { return letter_rank(x) < letter_rank(y); });
}

// exp(-i angle P) on the amplitudes; `string` is not diagonal.
void rotate_pairs(std::span<Complex> amps, const PauliString& string, double angle) {
    const std::uint64_t x = string.x_mask();
    const std::uint64_t z = string.z_mask();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    // -i sin θ · i^{#Y}
    const Complex rot = Complex{0.0, -s} * string.phase_on(0);
    const double rr = rot.real();
    const double ri = rot.imag();
    const unsigned pivot = static_cast<unsigned>(std::bit_width(x) - 1);
    const std::uint64_t low = (std::uint64_t{1} << pivot) - 1;
    const std::uint64_t half = amps.size() / 2;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t b = ((i & ~low) << 1) | (i & low);
        const std::uint64_t b2 = b ^ x;
        // P|b2⟩ = i^{#Y} (-1)^{|b2 & z|} |b⟩ and likewise with b, b2 swapped.
        const double sign_b2 = (std::popcount(b2 & z) & 1) ? -1.0 : 1.0;
        const double sign_b = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
        const Complex u = amps[b];
        const Complex v = amps[b2];
        const double vr = sign_b2 * v.real();
        const double vi = sign_b2 * v.imag();
        const double ur = sign_b * u.real();
        const double ui = sign_b * u.imag();
        amps[b] = {c * u.real() + rr * vr - ri * vi, c * u.imag() + rr * vi + ri * vr};
        amps[b2] = {c * v.real() + rr * ur - ri * ui, c * v.imag() + rr * ui + ri * ur};
    }
}

void rotate_diagonal(std::span<Complex> amps, const PauliString& string, double angle) {
    const std::uint64_t z = string.z_mask();
    const Complex plus = std::polar(1.0, -angle);
    const Complex minus = std::conj(plus);
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        amps[b] *= (std::popcount(b & z) & 1) ? minus : plus;
    }
}

}  // namespace

StateVector::StateVector(std::size_t qubits) : qubits_(qubits) {
    if (qubits > kHardMaxQubits) {
        throw CapacityError(fmt::format("statevector of {} qubits exceeds {}", qubits, kHardMaxQubits), qubits,
                            kHardMaxQubits);
    }
    amplitudes_.assign(std::size_t{1} << qubits, Complex{});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t qubits, std::uint64_t index) {
    StateVector s(qubits);
    if (index >= s.dimension()) {
        throw InvalidArgument(fmt::format("basis index {} out of range for {} qubits", index, qubits));
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw InvalidArgument(fmt::format("amplitude count {} is not a power of two", amplitudes.size()));
    }
    StateVector s;
    s.qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

DenseVector StateVector::to_dense() const {
    return Eigen::Map<const DenseVector>(amplitudes_.data(), static_cast<Eigen::Index>(amplitudes_.size()));
}

StateVector StateVector::from_dense(const DenseVector& v) {
    return from_amplitudes(std::vector<Complex>(v.data(), v.data() + v.size()));
}

StateVector init_state(const QubitLayout& layout) {
    std::uint64_t index = 0;
    for (const std::size_t q : layout.atom_qubits) {
        index |= std::uint64_t{1} << (layout.total_qubits - 1 - q);
    }
    return StateVector::basis(layout.total_qubits, index);
}

void apply_pauli_exponential(StateVector& state, const PauliTerm& term, double duration) {
    require_width(state.qubit_count(), term.string.width(), "apply_pauli_exponential");
    if (std::abs(term.coefficient.imag()) > 1e-12 * std::max(1.0, std::abs(term.coefficient))) {
        throw InvalidArgument(fmt::format("exponential of non-Hermitian term {} ({}{:+}i)", term.string.letters(),
                                          term.coefficient.real(), term.coefficient.imag()));
    }
    const double angle = term.coefficient.real() * duration;
    if (term.string.is_diagonal()) {
        rotate_diagonal(state.amplitudes(), term.string, angle);
    } else {
        rotate_pairs(state.amplitudes(), term.string, angle);
    }
}

std::vector<double> diagonal_values(const PauliSum& diagonal) {
    if (!diagonal.is_diagonal()) {
        throw InvalidArgument("diagonal_values: sum contains X or Y letters");
    }
    if (diagonal.width() > kHardMaxQubits) {
        throw CapacityError("diagonal_values: width too large", diagonal.width(), kHardMaxQubits);
    }
    std::vector<double> out(std::size_t{1} << diagonal.width(), 0.0);
    for (const auto& term : diagonal.terms()) {
        const double c = term.coefficient.real();
        const std::uint64_t z = term.string.z_mask();
        for (std::uint64_t b = 0; b < out.size(); ++b) {
            out[b] += (std::popcount(b & z) & 1) ? -c : c;
        }
    }
    return out;
}

TrotterPlan make_trotter_plan(const HamiltonianParts& parts, double total_time, std::size_t step_count) {
    if (!(total_time >= 0.0) || !std::isfinite(total_time)) {
        throw InvalidArgument(fmt::format("total time must be finite and non-negative, got {}", total_time));
    }
    if (step_count == 0 && total_time > 0.0) {
        throw InvalidArgument("a positive evolution time needs at least one Trotter step");
    }
    if (!parts.h0.is_hermitian()) {
        throw InvalidArgument("H0 must be Hermitian");
    }
    TrotterPlan plan;
    plan.step_count = step_count;
    plan.delta_t = step_count == 0 ? 0.0 : total_time / static_cast<double>(step_count);
    plan.width = parts.h0.width();
    const std::vector<double> energies = diagonal_values(parts.h0);
    plan.diagonal_phases.resize(energies.size());
    for (std::size_t b = 0; b < energies.size(); ++b) {
        plan.diagonal_phases[b] = std::polar(1.0, -energies[b] * plan.delta_t);
    }
    for (const auto& pair : parts.hint_terms) {
        if (pair.width() != plan.width) {
            throw InvalidArgument("interaction term width differs from H0");
        }
        if (!pair.is_hermitian()) {
            throw InvalidArgument("interaction terms must be Hermitian");
        }
        auto terms = pair.terms();
        std::stable_sort(terms.begin(), terms.end(), schedule_order);
        for (const auto& t : terms) {
            if (t.string.is_identity()) {
                continue;  // global phase
            }
            plan.schedule.push_back({t.string, t.coefficient.real() * plan.delta_t});
        }
    }
    return plan;
}

void trotter_step(StateVector& state, const TrotterPlan& plan) {
    require_width(state.qubit_count(), plan.width, "trotter_step");
    auto amps = state.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        amps[b] *= plan.diagonal_phases[b];
    }
    for (const auto& e : plan.schedule) {
        if (e.string.is_diagonal()) {
            rotate_diagonal(amps, e.string, e.angle);
        } else {
            rotate_pairs(amps, e.string, e.angle);
        }
    }
}

ExactPropagator::ExactPropagator(const DenseMatrix& hamiltonian) {
    if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0 ||
        !std::has_single_bit(static_cast<std::uint64_t>(hamiltonian.rows()))) {
        throw InvalidArgument("exact evolution needs a square 2^n Hamiltonian");
    }
    const auto width = static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(hamiltonian.rows())));
    if (width > kMaxExactWidth) {
        throw CapacityError(fmt::format("exact evolution of width {} exceeds {}", width, kMaxExactWidth), width,
                            kMaxExactWidth);
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(hamiltonian);
    if (solver.info() != Eigen::Success) {
        throw ConstructionError("eigendecomposition of the Hamiltonian failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

StateVector ExactPropagator::evolve(const StateVector& state, double t) const {
    if (static_cast<Eigen::Index>(state.dimension()) != eigenvectors_.rows()) {
        throw InvalidArgument("exact evolution: state dimension differs from Hamiltonian");
    }
    DenseVector coeffs = eigenvectors_.adjoint() * state.to_dense();
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs[k] *= std::polar(1.0, -eigenvalues_[k] * t);
    }
    return StateVector::from_dense(eigenvectors_ * coeffs);
}

StateVector exact_evolve(const DenseMatrix& hamiltonian, const StateVector& state, double t) {
    return ExactPropagator(hamiltonian).evolve(state, t);
}

}  // namespace superrad
