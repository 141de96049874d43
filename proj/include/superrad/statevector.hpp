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
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "superrad/dense.hpp"
#include "superrad/errors.hpp"
#include "superrad/hamiltonian.hpp"
#include "superrad/pauli.hpp"

namespace superrad {

/// Dense amplitudes over 2^n computational basis states. Qubit 0 is the most
/// significant bit of the basis index (see PauliString).
class StateVector {
public:
    /// |0…0⟩ on `qubits` qubits.
    explicit StateVector(std::size_t qubits);

    static StateVector basis(std::size_t qubits, std::uint64_t index);
    /// Takes amplitudes as given; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t qubit_count() const { return qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    Complex& operator[](std::size_t i) { return amplitudes_[i]; }

    double norm() const;

    DenseVector to_dense() const;
    static StateVector from_dense(const DenseVector& v);

private:
    StateVector() = default;

    std::size_t qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// All atoms excited (|1⟩), every mode register in the vacuum.
StateVector init_state(const QubitLayout& layout);

/// state ← exp(-i·c·duration·P)·state for a term c·P with real c, applied as the
/// exact rotation cos θ - i sin θ P. Throws InvalidArgument for complex c or a
/// width mismatch.
void apply_pauli_exponential(StateVector& state, const PauliTerm& term, double duration);

/// Per-basis-state values of a diagonal (I/Z only) sum.
std::vector<double> diagonal_values(const PauliSum& diagonal);

struct ScheduledExponential {
    PauliString string;
    /// The factor applied is exp(-i·angle·string).
    double angle = 0.0;
};

/// One first-order step is exp(-i H₀ δt) as per-amplitude phases, followed by
/// the schedule in order.
struct TrotterPlan {
    double delta_t = 0.0;
    std::size_t step_count = 0;
    std::size_t width = 0;
    std::vector<Complex> diagonal_phases;
    std::vector<ScheduledExponential> schedule;

    double total_time() const { return delta_t * static_cast<double>(step_count); }
};

/// Schedule order: H₀, then interaction pairs atoms-outer/modes-inner; inside a
/// pair, strings are ordered by their letters with Y < X < Z < I, so a
/// single-qubit mode contributes its X_αY_k factor before X_αX_k.
TrotterPlan make_trotter_plan(const HamiltonianParts& parts, double total_time, std::size_t step_count);

void trotter_step(StateVector& state, const TrotterPlan& plan);

/// Runs plan.step_count steps on `state`, calling sample(t, state) at t = 0,
/// after every `stride` steps, and at the final time. Returns the samples.
template <class Sampler>
auto evolve(StateVector& state, const TrotterPlan& plan, Sampler&& sample, std::size_t stride)
    -> std::vector<std::invoke_result_t<Sampler&, double, const StateVector&>> {
    if (stride == 0) {
        throw InvalidArgument("evolve: sample stride must be at least 1");
    }
    std::vector<std::invoke_result_t<Sampler&, double, const StateVector&>> out;
    out.push_back(sample(0.0, std::as_const(state)));
    for (std::size_t step = 1; step <= plan.step_count; ++step) {
        trotter_step(state, plan);
        if (step % stride == 0 || step == plan.step_count) {
            out.push_back(sample(plan.delta_t * static_cast<double>(step), std::as_const(state)));
        }
    }
    return out;
}

/// Largest width handled by the dense exact-evolution oracle.
inline constexpr std::size_t kMaxExactWidth = 12;

/// exp(-iHt) through one eigendecomposition of a Hermitian dense H, reusable
/// for any number of times.
class ExactPropagator {
public:
    explicit ExactPropagator(const DenseMatrix& hamiltonian);

    StateVector evolve(const StateVector& state, double t) const;
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

private:
    Eigen::VectorXd eigenvalues_;
    DenseMatrix eigenvectors_;
};

/// One-shot exp(-iHt)·state. Throws CapacityError above kMaxExactWidth.
StateVector exact_evolve(const DenseMatrix& hamiltonian, const StateVector& state, double t);

}  // namespace superrad
