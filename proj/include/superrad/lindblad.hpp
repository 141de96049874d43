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
#include <vector>

#include "superrad/dense.hpp"
#include "superrad/observables.hpp"

namespace superrad {

/// Atom-only density matrix on N_A qubits, same basis ordering as StateVector
/// (qubit 0 most significant, |1⟩ excited).
struct DensityMatrix {
    DenseMatrix entries;

    static DensityMatrix pure(const DenseVector& psi);
    static DensityMatrix fully_excited(std::size_t n_atoms);
    static DensityMatrix ground(std::size_t n_atoms);

    std::size_t n_atoms() const;
    Complex trace() const { return entries.trace(); }
    double purity() const;
    double min_eigenvalue() const;
    /// Largest |ρ - ρ†| entry.
    double hermiticity_error() const;
};

enum class DecayChannel {
    /// One collective jump operator S⁻ = Σ_α σ⁻_α.
    Collective,
    /// N_A jump operators σ⁻_α, no cross terms.
    Independent,
};

enum class Frame {
    /// Keeps H_A = ½ ω Σ_α σᶻ_α.
    Lab,
    /// Drops H_A; it commutes with both dissipators and does not affect intensities.
    Rotating,
};

/// dρ/dt = -i[H_A, ρ] + Γ₀ Σ_j (L_j ρ L_j† - ½{L_j† L_j, ρ}).
class DickeMasterEquation {
public:
    DickeMasterEquation(std::size_t n_atoms, double gamma0, double omega,
                        DecayChannel channel = DecayChannel::Collective, Frame frame = Frame::Lab);

    std::size_t n_atoms() const { return n_atoms_; }
    double gamma0() const { return gamma0_; }

    DenseMatrix rhs(const DenseMatrix& rho) const;

    /// Fixed-step RK4 from t = 0 to `total_time`, keeping ρ(0), every
    /// `stride`-th step, and ρ(T). The step is shrunk so that it divides T.
    /// Throws IntegrationError when the trace drifts by more than 1e-6.
    std::vector<std::pair<double, DensityMatrix>> integrate(const DensityMatrix& rho0, double total_time,
                                                            double dt, std::size_t stride = 1) const;

    double intensity(const DensityMatrix& rho) const;
    double intensity_noncoherent(const DensityMatrix& rho) const;
    double coherence(const DensityMatrix& rho) const;
    double excited_population(const DensityMatrix& rho, std::size_t atom) const;
    /// ⟨S_z⟩ = ½ Σ_α ⟨σᶻ_α⟩.
    double collective_sz(const DensityMatrix& rho) const;

    ObservableRecord record(double t, const DensityMatrix& rho) const;

private:
    std::size_t n_atoms_;
    double gamma0_;
    double omega_;
    DecayChannel channel_;
    Frame frame_;
    DenseMatrix h_atoms_;
    std::vector<DenseMatrix> jumps_;
    std::vector<DenseMatrix> jump_norms_;  // L† L
    DenseMatrix emission_;                 // S⁺S⁻
    DenseMatrix cross_;                    // Σ_{α≠β} σ⁺_α σ⁻_β
    std::vector<DenseMatrix> populations_;
};

/// Collective-decay generator applied to ρ, lab frame.
DenseMatrix dicke_rhs(const DensityMatrix& rho, double gamma0, double omega);

/// Collective-decay RK4 trajectory, lab frame, sampled every step.
std::vector<std::pair<double, DensityMatrix>> integrate(const DensityMatrix& rho0, double gamma0, double omega,
                                                        double total_time, double dt);

/// N_A Γ₀ e^{-Γ₀ t}: independent emitters.
double independent_intensity(std::size_t n_atoms, double gamma0, double t);

/// Fully inverted ensemble under collective decay (rotating frame), sampled every
/// `stride` steps. Record times are t·Γ₀; energy is not tracked (NaN).
TimeSeries dicke_intensity_series(std::size_t n_atoms, double gamma0, double total_time, double dt,
                                  std::size_t stride = 1);

}  // namespace superrad
