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

#include "superrad/lindblad.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "superrad/errors.hpp"
#include "superrad/pauli.hpp"

namespace superrad {

namespace {

const Complex kI{0.0, 1.0};

// Larger than this the full 2^N_A density matrix gets unwieldy for RK4.
constexpr std::size_t kMaxOracleAtoms = 10;

DenseMatrix atom_operator(std::size_t n_atoms, std::size_t atom, const PauliSum& single) {
    return dense_realization(single.embedded(n_atoms, atom), n_atoms);
}

DenseMatrix sigma_minus(std::size_t n_atoms, std::size_t atom) {
    return atom_operator(n_atoms, atom, PauliSum::from_letters("X", 0.5) + PauliSum::from_letters("Y", 0.5 * kI));
}

}  // namespace

DensityMatrix DensityMatrix::pure(const DenseVector& psi) { return {psi * psi.adjoint()}; }

DensityMatrix DensityMatrix::fully_excited(std::size_t n_atoms) {
    const Eigen::Index dim = Eigen::Index{1} << n_atoms;
    DensityMatrix rho{DenseMatrix::Zero(dim, dim)};
    rho.entries(dim - 1, dim - 1) = 1.0;
    return rho;
}

DensityMatrix DensityMatrix::ground(std::size_t n_atoms) {
    const Eigen::Index dim = Eigen::Index{1} << n_atoms;
    DensityMatrix rho{DenseMatrix::Zero(dim, dim)};
    rho.entries(0, 0) = 1.0;
    return rho;
}

std::size_t DensityMatrix::n_atoms() const {
    return static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(entries.rows())));
}

double DensityMatrix::purity() const { return (entries * entries).trace().real(); }

double DensityMatrix::min_eigenvalue() const {
    const DenseMatrix h = 0.5 * (entries + entries.adjoint());
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityMatrix::hermiticity_error() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }

DickeMasterEquation::DickeMasterEquation(std::size_t n_atoms, double gamma0, double omega, DecayChannel channel,
                                         Frame frame)
    : n_atoms_(n_atoms), gamma0_(gamma0), omega_(omega), channel_(channel), frame_(frame) {
    if (n_atoms == 0) {
        throw InvalidArgument("master equation needs at least one atom");
    }
    if (n_atoms > kMaxOracleAtoms) {
        throw CapacityError(fmt::format("master equation oracle limited to {} atoms", kMaxOracleAtoms), n_atoms,
                            kMaxOracleAtoms);
    }
    if (!(gamma0 > 0.0) || !std::isfinite(omega)) {
        throw InvalidArgument(fmt::format("invalid rates (gamma0={}, omega={})", gamma0, omega));
    }
    const Eigen::Index dim = Eigen::Index{1} << n_atoms;
    h_atoms_ = DenseMatrix::Zero(dim, dim);
    DenseMatrix s_minus = DenseMatrix::Zero(dim, dim);
    std::vector<DenseMatrix> lowering;
    for (std::size_t a = 0; a < n_atoms; ++a) {
        lowering.push_back(sigma_minus(n_atoms, a));
        s_minus += lowering.back();
        // ½ω σᶻ = -½ω Z
        h_atoms_ += atom_operator(n_atoms, a, PauliSum::from_letters("Z", -0.5 * omega));
        populations_.push_back(lowering.back().adjoint() * lowering.back());
    }
    emission_ = s_minus.adjoint() * s_minus;
    cross_ = emission_;
    for (const auto& p : populations_) {
        cross_ -= p;
    }
    if (channel == DecayChannel::Collective) {
        jumps_.push_back(s_minus);
    } else {
        jumps_ = lowering;
    }
    for (const auto& l : jumps_) {
        jump_norms_.push_back(l.adjoint() * l);
    }
}

DenseMatrix DickeMasterEquation::rhs(const DenseMatrix& rho) const {
    DenseMatrix out = DenseMatrix::Zero(rho.rows(), rho.cols());
    if (frame_ == Frame::Lab) {
        out.noalias() += -kI * (h_atoms_ * rho - rho * h_atoms_);
    }
    for (std::size_t j = 0; j < jumps_.size(); ++j) {
        const auto& l = jumps_[j];
        const auto& ll = jump_norms_[j];
        out.noalias() += gamma0_ * (l * rho * l.adjoint());
        out.noalias() -= (0.5 * gamma0_) * (ll * rho + rho * ll);
    }
    return out;
}

std::vector<std::pair<double, DensityMatrix>> DickeMasterEquation::integrate(const DensityMatrix& rho0,
                                                                             double total_time, double dt,
                                                                             std::size_t stride) const {
    if (rho0.entries.rows() != (Eigen::Index{1} << n_atoms_) || rho0.entries.cols() != rho0.entries.rows()) {
        throw InvalidArgument("initial density matrix has the wrong dimension");
    }
    if (!(total_time >= 0.0) || !(dt > 0.0) || stride == 0) {
        throw InvalidArgument(fmt::format("integrate needs T >= 0, dt > 0, stride >= 1 (T={}, dt={})", total_time, dt));
    }
    const auto steps = static_cast<std::size_t>(std::ceil(total_time / dt - 1e-9));
    const double h = steps == 0 ? 0.0 : total_time / static_cast<double>(steps);
    const Complex trace0 = rho0.trace();

    std::vector<std::pair<double, DensityMatrix>> out;
    out.emplace_back(0.0, rho0);
    DenseMatrix rho = rho0.entries;
    for (std::size_t step = 1; step <= steps; ++step) {
        const DenseMatrix k1 = rhs(rho);
        const DenseMatrix k2 = rhs(rho + (0.5 * h) * k1);
        const DenseMatrix k3 = rhs(rho + (0.5 * h) * k2);
        const DenseMatrix k4 = rhs(rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const double drift = std::abs(rho.trace() - trace0);
        if (!(drift <= 1e-6)) {
            throw IntegrationError(fmt::format("trace drifted by {} at t = {}", drift, h * static_cast<double>(step)));
        }
        if (step % stride == 0 || step == steps) {
            out.emplace_back(h * static_cast<double>(step), DensityMatrix{rho});
        }
    }
    return out;
}

double DickeMasterEquation::intensity(const DensityMatrix& rho) const {
    return gamma0_ * (emission_ * rho.entries).trace().real();
}

double DickeMasterEquation::intensity_noncoherent(const DensityMatrix& rho) const {
    double sum = 0.0;
    for (std::size_t a = 0; a < n_atoms_; ++a) {
        sum += excited_population(rho, a);
    }
    return gamma0_ * sum;
}

double DickeMasterEquation::coherence(const DensityMatrix& rho) const {
    return gamma0_ * (cross_ * rho.entries).trace().real();
}

double DickeMasterEquation::excited_population(const DensityMatrix& rho, std::size_t atom) const {
    return (populations_.at(atom) * rho.entries).trace().real();
}

double DickeMasterEquation::collective_sz(const DensityMatrix& rho) const {
    double sum = 0.0;
    for (std::size_t a = 0; a < n_atoms_; ++a) {
        sum += excited_population(rho, a) - 0.5;
    }
    return sum;
}

ObservableRecord DickeMasterEquation::record(double t, const DensityMatrix& rho) const {
    ObservableRecord r;
    r.time = t * gamma0_;
    r.intensity = intensity(rho);
    r.coherence = coherence(rho);
    r.intensity_nc = intensity_noncoherent(rho);
    r.energy = std::numeric_limits<double>::quiet_NaN();
    r.norm = rho.trace().real();
    double excited = 0.0;
    for (std::size_t a = 0; a < n_atoms_; ++a) {
        r.excited_population.push_back(excited_population(rho, a));
        excited += r.excited_population.back();
    }
    // Every de-excitation under the jump operators emits one photon.
    r.total_occupation = static_cast<double>(n_atoms_) - excited;
    return r;
}

DenseMatrix dicke_rhs(const DensityMatrix& rho, double gamma0, double omega) {
    return DickeMasterEquation(rho.n_atoms(), gamma0, omega).rhs(rho.entries);
}

std::vector<std::pair<double, DensityMatrix>> integrate(const DensityMatrix& rho0, double gamma0, double omega,
                                                        double total_time, double dt) {
    return DickeMasterEquation(rho0.n_atoms(), gamma0, omega).integrate(rho0, total_time, dt);
}

double independent_intensity(std::size_t n_atoms, double gamma0, double t) {
    return static_cast<double>(n_atoms) * gamma0 * std::exp(-gamma0 * t);
}

TimeSeries dicke_intensity_series(std::size_t n_atoms, double gamma0, double total_time, double dt,
                                  std::size_t stride) {
    const DickeMasterEquation eq(n_atoms, gamma0, 0.0, DecayChannel::Collective, Frame::Rotating);
    TimeSeries series{"lindblad", {}};
    for (const auto& [t, rho] : eq.integrate(DensityMatrix::fully_excited(n_atoms), total_time, dt, stride)) {
        series.records.push_back(eq.record(t, rho));
    }
    return series;
}

}  // namespace superrad
