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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "superrad/boson_encoding.hpp"
#include "superrad/dense.hpp"
#include "superrad/errors.hpp"
#include "superrad/hamiltonian.hpp"
#include "superrad/observables.hpp"
#include "superrad/statevector.hpp"

namespace superrad {
namespace {

const Complex I{0.0, 1.0};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

SystemSpec one_pair(double position, double g, std::size_t q) {
    return SystemSpec::create({{100.0, position, 1.0}}, {ModeSpec::make(101.0, g, q)});
}

TEST(Layout, AtomsFirstThenModes) {
    const auto layout = QubitLayout::build(3, {1, 2, 3});
    EXPECT_EQ(layout.total_qubits, 9u);
    EXPECT_EQ(layout.atom_qubits, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(layout.mode_registers[0], (QubitRange{3, 1}));
    EXPECT_EQ(layout.mode_registers[1], (QubitRange{4, 2}));
    EXPECT_EQ(layout.mode_registers[2], (QubitRange{6, 3}));
}

TEST(SystemSpec, ValidatesPhysicalInput) {
    const auto mode = ModeSpec::make(100.0, 0.1);
    EXPECT_THROW(SystemSpec::create({}, {mode}), InvalidArgument);
    EXPECT_THROW(SystemSpec::create({{-1.0, 0.0, 1.0}}, {mode}), InvalidArgument);
    EXPECT_THROW(SystemSpec::create({{100.0, 0.0, 0.0}}, {mode}), InvalidArgument);
    EXPECT_THROW(SystemSpec::create({{100.0, 0.0, 1.0}, {100.0, 0.0, 2.0}}, {mode}), InvalidArgument);
    EXPECT_THROW(SystemSpec::create({{100.0, 0.0, 1.0}}, {ModeSpec{100.0, 50.0, 0.1, 1}}), InvalidArgument);
    EXPECT_THROW(SystemSpec::create({{100.0, 0.0, 1.0}}, {mode, mode}), InvalidArgument);
    EXPECT_THROW(SystemSpec::create({{100.0, 0.0, 1.0}}, {ModeSpec::make(100.0, 0.1, 0)}), InvalidArgument);
}

TEST(SystemSpec, CapacityErrorCarriesTotal) {
    std::vector<AtomSpec> atoms(6, AtomSpec{100.0, 0.0, 1.0});
    try {
        SystemSpec::create(atoms, {ModeSpec::make(100.0, 0.1, 5)}, 10);
        FAIL() << "expected a capacity error";
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.requested(), 11u);
        EXPECT_EQ(e.limit(), 10u);
    }
}

TEST(SystemSpec, QubitCapFromEnvironment) {
    ::setenv("SUPERRAD_MAX_QUBITS", "12", 1);
    EXPECT_EQ(configured_max_qubits(), 12u);
    ::setenv("SUPERRAD_MAX_QUBITS", "abc", 1);
    EXPECT_THROW(configured_max_qubits(), InvalidArgument);
    ::setenv("SUPERRAD_MAX_QUBITS", "99", 1);
    EXPECT_THROW(configured_max_qubits(), CapacityError);
    ::unsetenv("SUPERRAD_MAX_QUBITS");
    EXPECT_EQ(configured_max_qubits(), kDefaultMaxQubits);
}

TEST(ModeWindow, EvenlySpacedAroundCenter) {
    const auto w = standard_mode_window(100.0, 50.0, 7);
    ASSERT_EQ(w.size(), 7u);
    EXPECT_DOUBLE_EQ(w.front(), 75.0);
    EXPECT_EQ(w[3], 100.0);
    EXPECT_DOUBLE_EQ(w.back(), 125.0);
    EXPECT_DOUBLE_EQ(window_spacing(50.0, 7), 50.0 / 6.0);
    EXPECT_EQ(standard_mode_window(100.0, 1.0, 1), std::vector<double>{100.0});
    EXPECT_DOUBLE_EQ(window_spacing(37.5, 11), 3.75);
}

TEST(Coupling, Conventions) {
    const double two_pi = 2.0 * std::numbers::pi;
    EXPECT_DOUBLE_EQ(coupling_from_gamma(2.0, 5.0, CouplingConvention::G2TimesDelta), std::sqrt(2.0 / (two_pi * 5.0)));
    EXPECT_DOUBLE_EQ(coupling_from_gamma(2.0, 5.0, CouplingConvention::G2OverDelta), std::sqrt(2.0 * 5.0 / two_pi));
    EXPECT_EQ(parse_coupling_convention("g2_times_delta"), CouplingConvention::G2TimesDelta);
    EXPECT_EQ(to_string(CouplingConvention::G2OverDelta), "g2_over_delta");
    EXPECT_THROW(parse_coupling_convention("g2"), InvalidArgument);
    EXPECT_THROW(coupling_from_gamma(0.0, 1.0), InvalidArgument);
}

TEST(Hamiltonian, FreePartIsDiagonal) {
    std::vector<AtomSpec> atoms(4, AtomSpec{100.0, 0.0, 2.0});
    std::vector<ModeSpec> modes;
    for (double f : standard_mode_window(100.0, 50.0, 7)) {
        modes.push_back(ModeSpec::make(f, 1.0, 1));
    }
    const auto spec = SystemSpec::create(atoms, modes);
    const auto h0 = build_h0(spec);
    EXPECT_TRUE(h0.is_diagonal());
    // All four atoms excited, field empty: 4 · ½ω.
    EXPECT_NEAR(energy(init_state(spec.layout()), h0), 200.0, 1e-12);
}

TEST(Hamiltonian, SingleQubitPairTermClosedForm) {
    const double g = 0.3;
    for (double r : {0.0, 0.004, 0.017}) {
        const auto spec = one_pair(r, g, 1);
        const auto terms = build_hint(spec);
        ASSERT_EQ(terms.size(), 1u);
        const double kr = 101.0 * r;
        PauliSum expect = PauliSum::from_letters("XY", -g * std::cos(kr)) + PauliSum::from_letters("XX", -g * std::sin(kr));
        const DenseMatrix diff = dense_realization(terms[0], 2) - dense_realization(expect, 2);
        EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(Hamiltonian, MultiQubitPairTermMatchesDenseConstruction) {
    const double g = 0.7;
    const double r = 0.011;
    for (std::size_t q : {2, 3}) {
        const auto spec = one_pair(r, g, q);
        const auto terms = build_hint(spec);
        ASSERT_EQ(terms.size(), 1u);
        EXPECT_TRUE(terms[0].is_hermitian());
        DenseMatrix sx(2, 2);
        sx << 0, 1, 1, 0;
        const double kr = 101.0 * r;
        const DenseMatrix ad = dense_realization(creation_op(q, 0.0), q);
        const DenseMatrix field = std::exp(-I * kr) * ad - std::exp(I * kr) * DenseMatrix(ad.adjoint());
        const DenseMatrix want = -I * g * kron(sx, field);
        EXPECT_LE((dense_realization(terms[0], q + 1) - want).cwiseAbs().maxCoeff(), 1e-12) << "q = " << q;
    }
}

TEST(Hamiltonian, PairOrderAtomsOuterModesInner) {
    std::vector<AtomSpec> atoms{{100.0, 0.0, 1.0}, {100.0, 0.0, 1.0}};
    std::vector<ModeSpec> modes{ModeSpec::make(99.0, 0.1), ModeSpec::make(101.0, 0.2)};
    const auto spec = SystemSpec::create(atoms, modes);
    const auto terms = build_hint(spec);
    ASSERT_EQ(terms.size(), 4u);
    EXPECT_NEAR(std::abs(terms[0].coefficient(PauliString::from_letters("XIYI"))), 0.1, 1e-15);
    EXPECT_NEAR(std::abs(terms[1].coefficient(PauliString::from_letters("XIIY"))), 0.2, 1e-15);
    EXPECT_NEAR(std::abs(terms[2].coefficient(PauliString::from_letters("IXYI"))), 0.1, 1e-15);
    EXPECT_NEAR(std::abs(terms[3].coefficient(PauliString::from_letters("IXIY"))), 0.2, 1e-15);
}

TEST(Hamiltonian, TotalIsSumOfParts) {
    std::vector<AtomSpec> atoms{{99.0, 0.0, 1.0}, {101.0, 0.01, 1.0}};
    std::vector<ModeSpec> modes{ModeSpec::make(98.0, 0.3, 2), ModeSpec::make(102.0, 0.2, 1)};
    const auto spec = SystemSpec::create(atoms, modes);
    const auto parts = build_total(spec);
    PauliSum sum = parts.h0;
    for (const auto& t : parts.hint_terms) {
        sum += t;
    }
    EXPECT_EQ(sum.simplified(), parts.total);
    EXPECT_TRUE(parts.total.is_hermitian());
    const DenseMatrix h = dense_realization(parts.total, spec.width());
    EXPECT_LE((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Hamiltonian, ExcitationNumberConservedOnlyWithRotatingTerms) {
    // The X_α coupling includes counter-rotating terms, so [H, N_exc] != 0.
    const auto spec = one_pair(0.0, 0.5, 1);
    const DenseMatrix h = dense_realization(build_total(spec).total, 2);
    DenseMatrix n = DenseMatrix::Zero(4, 4);
    n.diagonal() << 0, 1, 1, 2;
    EXPECT_GT((h * n - n * h).cwiseAbs().maxCoeff(), 0.1);
}

}  // namespace
}  // namespace superrad
