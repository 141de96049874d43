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
#include <random>

#include "superrad/dense.hpp"
#include "superrad/hamiltonian.hpp"
#include "superrad/observables.hpp"
#include "superrad/statevector.hpp"

namespace superrad {
namespace {

StateVector random_state(std::mt19937& rng, std::size_t qubits) {
    std::normal_distribution<double> d;
    std::vector<Complex> amps(std::size_t{1} << qubits);
    double norm = 0.0;
    for (auto& a : amps) {
        a = {d(rng), d(rng)};
        norm += std::norm(a);
    }
    for (auto& a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

SystemSpec three_atoms() {
    std::vector<AtomSpec> atoms{{99.0, 0.0, 2.0}, {100.0, 0.0, 2.0}, {101.0, 0.0, 2.0}};
    std::vector<ModeSpec> modes{ModeSpec::make(95.0, 0.5, 2), ModeSpec::make(105.0, 0.5, 1)};
    return SystemSpec::create(atoms, modes);
}

TEST(Expectation, MatchesDense) {
    std::mt19937 rng(31);
    std::normal_distribution<double> coef;
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t w = 1 + trial % 5;
        PauliSum op(w);
        for (int k = 0; k < 5; ++k) {
            std::string s;
            for (std::size_t i = 0; i < w; ++i) {
                s += kLetters[rng() % 4];
            }
            op.add(PauliString::from_letters(s), {coef(rng), coef(rng)});
        }
        const auto psi = random_state(rng, w);
        const DenseVector v = psi.to_dense();
        const Complex want = v.dot(dense_realization(op, w) * v);
        EXPECT_LT(std::abs(expectation(psi, op) - want), 1e-12);
    }
}

TEST(Observables, DecompositionIdentityOnRandomStates) {
    const auto spec = three_atoms();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = random_state(rng, spec.width());
        const double total = intensity(psi, spec);
        EXPECT_NEAR(total, coherence(psi, spec) + intensity_noncoherent(psi, spec), 1e-12);
    }
}

TEST(Observables, InitialStateEmitsIndependently) {
    const auto spec = three_atoms();
    const auto psi = init_state(spec.layout());
    EXPECT_NEAR(intensity(psi, spec), 3 * 2.0, 1e-12);
    EXPECT_NEAR(coherence(psi, spec), 0.0, 1e-12);
    for (std::size_t a = 0; a < 3; ++a) {
        EXPECT_NEAR(excited_population(psi, spec.layout(), a), 1.0, 1e-12);
    }
    EXPECT_NEAR(total_occupation(psi, spec.layout()), 0.0, 1e-12);
}

TEST(Observables, ModeOccupationReadsRegisterValue) {
    const auto spec = three_atoms();
    // atoms 010, mode 0 register = 3, mode 1 = 1
    const auto psi = StateVector::basis(spec.width(), 0b010'11'1);
    EXPECT_NEAR(mode_occupation(psi, spec.layout(), 0), 3.0, 1e-12);
    EXPECT_NEAR(mode_occupation(psi, spec.layout(), 1), 1.0, 1e-12);
    EXPECT_NEAR(total_occupation(psi, spec.layout()), 4.0, 1e-12);
    EXPECT_NEAR(excited_population(psi, spec.layout(), 1), 1.0, 1e-12);
    EXPECT_NEAR(excited_population(psi, spec.layout(), 0), 0.0, 1e-12);
}

TEST(Observables, CollectiveOperatorMatchesDense) {
    const auto layout = QubitLayout::build(3, {1});
    const std::size_t w = layout.total_qubits;
    const Complex i{0.0, 1.0};
    DenseMatrix s_minus = DenseMatrix::Zero(1 << w, 1 << w);
    for (std::size_t a = 0; a < 3; ++a) {
        PauliSum lower = (PauliSum::from_letters("X", 0.5) + PauliSum::from_letters("Y", 0.5 * i)).embedded(w, a);
        s_minus += dense_realization(lower, w);
    }
    const DenseMatrix want = s_minus.adjoint() * s_minus;
    EXPECT_LT((dense_realization(collective_emission_operator(layout), w) - want).cwiseAbs().maxCoeff(), 1e-12);
    const PauliSum split = cross_emission_operator(layout) + independent_emission_operator(layout);
    EXPECT_LT((dense_realization(split, w) - want).cwiseAbs().maxCoeff(), 1e-12);
    for (const auto& t : collective_emission_operator(layout).terms()) {
        EXPECT_EQ(t.string.at(3), Pauli::I);
    }
}

TEST(Observables, SuperradiantDickeStateHasCoherence) {
    // (|10> + |01>)/√2 on two atoms: ⟨S⁺S⁻⟩ = 2, independent part 1.
    const auto spec = SystemSpec::create({{100.0, 0.0, 1.0}, {100.0, 0.0, 1.0}}, {ModeSpec::make(100.0, 0.1)});
    std::vector<Complex> amps(8, 0.0);
    amps[0b100] = amps[0b010] = 1.0 / std::sqrt(2.0);
    const auto psi = StateVector::from_amplitudes(amps);
    EXPECT_NEAR(intensity(psi, spec), 2.0, 1e-12);
    EXPECT_NEAR(intensity_noncoherent(psi, spec), 1.0, 1e-12);
    EXPECT_NEAR(coherence(psi, spec), 1.0, 1e-12);
}

TEST(ObservableSet, RecordIsConsistent) {
    const auto spec = three_atoms();
    const auto parts = build_total(spec);
    const ObservableSet set(spec, parts.total);
    std::mt19937 rng(8);
    const auto psi = random_state(rng, spec.width());
    const auto r = set.measure(0.25, psi);
    EXPECT_DOUBLE_EQ(r.time, 0.5);
    EXPECT_NEAR(r.intensity, intensity(psi, spec), 1e-12);
    EXPECT_NEAR(r.energy, energy(psi, parts.total), 1e-10);
    EXPECT_NEAR(r.norm, 1.0, 1e-12);
    ASSERT_EQ(r.mode_occupation.size(), 2u);
    ASSERT_EQ(r.excited_population.size(), 3u);
    EXPECT_NEAR(r.total_occupation, r.mode_occupation[0] + r.mode_occupation[1], 1e-12);
}

}  // namespace
}  // namespace superrad
