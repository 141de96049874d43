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
#include "superrad/errors.hpp"
#include "superrad/hamiltonian.hpp"
#include "superrad/observables.hpp"
#include "superrad/statevector.hpp"

namespace superrad {
namespace {

const Complex I{0.0, 1.0};

// exp(-iHt) by scaling and squaring of a truncated Taylor series.
DenseMatrix taylor_propagator(const DenseMatrix& h, double t) {
    int squarings = 0;
    double scale = h.cwiseAbs().rowwise().sum().maxCoeff() * std::abs(t);
    while (scale > 0.25) {
        scale /= 2.0;
        ++squarings;
    }
    const DenseMatrix a = (-I * t / std::pow(2.0, squarings)) * h;
    DenseMatrix term = DenseMatrix::Identity(h.rows(), h.cols());
    DenseMatrix sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * a / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

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

std::string random_letters(std::mt19937& rng, std::size_t width) {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::string s;
    for (std::size_t i = 0; i < width; ++i) {
        s += kLetters[rng() % 4];
    }
    return s;
}

SystemSpec small_system(std::size_t n_atoms, std::size_t n_modes, double gamma0, std::size_t q = 1) {
    std::vector<AtomSpec> atoms(n_atoms, AtomSpec{100.0, 0.0, gamma0});
    const double width = 20.0;
    std::vector<ModeSpec> modes;
    for (double f : standard_mode_window(100.0, width, n_modes)) {
        modes.push_back(ModeSpec::make(f, coupling_from_gamma(gamma0, window_spacing(width, n_modes)), q));
    }
    return SystemSpec::create(atoms, modes);
}

TEST(StateVector, BasisAndNorm) {
    const auto s = StateVector::basis(3, 5);
    EXPECT_EQ(s.dimension(), 8u);
    EXPECT_EQ(s[5], Complex(1.0));
    EXPECT_DOUBLE_EQ(s.norm(), 1.0);
    EXPECT_THROW(StateVector::basis(2, 4), InvalidArgument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), InvalidArgument);
}

TEST(StateVector, InitialStateHasAtomsExcited) {
    const auto layout = QubitLayout::build(2, {1, 2});
    const auto s = init_state(layout);
    EXPECT_EQ(s.qubit_count(), 5u);
    EXPECT_EQ(s[0b11000], Complex(1.0));
}

TEST(PauliExponential, MatchesDenseExponential) {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t w = 1 + trial % 5;
        const auto letters = random_letters(rng, w);
        const double c = u(rng);
        const double dt = u(rng);
        auto state = random_state(rng, w);
        const DenseVector before = state.to_dense();
        apply_pauli_exponential(state, {c, PauliString::from_letters(letters)}, dt);
        const DenseMatrix p = dense_realization(PauliSum::from_letters(letters), w);
        const DenseMatrix u_exact = taylor_propagator(c * p, dt);
        EXPECT_LE((state.to_dense() - u_exact * before).cwiseAbs().maxCoeff(), 1e-12) << letters;
    }
}

TEST(PauliExponential, RejectsComplexCoefficient) {
    StateVector s(2);
    EXPECT_THROW(apply_pauli_exponential(s, {Complex(0.0, 1.0), PauliString::from_letters("XY")}, 0.1),
                 InvalidArgument);
}

TEST(Trotter, UncoupledSystemOnlyAccumulatesPhase) {
    std::vector<ModeSpec> modes{ModeSpec::make(99.0, 0.0), ModeSpec::make(101.0, 0.0)};
    const auto spec = SystemSpec::create({{100.0, 0.0, 1.0}, {100.0, 0.0, 1.0}}, modes);
    const auto plan = make_trotter_plan(build_total(spec), 1.0, 10);
    std::mt19937 rng(1);
    auto state = random_state(rng, spec.width());
    const auto before = state.to_dense();
    for (int i = 0; i < 10; ++i) {
        trotter_step(state, plan);
    }
    EXPECT_LE((state.to_dense().cwiseAbs() - before.cwiseAbs()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Trotter, SinglePairStepIsFreeThenInteraction) {
    const auto spec = SystemSpec::create({{100.0, 0.0, 1.0}}, {ModeSpec::make(100.0, 0.4)});
    const auto parts = build_total(spec);
    const double dt = 0.05;
    const auto plan = make_trotter_plan(parts, dt, 1);
    ASSERT_EQ(plan.schedule.size(), 1u);
    EXPECT_EQ(plan.schedule[0].string.letters(), "XY");
    std::mt19937 rng(2);
    auto state = random_state(rng, 2);
    const DenseVector before = state.to_dense();
    trotter_step(state, plan);
    const DenseMatrix u0 = taylor_propagator(dense_realization(parts.h0, 2), dt);
    const DenseMatrix u1 = taylor_propagator(dense_realization(parts.hint_terms[0], 2), dt);
    EXPECT_LE((state.to_dense() - u1 * u0 * before).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Trotter, ScheduleOrderYBeforeX) {
    const auto spec = SystemSpec::create({{100.0, 0.01, 1.0}}, {ModeSpec::make(100.0, 0.4)});
    const auto plan = make_trotter_plan(build_total(spec), 1.0, 4);
    ASSERT_EQ(plan.schedule.size(), 2u);
    EXPECT_EQ(plan.schedule[0].string.letters(), "XY");
    EXPECT_EQ(plan.schedule[1].string.letters(), "XX");
    EXPECT_DOUBLE_EQ(plan.delta_t * 4, 1.0);
}

TEST(Trotter, PreservesNorm) {
    const auto spec = small_system(2, 3, 2.0, 2);
    const auto plan = make_trotter_plan(build_total(spec), 1.5, 300);
    auto state = init_state(spec.layout());
    for (std::size_t i = 0; i < plan.step_count; ++i) {
        trotter_step(state, plan);
    }
    EXPECT_LT(std::abs(state.norm() - 1.0), 1e-12);
}

TEST(Trotter, Deterministic) {
    const auto spec = small_system(2, 3, 2.0);
    const auto plan = make_trotter_plan(build_total(spec), 1.0, 100);
    auto a = init_state(spec.layout());
    auto b = init_state(spec.layout());
    for (std::size_t i = 0; i < plan.step_count; ++i) {
        trotter_step(a, plan);
        trotter_step(b, plan);
    }
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        ASSERT_EQ(a[i], b[i]);
    }
}

TEST(Trotter, FirstOrderConvergence) {
    const auto spec = small_system(1, 3, 2.0, 2);
    const auto parts = build_total(spec);
    const double t = 0.5;
    const auto psi0 = init_state(spec.layout());
    const auto exact = exact_evolve(dense_realization(parts.total, spec.width()), psi0, t).to_dense();
    std::vector<double> errors;
    for (std::size_t steps : {100, 200, 400, 800}) {
        const auto plan = make_trotter_plan(parts, t, steps);
        auto s = psi0;
        for (std::size_t i = 0; i < steps; ++i) {
            trotter_step(s, plan);
        }
        errors.push_back((s.to_dense() - exact).norm());
    }
    for (std::size_t i = 1; i < errors.size(); ++i) {
        const double ratio = errors[i - 1] / errors[i];
        EXPECT_GE(ratio, 1.7);
        EXPECT_LE(ratio, 2.3);
    }
}

TEST(Evolve, SamplesAtStrideAndEnd) {
    const auto spec = small_system(1, 2, 1.0);
    const auto plan = make_trotter_plan(build_total(spec), 1.0, 10);
    auto state = init_state(spec.layout());
    std::vector<double> times;
    evolve(state, plan, [&](double t, const StateVector&) { times.push_back(t); return t; }, 3);
    ASSERT_EQ(times.size(), 5u);
    EXPECT_DOUBLE_EQ(times[0], 0.0);
    EXPECT_DOUBLE_EQ(times[1], 0.3);
    EXPECT_DOUBLE_EQ(times[4], 1.0);
    EXPECT_THROW(evolve(state, plan, [](double t, const StateVector&) { return t; }, 0), InvalidArgument);
}

TEST(Exact, MatchesTaylorSeries) {
    const auto spec = small_system(1, 2, 2.0);
    const DenseMatrix h = dense_realization(build_total(spec).total, spec.width());
    const ExactPropagator prop(h);
    std::mt19937 rng(9);
    const auto psi = random_state(rng, spec.width());
    for (double t : {0.0, 0.01, 0.37}) {
        const DenseVector want = taylor_propagator(h, t) * psi.to_dense();
        EXPECT_LE((prop.evolve(psi, t).to_dense() - want).cwiseAbs().maxCoeff(), 1e-10) << "t = " << t;
    }
}

TEST(Exact, ConservesEnergy) {
    const auto spec = small_system(2, 3, 2.0);
    const auto parts = build_total(spec);
    const ExactPropagator prop(dense_realization(parts.total, spec.width()));
    const auto psi0 = init_state(spec.layout());
    const double e0 = energy(psi0, parts.total);
    for (double t : {0.1, 0.5, 1.5}) {
        EXPECT_NEAR(energy(prop.evolve(psi0, t), parts.total), e0, 1e-10);
    }
}

TEST(Exact, RejectsMalformedInput) {
    EXPECT_THROW(ExactPropagator(DenseMatrix::Identity(3, 3)), InvalidArgument);
    EXPECT_THROW(ExactPropagator(DenseMatrix::Identity(4, 2)), InvalidArgument);
    EXPECT_THROW(exact_evolve(DenseMatrix::Identity(2, 2), StateVector(2), 0.1), InvalidArgument);
}

}  // namespace
}  // namespace superrad
