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

#include "superrad/pauli.hpp"

namespace superrad {

/// Largest register accepted for a single bosonic mode.
inline constexpr std::size_t kMaxModeQubits = 10;

/// A bosonic mode truncated to the Fock states representable on `qubit_count`
/// qubits in plain binary. Within the register the first qubit is the most
/// significant bit of the occupation number, so |5⟩ on three qubits is |101⟩.
struct BosonRegister {
    std::size_t qubit_count = 1;

    std::size_t max_occupation() const { return (std::size_t{1} << qubit_count) - 1; }
};

// The ladder operators carry an occupation shift c (the operators count n + c
// photons). Only c = 0 is physical; c > 0 exists to build the recursion.
//
//   a†_q(c) = ½(I+Z) ⊗ a†_{q-1}(c)
//           + √(c + 2^{q-1}) / 2^q · (X - iY) ⊗ (X + iY)^{⊗(q-1)}
//           + ½(I-Z) ⊗ a†_{q-1}(c + 2^{q-1}),          a†_0(c) = 0
//
// a_q(c) follows the conjugate recursion and n_q(c) the analogous one with
// (I - Z) ⊗ (I + Z)^{⊗(q-1)} in the middle. n_q(c) = Σ_{n≥1} (c+n)|n⟩⟨n| has no
// c|0⟩⟨0| entry since it is a†a, which annihilates the vacuum.
//
// All three throw InvalidArgument for q = 0 or c < 0 and CapacityError above
// kMaxModeQubits.

PauliSum creation_op(std::size_t q, double c = 0.0);
PauliSum annihilation_op(std::size_t q, double c = 0.0);
PauliSum number_op(std::size_t q, double c = 0.0);

struct BosonOperators {
    PauliSum creation;
    PauliSum annihilation;
    PauliSum number;
};

/// Memoized creation/annihilation/number triple for (q, c). Thread-safe; the
/// returned reference stays valid for the lifetime of the program.
const BosonOperators& boson_operators(std::size_t q, double c = 0.0);

}  // namespace superrad
