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

#include "superrad/boson_encoding.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include <fmt/format.h>

#include "superrad/errors.hpp"

namespace superrad {

namespace {

const Complex kI{0.0, 1.0};

void validate(std::size_t q, double c) {
    if (q == 0) {
        throw InvalidArgument("boson register needs at least one qubit");
    }
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw InvalidArgument(fmt::format("occupation shift must be finite and non-negative, got {}", c));
    }
    if (q > kMaxModeQubits) {
        throw CapacityError(fmt::format("mode register of {} qubits exceeds {}", q, kMaxModeQubits), q,
                            kMaxModeQubits);
    }
}

// |0⟩⟨0| and |1⟩⟨1| on one qubit.
PauliSum projector0() { return PauliSum::from_letters("I", 0.5) + PauliSum::from_letters("Z", 0.5); }
PauliSum projector1() { return PauliSum::from_letters("I", 0.5) + PauliSum::from_letters("Z", -0.5); }

// X - iY = 2|1⟩⟨0| and X + iY = 2|0⟩⟨1|.
PauliSum raise2() { return PauliSum::from_letters("X") + PauliSum::from_letters("Y", -kI); }
PauliSum lower2() { return PauliSum::from_letters("X") + PauliSum::from_letters("Y", kI); }

PauliSum tensor_power(const PauliSum& s, std::size_t n) {
    PauliSum out = PauliSum::identity(0);
    for (std::size_t k = 0; k < n; ++k) {
        out = out.tensor(s);
    }
    return out;
}

enum class Ladder { Creation, Annihilation, Number };

PauliSum build(Ladder kind, std::size_t q, double c) {
    if (q == 0) {
        return PauliSum(0);
    }
    const double half_range = std::ldexp(1.0, static_cast<int>(q) - 1);
    const double scale = std::ldexp(1.0, -static_cast<int>(q));
    PauliSum bridge(q);
    switch (kind) {
        case Ladder::Creation:
            bridge = raise2().tensor(tensor_power(lower2(), q - 1)) * (std::sqrt(c + half_range) * scale);
            break;
        case Ladder::Annihilation:
            bridge = lower2().tensor(tensor_power(raise2(), q - 1)) * (std::sqrt(c + half_range) * scale);
            break;
        case Ladder::Number: {
            const PauliSum one_minus_z = PauliSum::from_letters("I") + PauliSum::from_letters("Z", -1.0);
            const PauliSum one_plus_z = PauliSum::from_letters("I") + PauliSum::from_letters("Z", 1.0);
            bridge = one_minus_z.tensor(tensor_power(one_plus_z, q - 1)) * ((c + half_range) * scale);
            break;
        }
    }
    PauliSum out = projector0().tensor(build(kind, q - 1, c));
    out += bridge;
    out += projector1().tensor(build(kind, q - 1, c + half_range));
    return out.simplified();
}

}  // namespace

PauliSum creation_op(std::size_t q, double c) {
    validate(q, c);
    return build(Ladder::Creation, q, c);
}

PauliSum annihilation_op(std::size_t q, double c) {
    validate(q, c);
    return build(Ladder::Annihilation, q, c);
}

PauliSum number_op(std::size_t q, double c) {
    validate(q, c);
    return build(Ladder::Number, q, c);
}

const BosonOperators& boson_operators(std::size_t q, double c) {
    validate(q, c);
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, double>, std::unique_ptr<const BosonOperators>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[{q, c}];
    if (!slot) {
        slot = std::make_unique<const BosonOperators>(
            BosonOperators{creation_op(q, c), annihilation_op(q, c), number_op(q, c)});
    }
    return *slot;
}

}  // namespace superrad
