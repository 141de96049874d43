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

#include "superrad/dense.hpp"

#include <fmt/format.h>

#include "superrad/errors.hpp"

namespace superrad {

DenseMatrix dense_realization(const PauliSum& s, std::size_t width) {
    if (width > kMaxDenseWidth) {
        throw CapacityError(fmt::format("dense realization of width {} exceeds {}", width, kMaxDenseWidth), width,
                            kMaxDenseWidth);
    }
    if (s.width() != width) {
        throw InvalidArgument(fmt::format("dense_realization: sum has width {}, requested {}", s.width(), width));
    }
    const Eigen::Index dim = Eigen::Index{1} << width;
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    for (const auto& term : s.terms()) {
        const std::uint64_t x = term.string.x_mask();
        for (Eigen::Index col = 0; col < dim; ++col) {
            const auto basis = static_cast<std::uint64_t>(col);
            m(static_cast<Eigen::Index>(basis ^ x), col) += term.coefficient * term.string.phase_on(basis);
        }
    }
    return m;
}

}  // namespace superrad
