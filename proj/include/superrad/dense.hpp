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

#include <Eigen/Dense>

#include "superrad/pauli.hpp"

namespace superrad {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Largest width dense_realization() will expand (2^14 × 2^14 complex ≈ 4 GiB).
inline constexpr std::size_t kMaxDenseWidth = 14;

/// Exact Kronecker expansion of `s`; qubit 0 is the leftmost tensor factor.
/// Throws CapacityError above kMaxDenseWidth and InvalidArgument when the
/// sum's width differs from `width`.
DenseMatrix dense_realization(const PauliSum& s, std::size_t width);

}  // namespace superrad
