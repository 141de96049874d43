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

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superrad {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxPauliWidth = 64;

/// Coefficients below this magnitude are dropped by PauliSum::simplified().
inline constexpr double kPruneThreshold = 1e-14;

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

/// Tensor product of single-qubit Pauli letters on a fixed number of qubits.
///
/// Letters are stored as a bit-flip mask (X or Y) and a phase-flip mask (Y or
/// Z). Qubit 0 maps to the most significant bit of a computational-basis index,
/// so for A on `a` qubits and B on `b` qubits the masks of A⊗B are
/// `(mask_A << b) | mask_B`, and a string acts on basis state |k⟩ as
///
///     P|k⟩ = i^{#Y} (-1)^{popcount(k & z)} |k ^ x⟩.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::size_t width);

    static PauliString from_letters(std::string_view letters);
    static PauliString from_masks(std::size_t width, std::uint64_t x, std::uint64_t z);

    std::size_t width() const { return width_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    std::size_t y_count() const;

    Pauli at(std::size_t qubit) const;
    void set(std::size_t qubit, Pauli p);

    bool is_identity() const { return x_ == 0 && z_ == 0; }
    bool is_diagonal() const { return x_ == 0; }

    std::string letters() const;

    PauliString tensor(const PauliString& rhs) const;

    /// Phase i^{#Y}(-1)^{popcount(basis & z)} picked up when acting on |basis⟩.
    Complex phase_on(std::uint64_t basis) const;

    auto operator<=>(const PauliString&) const = default;

private:
    std::uint64_t bit(std::size_t qubit) const { return std::uint64_t{1} << (width_ - 1 - qubit); }

    std::size_t width_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// Product a·b of two strings of equal width as (phase, string), phase ∈ {±1, ±i}.
std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b);

/// Whether two strings of equal width commute.
bool commutes(const PauliString& a, const PauliString& b);

struct PauliTerm {
    Complex coefficient;
    PauliString string;
};

/// Complex-weighted sum of Pauli strings over a common width. Terms with the
/// same letters are merged on insertion; iteration order is deterministic.
class PauliSum {
public:
    explicit PauliSum(std::size_t width = 0) : width_(width) {}

    static PauliSum identity(std::size_t width, Complex coefficient = 1.0);
    static PauliSum from_letters(std::string_view letters, Complex coefficient = 1.0);

    std::size_t width() const { return width_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    std::vector<PauliTerm> terms() const;
    Complex coefficient(const PauliString& s) const;

    void add(const PauliString& s, Complex coefficient);

    PauliSum& operator+=(const PauliSum& rhs);
    PauliSum& operator-=(const PauliSum& rhs);
    PauliSum& operator*=(Complex scale);

    friend PauliSum operator+(PauliSum lhs, const PauliSum& rhs) { return lhs += rhs; }
    friend PauliSum operator-(PauliSum lhs, const PauliSum& rhs) { return lhs -= rhs; }
    friend PauliSum operator*(PauliSum lhs, Complex scale) { return lhs *= scale; }
    friend PauliSum operator*(Complex scale, PauliSum rhs) { return rhs *= scale; }

    /// Copy without terms whose coefficient magnitude is below `threshold`.
    PauliSum simplified(double threshold = kPruneThreshold) const;

    PauliSum adjoint() const;

    /// Pauli strings are Hermitian, so the sum is iff every coefficient is real.
    bool is_hermitian(double tol = 1e-12) const;
    bool is_diagonal() const;

    /// Copy with imaginary parts removed; only meaningful after is_hermitian().
    PauliSum real_part() const;

    PauliSum tensor(const PauliSum& rhs) const;

    /// Places this sum on qubits [offset, offset + width()) of a wider register.
    PauliSum embedded(std::size_t total_width, std::size_t offset) const;

    /// One term per line: `<re> <im> <letters>`.
    std::string to_text() const;
    static PauliSum from_text(std::string_view text, std::size_t width);

    bool operator==(const PauliSum&) const = default;

private:
    std::size_t width_;
    std::map<PauliString, Complex> terms_;
};

/// Simplified operator product a·b.
PauliSum multiply(const PauliSum& a, const PauliSum& b);

}  // namespace superrad
