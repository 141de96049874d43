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

#include "superrad/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "superrad/errors.hpp"

namespace superrad {

namespace {

// i^k for k taken mod 4.
Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void require_same_width(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw InvalidArgument(fmt::format("{}: width mismatch ({} vs {})", what, a, b));
    }
}

}  // namespace

char to_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

PauliString::PauliString(std::size_t width) : width_(width) {
    if (width > kMaxPauliWidth) {
        throw CapacityError(fmt::format("Pauli string width {} exceeds {}", width, kMaxPauliWidth), width,
                            kMaxPauliWidth);
    }
}

PauliString PauliString::from_letters(std::string_view letters) {
    PauliString s(letters.size());
    for (std::size_t q = 0; q < letters.size(); ++q) {
        switch (letters[q]) {
            case 'I': break;
            case 'X': s.set(q, Pauli::X); break;
            case 'Y': s.set(q, Pauli::Y); break;
            case 'Z': s.set(q, Pauli::Z); break;
            default:
                throw InvalidArgument(fmt::format("invalid Pauli letter '{}' in \"{}\"", letters[q], letters));
        }
    }
    return s;
}

PauliString PauliString::from_masks(std::size_t width, std::uint64_t x, std::uint64_t z) {
    PauliString s(width);
    const std::uint64_t valid = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    if ((x | z) & ~valid) {
        throw InvalidArgument(fmt::format("masks exceed width {}", width));
    }
    s.x_ = x;
    s.z_ = z;
    return s;
}

std::size_t PauliString::y_count() const { return static_cast<std::size_t>(std::popcount(x_ & z_)); }

Pauli PauliString::at(std::size_t qubit) const {
    const bool x = (x_ & bit(qubit)) != 0;
    const bool z = (z_ & bit(qubit)) != 0;
    if (x) {
        return z ? Pauli::Y : Pauli::X;
    }
    return z ? Pauli::Z : Pauli::I;
}

void PauliString::set(std::size_t qubit, Pauli p) {
    if (qubit >= width_) {
        throw InvalidArgument(fmt::format("qubit {} out of range for width {}", qubit, width_));
    }
    const std::uint64_t m = bit(qubit);
    x_ &= ~m;
    z_ &= ~m;
    if (p == Pauli::X || p == Pauli::Y) {
        x_ |= m;
    }
    if (p == Pauli::Z || p == Pauli::Y) {
        z_ |= m;
    }
}

std::string PauliString::letters() const {
    std::string out(width_, 'I');
    for (std::size_t q = 0; q < width_; ++q) {
        out[q] = to_char(at(q));
    }
    return out;
}

PauliString PauliString::tensor(const PauliString& rhs) const {
    PauliString out(width_ + rhs.width_);
    const unsigned shift = static_cast<unsigned>(rhs.width_);
    // A shift by 64 is undefined; only reachable when this string is empty.
    out.x_ = (shift == 64 ? 0 : x_ << shift) | rhs.x_;
    out.z_ = (shift == 64 ? 0 : z_ << shift) | rhs.z_;
    return out;
}

Complex PauliString::phase_on(std::uint64_t basis) const {
    Complex phase = i_power(static_cast<int>(y_count()));
    if (std::popcount(basis & z_) & 1) {
        phase = -phase;
    }
    return phase;
}

std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b) {
    require_same_width(a.width(), b.width(), "multiply");
    // Write each string as i^{#Y} X^x Z^z. Moving Z^{z_a} past X^{x_b} costs
    // (-1)^{popcount(z_a & x_b)}.
    const std::uint64_t x = a.x_mask() ^ b.x_mask();
    const std::uint64_t z = a.z_mask() ^ b.z_mask();
    const int ya = std::popcount(a.x_mask() & a.z_mask());
    const int yb = std::popcount(b.x_mask() & b.z_mask());
    const int yc = std::popcount(x & z);
    const int swaps = std::popcount(a.z_mask() & b.x_mask());
    const PauliString out = PauliString::from_masks(a.width(), x, z);
    return {i_power(ya + yb - yc + 2 * swaps), out};
}

bool commutes(const PauliString& a, const PauliString& b) {
    require_same_width(a.width(), b.width(), "commutes");
    const int anti = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
    return (anti & 1) == 0;
}

PauliSum PauliSum::identity(std::size_t width, Complex coefficient) {
    PauliSum s(width);
    s.add(PauliString(width), coefficient);
    return s;
}

PauliSum PauliSum::from_letters(std::string_view letters, Complex coefficient) {
    PauliSum s(letters.size());
    s.add(PauliString::from_letters(letters), coefficient);
    return s;
}

std::vector<PauliTerm> PauliSum::terms() const {
    std::vector<PauliTerm> out;
    out.reserve(terms_.size());
    for (const auto& [s, c] : terms_) {
        out.push_back({c, s});
    }
    return out;
}

Complex PauliSum::coefficient(const PauliString& s) const {
    const auto it = terms_.find(s);
    return it == terms_.end() ? Complex{} : it->second;
}

void PauliSum::add(const PauliString& s, Complex coefficient) {
    require_same_width(width_, s.width(), "PauliSum::add");
    terms_[s] += coefficient;
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
    require_same_width(width_, rhs.width_, "PauliSum::operator+=");
    for (const auto& [s, c] : rhs.terms_) {
        terms_[s] += c;
    }
    return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& rhs) {
    require_same_width(width_, rhs.width_, "PauliSum::operator-=");
    for (const auto& [s, c] : rhs.terms_) {
        terms_[s] -= c;
    }
    return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
    for (auto& entry : terms_) {
        entry.second *= scale;
    }
    return *this;
}

PauliSum PauliSum::simplified(double threshold) const {
    PauliSum out(width_);
    for (const auto& [s, c] : terms_) {
        if (std::abs(c) >= threshold) {
            out.terms_.emplace(s, c);
        }
    }
    return out;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(width_);
    for (const auto& [s, c] : terms_) {
        out.terms_.emplace(s, std::conj(c));
    }
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto& entry : terms_) {
        if (std::abs(entry.second.imag()) > tol) {
            return false;
        }
    }
    return true;
}

bool PauliSum::is_diagonal() const {
    for (const auto& entry : terms_) {
        if (!entry.first.is_diagonal()) {
            return false;
        }
    }
    return true;
}

PauliSum PauliSum::real_part() const {
    PauliSum out(width_);
    for (const auto& [s, c] : terms_) {
        out.terms_.emplace(s, Complex{c.real(), 0.0});
    }
    return out;
}

PauliSum PauliSum::tensor(const PauliSum& rhs) const {
    PauliSum out(width_ + rhs.width_);
    for (const auto& [sa, ca] : terms_) {
        for (const auto& [sb, cb] : rhs.terms_) {
            out.terms_[sa.tensor(sb)] += ca * cb;
        }
    }
    return out;
}

PauliSum PauliSum::embedded(std::size_t total_width, std::size_t offset) const {
    if (offset + width_ > total_width) {
        throw InvalidArgument(
            fmt::format("cannot embed width {} at offset {} into width {}", width_, offset, total_width));
    }
    const PauliSum before = identity(offset);
    const PauliSum after = identity(total_width - offset - width_);
    return before.tensor(*this).tensor(after);
}

std::string PauliSum::to_text() const {
    std::string out;
    for (const auto& [s, c] : terms_) {
        out += fmt::format("{} {} {}\n", c.real(), c.imag(), s.letters());
    }
    return out;
}

PauliSum PauliSum::from_text(std::string_view text, std::size_t width) {
    PauliSum out(width);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::string re;
        std::string im;
        std::string letters;
        std::string extra;
        if (!(fields >> re >> im >> letters) || (fields >> extra)) {
            throw InvalidArgument(fmt::format("line {}: expected '<re> <im> <letters>'", line_no));
        }
        double values[2];
        const std::string* parts[2] = {&re, &im};
        for (int k = 0; k < 2; ++k) {
            const auto& p = *parts[k];
            const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), values[k]);
            if (ec != std::errc{} || ptr != p.data() + p.size()) {
                throw InvalidArgument(fmt::format("line {}: bad number '{}'", line_no, p));
            }
        }
        out.add(PauliString::from_letters(letters), {values[0], values[1]});
    }
    return out;
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
    require_same_width(a.width(), b.width(), "multiply");
    PauliSum out(a.width());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            auto [phase, s] = multiply(ta.string, tb.string);
            out.add(s, phase * ta.coefficient * tb.coefficient);
        }
    }
    return out.simplified();
}

}  // namespace superrad
