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
#include <stdexcept>
#include <string>

namespace superrad {

/// Bad argument to a public operation (negative rates, zero widths, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested size exceeds a configured or hard capacity.
class CapacityError : public std::length_error {
public:
    CapacityError(const std::string& what, std::size_t requested, std::size_t limit)
        : std::length_error(what), requested_(requested), limit_(limit) {}

    std::size_t requested() const { return requested_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t requested_;
    std::size_t limit_;
};

/// An assembled operator failed an internal consistency check.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The master-equation integrator lost trace beyond tolerance.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A recorded sample broke a conservation or decomposition identity.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series never reached the requested threshold.
class NoCrossingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent scenario configuration. `line` is 1-based, 0 when
/// the problem is not tied to a particular line (e.g. a missing key).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& key, std::size_t line, const std::string& message)
        : std::runtime_error(format(key, line, message)), key_(key), line_(line) {}

    const std::string& key() const { return key_; }
    std::size_t line() const { return line_; }

private:
    static std::string format(const std::string& key, std::size_t line, const std::string& message) {
        std::string out;
        if (line > 0) {
            out += "line " + std::to_string(line) + ": ";
        }
        if (!key.empty()) {
            out += "'" + key + "': ";
        }
        return out + message;
    }

    std::string key_;
    std::size_t line_;
};

}  // namespace superrad
