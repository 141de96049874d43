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

#include "superrad/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "superrad/boson_encoding.hpp"
#include "superrad/errors.hpp"

namespace superrad {

namespace {

struct KeyInfo {
    std::string_view key;
    std::string_view section;
};

constexpr KeyInfo kKeys[] = {
    {"scenario", "scenario"},
    {"n_atoms", "atoms"},
    {"gamma0", "atoms"},
    {"atom_freq_center", "atoms"},
    {"atom_freq_spacing", "atoms"},
    {"positions", "atoms"},
    {"dr_over_lambda", "atoms"},
    {"mode_count", "modes"},
    {"mode_window_width", "modes"},
    {"mode_qubits", "modes"},
    {"coupling_convention", "modes"},
    {"coupling_g", "modes"},
    {"total_time_lifetimes", "run"},
    {"trotter_steps", "run"},
    {"sample_stride", "run"},
    {"backend", "run"},
    {"out_dir", "output"},
};

const KeyInfo* find_key(std::string_view key) {
    for (const auto& k : kKeys) {
        if (k.key == key) {
            return &k;
        }
    }
    return nullptr;
}

bool known_section(std::string_view name) {
    return std::any_of(std::begin(kKeys), std::end(kKeys), [&](const KeyInfo& k) { return k.section == name; });
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
};

std::vector<std::string_view> split_list(const Entry& e) {
    std::string_view v = trim(e.value);
    std::vector<std::string_view> items;
    if (v.empty()) {
        throw ConfigError(e.key, e.line, "missing value");
    }
    if (v.front() != '[') {
        items.push_back(v);
        return items;
    }
    if (v.back() != ']') {
        throw ConfigError(e.key, e.line, "unterminated list");
    }
    v = trim(v.substr(1, v.size() - 2));
    if (v.empty()) {
        throw ConfigError(e.key, e.line, "empty list");
    }
    while (true) {
        const auto comma = v.find(',');
        const auto item = trim(v.substr(0, comma));
        if (item.empty()) {
            throw ConfigError(e.key, e.line, "empty list element");
        }
        items.push_back(item);
        if (comma == std::string_view::npos) {
            break;
        }
        v = v.substr(comma + 1);
    }
    return items;
}

double to_real(const Entry& e, std::string_view text) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(out)) {
        throw ConfigError(e.key, e.line, fmt::format("expected a real number, got '{}'", text));
    }
    return out;
}

std::size_t to_count(const Entry& e, std::string_view text) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError(e.key, e.line, fmt::format("expected a non-negative integer, got '{}'", text));
    }
    return out;
}

std::vector<double> reals(const Entry& e) {
    std::vector<double> out;
    for (auto item : split_list(e)) {
        out.push_back(to_real(e, item));
    }
    return out;
}

std::vector<std::size_t> counts(const Entry& e) {
    std::vector<std::size_t> out;
    for (auto item : split_list(e)) {
        out.push_back(to_count(e, item));
    }
    return out;
}

double real(const Entry& e) {
    const auto v = reals(e);
    if (v.size() != 1 || trim(e.value).front() == '[') {
        throw ConfigError(e.key, e.line, "expected a single value, not a list");
    }
    return v.front();
}

std::size_t count(const Entry& e) {
    const auto v = counts(e);
    if (v.size() != 1 || trim(e.value).front() == '[') {
        throw ConfigError(e.key, e.line, "expected a single value, not a list");
    }
    return v.front();
}

std::string word(const Entry& e) {
    const auto v = trim(e.value);
    if (v.empty()) {
        throw ConfigError(e.key, e.line, "missing value");
    }
    return std::string(v);
}

void apply(ScenarioConfig& c, const Entry& e) {
    const std::string_view k = e.key;
    if (k == "scenario") {
        // already consumed
    } else if (k == "n_atoms") {
        c.n_atoms = counts(e);
    } else if (k == "gamma0") {
        c.gamma0 = reals(e);
    } else if (k == "atom_freq_center") {
        c.atom_freq_center = real(e);
    } else if (k == "atom_freq_spacing") {
        c.atom_freq_spacing = real(e);
    } else if (k == "positions") {
        c.positions = reals(e);
    } else if (k == "dr_over_lambda") {
        c.dr_over_lambda = reals(e);
    } else if (k == "mode_count") {
        c.mode_count = count(e);
    } else if (k == "mode_window_width") {
        c.mode_window_width = real(e);
    } else if (k == "mode_qubits") {
        c.mode_qubits = counts(e);
    } else if (k == "coupling_convention") {
        try {
            c.coupling_convention = parse_coupling_convention(word(e));
        } catch (const InvalidArgument&) {
            throw ConfigError(e.key, e.line,
                              fmt::format("expected g2_times_delta or g2_over_delta, got '{}'", word(e)));
        }
    } else if (k == "coupling_g") {
        if (word(e) == "auto") {
            c.coupling_g.reset();
        } else {
            c.coupling_g = real(e);
        }
    } else if (k == "total_time_lifetimes") {
        c.total_time_lifetimes = real(e);
    } else if (k == "trotter_steps") {
        c.trotter_steps = counts(e);
    } else if (k == "sample_stride") {
        c.sample_stride = count(e);
    } else if (k == "backend") {
        const auto b = parse_backend(word(e));
        if (!b) {
            throw ConfigError(e.key, e.line, fmt::format("expected trotter, exact or lindblad, got '{}'", word(e)));
        }
        c.backend = *b;
    } else if (k == "out_dir") {
        c.out_dir = word(e);
    }
}

template <class T>
std::string list_text(const std::vector<T>& v) {
    if (v.size() == 1) {
        return fmt::format("{}", v.front());
    }
    return fmt::format("[{}]", fmt::join(v, ", "));
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::HomogeneousScaling:
            return "homogeneous_scaling";
        case ScenarioKind::InhomogeneousGammaSweep:
            return "inhomogeneous_gamma_sweep";
        case ScenarioKind::SpatialDilution:
            return "spatial_dilution";
        case ScenarioKind::TrotterError:
            return "trotter_error";
        case ScenarioKind::JaynesCummings:
            return "jaynes_cummings";
    }
    return "unknown";
}

std::string_view to_string(Backend backend) {
    switch (backend) {
        case Backend::Trotter:
            return "trotter";
        case Backend::Exact:
            return "exact";
        case Backend::Lindblad:
            return "lindblad";
    }
    return "unknown";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
    for (auto k : kAllScenarios) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<Backend> parse_backend(std::string_view name) {
    for (auto b : {Backend::Trotter, Backend::Exact, Backend::Lindblad}) {
        if (to_string(b) == name) {
            return b;
        }
    }
    return std::nullopt;
}

std::size_t ScenarioConfig::qubits_for_mode(std::size_t k) const {
    return mode_qubits.size() == 1 ? mode_qubits.front() : mode_qubits.at(k);
}

ScenarioConfig default_config(ScenarioKind kind) {
    ScenarioConfig c;
    c.scenario = kind;
    switch (kind) {
        case ScenarioKind::HomogeneousScaling:
            c.n_atoms = {1, 2, 3, 4, 5, 6};
            c.gamma0 = {8.0};
            c.mode_qubits = {1, 2, 2, 2, 2, 2, 1};
            c.out_dir = "out/homogeneous_scaling";
            break;
        case ScenarioKind::InhomogeneousGammaSweep:
            c.n_atoms = {4};
            c.gamma0 = {0.1, 2.0, 3.0, 5.0};
            c.atom_freq_spacing = 7.5;
            c.mode_count = 11;
            c.mode_window_width = 37.5;
            c.out_dir = "out/inhomogeneous_gamma_sweep";
            break;
        case ScenarioKind::SpatialDilution:
            c.n_atoms = {2, 4};
            c.gamma0 = {8.0};
            c.mode_qubits = {1, 1, 2, 2, 2, 1, 1};
            c.dr_over_lambda = {0.0, 0.1875, 0.375, 0.5625, 0.75, 0.9375, 1.125, 1.3125, 1.5};
            c.out_dir = "out/spatial_dilution";
            break;
        case ScenarioKind::TrotterError:
            c.n_atoms = {4};
            c.gamma0 = {8.0};
            c.trotter_steps = {100, 200, 400, 800, 1600};
            c.sample_stride = 1;
            c.out_dir = "out/trotter_error";
            break;
        case ScenarioKind::JaynesCummings:
            c.n_atoms = {1};
            c.gamma0 = {1.0};
            c.mode_count = 1;
            c.mode_window_width = 1.0;
            c.coupling_g = 0.5;
            // Three vacuum Rabi periods at g = 0.5 with T in units of 1/Γ₀.
            c.total_time_lifetimes = 6.0 * 3.14159265358979;
            c.trotter_steps = {4000};
            c.sample_stride = 4;
            c.out_dir = "out/jaynes_cummings";
            break;
    }
    return c;
}

std::string_view describe(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::HomogeneousScaling:
            return "identical co-located atoms in a 7-mode bath; peak intensity and saturation versus N_A";
        case ScenarioKind::InhomogeneousGammaSweep:
            return "4 detuned atoms, 11 modes; crossover from independent to cooperative emission versus gamma0";
        case ScenarioKind::SpatialDilution:
            return "atoms on a line; maximum coherence versus spacing dr/lambda0";
        case ScenarioKind::TrotterError:
            return "energy conservation of the Trotter evolution versus step count, with exact baseline";
        case ScenarioKind::JaynesCummings:
            return "one atom and one resonant mode; vacuum Rabi oscillation";
    }
    return "";
}

void validate(const ScenarioConfig& c) {
    auto fail = [](std::string_view key, const std::string& msg) { throw ConfigError(std::string(key), 0, msg); };
    if (c.n_atoms.empty()) {
        fail("n_atoms", "sweep list must not be empty");
    }
    for (auto n : c.n_atoms) {
        if (n == 0) {
            fail("n_atoms", "must be at least 1");
        }
    }
    if (c.gamma0.empty()) {
        fail("gamma0", "sweep list must not be empty");
    }
    for (auto g : c.gamma0) {
        if (!(g > 0.0)) {
            fail("gamma0", fmt::format("must be positive, got {}", g));
        }
    }
    if (!(c.atom_freq_center > 0.0)) {
        fail("atom_freq_center", "must be positive");
    }
    if (!(c.atom_freq_spacing >= 0.0)) {
        fail("atom_freq_spacing", "must be non-negative");
    }
    for (auto n : c.n_atoms) {
        if (c.atom_freq_center - 0.5 * static_cast<double>(n - 1) * c.atom_freq_spacing <= 0.0) {
            fail("atom_freq_spacing", fmt::format("pushes the lowest of {} atom frequencies to zero or below", n));
        }
    }
    if (c.positions) {
        if (c.n_atoms.size() != 1 || c.positions->size() != c.n_atoms.front()) {
            fail("positions", "needs exactly one n_atoms value and one position per atom");
        }
    }
    if (c.dr_over_lambda.empty()) {
        fail("dr_over_lambda", "sweep list must not be empty");
    }
    for (auto d : c.dr_over_lambda) {
        if (!(d >= 0.0)) {
            fail("dr_over_lambda", fmt::format("must be non-negative, got {}", d));
        }
    }
    if (c.mode_count == 0) {
        fail("mode_count", "must be at least 1");
    }
    if (!(c.mode_window_width > 0.0)) {
        fail("mode_window_width", "must be positive");
    }
    if (c.atom_freq_center - 0.5 * c.mode_window_width <= 0.0 && c.mode_count > 1) {
        fail("mode_window_width", "window reaches zero frequency");
    }
    if (c.mode_qubits.size() != 1 && c.mode_qubits.size() != c.mode_count) {
        fail("mode_qubits", fmt::format("needs 1 or {} entries, got {}", c.mode_count, c.mode_qubits.size()));
    }
    for (auto q : c.mode_qubits) {
        if (q == 0 || q > kMaxModeQubits) {
            fail("mode_qubits", fmt::format("each entry must be in 1..{}, got {}", kMaxModeQubits, q));
        }
    }
    if (c.coupling_g && !(*c.coupling_g > 0.0)) {
        fail("coupling_g", "must be positive");
    }
    if (!(c.total_time_lifetimes > 0.0)) {
        fail("total_time_lifetimes", "must be positive");
    }
    if (c.trotter_steps.empty()) {
        fail("trotter_steps", "sweep list must not be empty");
    }
    for (auto s : c.trotter_steps) {
        if (s == 0) {
            fail("trotter_steps", "must be at least 1");
        }
    }
    if (c.sample_stride == 0) {
        fail("sample_stride", "must be at least 1");
    }
    if (c.out_dir.empty()) {
        fail("out_dir", "must not be empty");
    }
}

ScenarioConfig parse_config(std::string_view text) {
    std::vector<Entry> entries;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::string section;
    std::size_t line_no = 0;
    std::istringstream stream{std::string(text)};
    for (std::string raw; std::getline(stream, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("", line_no, "malformed section header");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!known_section(section)) {
                throw ConfigError("", line_no, fmt::format("unknown section [{}]", section));
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(line), line_no, "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const auto* info = find_key(key);
        if (info == nullptr) {
            throw ConfigError(key, line_no, "unknown key");
        }
        if (!section.empty() && info->section != section) {
            throw ConfigError(key, line_no, fmt::format("belongs in section [{}], found in [{}]", info->section, section));
        }
        if (auto it = seen.find(key); it != seen.end()) {
            throw ConfigError(key, line_no, fmt::format("duplicate key (first set on line {})", it->second));
        }
        seen.emplace(key, line_no);
        entries.push_back({key, std::string(trim(line.substr(eq + 1))), line_no});
    }

    const auto scenario_entry =
        std::find_if(entries.begin(), entries.end(), [](const Entry& e) { return e.key == "scenario"; });
    if (scenario_entry == entries.end()) {
        throw ConfigError("scenario", 0, "missing required key");
    }
    const auto kind = parse_scenario_kind(word(*scenario_entry));
    if (!kind) {
        throw ConfigError("scenario", scenario_entry->line,
                          fmt::format("unknown scenario '{}'", word(*scenario_entry)));
    }
    ScenarioConfig config = default_config(*kind);
    for (const auto& e : entries) {
        apply(config, e);
    }
    try {
        validate(config);
    } catch (const ConfigError& err) {
        const auto it = seen.find(err.key());
        const std::size_t line = it == seen.end() ? 0 : it->second;
        // Strip the key prefix the first throw added and re-raise with the line.
        std::string msg = err.what();
        const std::string prefix = "'" + err.key() + "': ";
        if (msg.rfind(prefix, 0) == 0) {
            msg = msg.substr(prefix.size());
        }
        throw ConfigError(err.key(), line, msg);
    }
    return config;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("", 0, fmt::format("cannot read config file '{}'", path));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string emit_config(const ScenarioConfig& c) {
    std::string out;
    auto put = [&](std::string_view key, const std::string& value) { out += fmt::format("{} = {}\n", key, value); };
    out += "[scenario]\n";
    put("scenario", std::string(to_string(c.scenario)));
    out += "\n[atoms]\n";
    put("n_atoms", list_text(c.n_atoms));
    put("gamma0", list_text(c.gamma0));
    put("atom_freq_center", fmt::format("{}", c.atom_freq_center));
    put("atom_freq_spacing", fmt::format("{}", c.atom_freq_spacing));
    if (c.positions) {
        put("positions", fmt::format("[{}]", fmt::join(*c.positions, ", ")));
    }
    put("dr_over_lambda", list_text(c.dr_over_lambda));
    out += "\n[modes]\n";
    put("mode_count", fmt::format("{}", c.mode_count));
    put("mode_window_width", fmt::format("{}", c.mode_window_width));
    put("mode_qubits", list_text(c.mode_qubits));
    put("coupling_convention", std::string(to_string(c.coupling_convention)));
    put("coupling_g", c.coupling_g ? fmt::format("{}", *c.coupling_g) : std::string("auto"));
    out += "\n[run]\n";
    put("total_time_lifetimes", fmt::format("{}", c.total_time_lifetimes));
    put("trotter_steps", list_text(c.trotter_steps));
    put("sample_stride", fmt::format("{}", c.sample_stride));
    put("backend", std::string(to_string(c.backend)));
    out += "\n[output]\n";
    put("out_dir", c.out_dir);
    return out;
}

}  // namespace superrad
