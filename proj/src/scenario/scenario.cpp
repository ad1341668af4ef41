// Copyright 2026 The muxsim Authors
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


#include "mux/scenario/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace mux::scenario {

namespace {

constexpr unsigned bit(Kind k) { return 1u << static_cast<unsigned>(k); }
constexpr unsigned kGain = bit(Kind::Gain);
constexpr unsigned kRates = bit(Kind::Rates);
constexpr unsigned kHeralding = bit(Kind::Heralding);
constexpr unsigned kTally = bit(Kind::Tally);
constexpr unsigned kHom = bit(Kind::Hom);

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_real(std::string_view text, std::string_view what) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        throw ScenarioError(std::string(what) + ": expected a finite number, got '" + std::string(text) + "'");
    }
    return value;
}

template <typename Int>
Int parse_int(std::string_view text, std::string_view what) {
    text = trim(text);
    Int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw ScenarioError(std::string(what) + ": expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::string_view to_string(Engine engine) {
    switch (engine) {
        case Engine::Analytic:
            return "analytic";
        case Engine::Fock:
            return "fock";
        case Engine::MonteCarlo:
            return "montecarlo";
    }
    return "";
}

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::Gain:
            return "gain";
        case Kind::Rates:
            return "rates";
        case Kind::Heralding:
            return "heralding";
        case Kind::Tally:
            return "tally";
        case Kind::Hom:
            return "hom";
    }
    return "";
}

Engine engine_for(Kind kind) {
    switch (kind) {
        case Kind::Gain:
        case Kind::Rates:
            return Engine::Analytic;
        case Kind::Heralding:
            return Engine::Fock;
        case Kind::Tally:
        case Kind::Hom:
            return Engine::MonteCarlo;
    }
    return Engine::Analytic;
}

const std::vector<ParameterInfo> &parameter_registry() {
    using enum ValueType;
    static const std::vector<ParameterInfo> registry{
        {"dist.kind", Choice, "poisson", kGain | kTally, {"poisson", "thermal"}, "pair-number statistics"},
        {"dist.mean", Real, "0.1", kGain | kTally, {}, "mean pairs per pulse per source"},
        {"array.m", Integer, "1", kGain | kTally, {}, "number of sources"},
        {"array.scheme", Choice, "hybrid", kTally, {"path", "hybrid"}, "router tree"},
        {"router.t0", Real, "1", kGain | kTally, {}, "path router transmission"},
        {"router.t_pol", Real, "1", kGain | kTally, {}, "polarization router transmission"},
        {"router.visibility", Real, "1", kTally | kHom, {}, "routing visibility"},
        {"trigger.efficiency", Real, "1", kTally, {}, "trigger detector efficiency"},
        {"trigger.coupling", Real, "1", kTally, {}, "source to trigger coupling"},
        {"source.trigger_coupling", RealList, "", kTally, {}, "per-source trigger coupling, overrides trigger.coupling"},
        {"source.output_coupling", RealList, "", kTally, {}, "per-source output coupling, overrides output.coupling"},
        {"output.coupling", Real, "1", kTally, {}, "source to analysis splitter coupling"},
        {"analysis.efficiency", Real, "1", kTally, {}, "analysis detector efficiency"},
        {"noise.dark_count", Real, "0", kTally, {}, "trigger dark-count probability per pulse"},
        {"noise.dead_pulses", Integer, "0", kTally, {}, "pulses a trigger stays blind after firing"},
        {"qkd.l0", Real, "21.7", kGain, {}, "link length scale, km"},
        {"rate.rise", Real, "5.6e-9", kRates, {}, "router rise time, s"},
        {"rate.fall", Real, "5.6e-9", kRates, {}, "router fall time, s"},
        {"rate.recharge", Real, "50e-9", kRates, {}, "driver recharge time, s"},
        {"rate.cable", Real, "5.5e-9", kRates, {}, "cable delay, s"},
        {"rate.dead_time", Real, "0", kRates, {}, "trigger detector dead time, s"},
        {"rate.detectors", Integer, "1", kRates, {}, "trigger detectors per source"},
        {"fock.scheme", ChoiceList, "bucket60_1spdc,pnrd95_1spdc,bucket60_4spdc_t95", kHeralding,
         {"bucket60_1spdc", "pnrd95_1spdc", "bucket60_4spdc_t95"}, "heralding schemes"},
        {"fock.epsilon", Real, "0.1", kHeralding, {}, "squeezing strength"},
        {"fock.cutoff", Integer, "4", kHeralding, {}, "photon-number cutoff"},
        {"hom.phase", Real, "0", kHom, {}, "interferometer phase, rad"},
        {"hom.delay", Real, "0", kHom, {}, "relative delay, s"},
        {"hom.coherence", Real, "1e-12", kHom, {}, "overlap width sigma, s"},
        {"hom.overlap", Real, "1", kHom, {}, "peak mode overlap"},
    };
    return registry;
}

const ParameterInfo *find_parameter(std::string_view key) {
    const auto &registry = parameter_registry();
    const auto it = std::find_if(registry.begin(), registry.end(), [&](const auto &p) { return p.key == key; });
    return it == registry.end() ? nullptr : &*it;
}

std::vector<double> parse_grid(std::string_view text) {
    text = trim(text);
    if (text.empty()) return {};
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw ScenarioError("range grid must be start:stop:step, got '" + std::string(text) + "'");
        const double start = parse_real(parts[0], "grid start");
        const double stop = parse_real(parts[1], "grid stop");
        const double step = parse_real(parts[2], "grid step");
        if (step <= 0.0) throw ScenarioError("grid step must be positive");
        if (stop < start) return {};
        const double count = std::floor((stop - start) / step + 1e-9);
        if (count > 1e6) throw ScenarioError("grid has more than a million points");
        std::vector<double> values;
        for (int i = 0; i <= static_cast<int>(count); ++i) values.push_back(start + i * step);
        return values;
    }
    std::vector<double> values;
    for (const auto token : split(text, ',')) values.push_back(parse_real(token, "grid value"));
    return values;
}

Scenario parse_scenario(std::string_view text) {
    Scenario s;
    std::map<std::string, std::string> entries;
    std::vector<std::string> order;
    int line_number = 0;
    for (const auto raw : split(text, '\n')) {
        ++line_number;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ScenarioError("line " + std::to_string(line_number) + ": expected key = value");
        }
        std::string key(trim(line.substr(0, eq)));
        if (key.empty()) throw ScenarioError("line " + std::to_string(line_number) + ": empty key");
        if (entries.count(key)) throw ScenarioError("line " + std::to_string(line_number) + ": duplicate key " + key);
        entries[key] = std::string(trim(line.substr(eq + 1)));
        order.push_back(key);
    }

    auto take = [&](const std::string &key) -> std::optional<std::string> {
        const auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        auto value = it->second;
        entries.erase(it);
        return value;
    };

    const auto name = take("name");
    if (!name || name->empty()) throw ScenarioError("scenario needs a name");
    s.name = *name;

    const auto kind = take("kind");
    if (!kind) throw ScenarioError("scenario needs a kind");
    bool known_kind = false;
    for (const auto k : {Kind::Gain, Kind::Rates, Kind::Heralding, Kind::Tally, Kind::Hom}) {
        if (*kind == to_string(k)) {
            s.kind = k;
            known_kind = true;
        }
    }
    if (!known_kind) throw ScenarioError("unknown scenario kind '" + *kind + "'");

    s.engine = engine_for(s.kind);
    if (const auto engine = take("engine")) {
        if (*engine != to_string(s.engine)) {
            throw ScenarioError("kind " + std::string(to_string(s.kind)) + " runs on the " +
                                std::string(to_string(s.engine)) + " engine, not '" + *engine + "'");
        }
    }

    if (const auto d = take("description")) s.description = *d;
    if (const auto o = take("output")) s.output_path = *o;
    if (const auto seed = take("seed")) {
        s.seed = parse_int<std::uint64_t>(*seed, "seed");
        s.seed_set = true;
    }
    if (const auto pulses = take("pulses")) {
        s.pulses = parse_int<std::uint64_t>(*pulses, "pulses");
        s.pulses_set = true;
    }

    for (const std::string prefix : {"sweep.", "sweep.inner."}) {
        const auto param = take(prefix + "param");
        const auto values = take(prefix + "values");
        if (!param && !values) continue;
        if (!param) throw ScenarioError(prefix + "values given without " + prefix + "param");
        if (!values) throw ScenarioError(prefix + "param given without " + prefix + "values");
        if (prefix == "sweep.inner." && s.sweeps.empty()) throw ScenarioError("sweep.inner needs an outer sweep");
        s.sweeps.push_back({*param, parse_grid(*values)});
    }

    for (const auto &key : order) {
        const auto it = entries.find(key);
        if (it != entries.end()) s.fixed[key] = it->second;
    }
    return s;
}

Scenario load_scenario_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioError("cannot read scenario file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

void ParameterSet::set(std::string_view key, std::string value) { values_[std::string(key)] = std::move(value); }

const std::string &ParameterSet::text(std::string_view key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ScenarioError("parameter " + std::string(key) + " is not set");
    return it->second;
}

double ParameterSet::real(std::string_view key) const { return parse_real(text(key), key); }

int ParameterSet::integer(std::string_view key) const { return parse_int<int>(text(key), key); }

std::vector<double> ParameterSet::real_list(std::string_view key) const {
    const auto &t = text(key);
    std::vector<double> out;
    if (trim(t).empty()) return out;
    for (const auto token : split(t, ',')) out.push_back(parse_real(token, key));
    return out;
}

std::vector<std::string> ParameterSet::choice_list(std::string_view key) const {
    std::vector<std::string> out;
    for (const auto token : split(text(key), ',')) out.emplace_back(token);
    return out;
}

ParameterSet resolve(const Scenario &scenario, const std::vector<double> &point) {
    ParameterSet set;
    for (const auto &p : parameter_registry()) {
        if (p.applies_to(scenario.kind)) set.set(p.key, std::string(p.default_value));
    }
    for (const auto &[key, value] : scenario.fixed) set.set(key, value);
    for (std::size_t i = 0; i < scenario.sweeps.size() && i < point.size(); ++i) {
        const auto *info = find_parameter(scenario.sweeps[i].parameter);
        if (info != nullptr && info->type == ValueType::Integer) {
            set.set(scenario.sweeps[i].parameter, std::to_string(std::llround(point[i])));
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", point[i]);
            set.set(scenario.sweeps[i].parameter, buf);
        }
    }
    return set;
}

std::vector<std::vector<double>> grid_points(const Scenario &scenario) {
    std::vector<std::vector<double>> points{{}};
    for (const auto &sweep : scenario.sweeps) {
        std::vector<std::vector<double>> next;
        for (const auto &prefix : points) {
            for (const double v : sweep.values) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        }
        points = std::move(next);
    }
    return points;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

}  // namespace mux::scenario
