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


#include "mux/scenario/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "mux/analytic/pair_distribution.hpp"
#include "mux/montecarlo/heralding_schemes.hpp"

namespace mux::scenario {

namespace {

using analytic::RouterScheme;
using montecarlo::HeraldingScheme;

std::string describe_point(const Scenario &scenario, const std::vector<double> &point) {
    std::string out;
    for (std::size_t i = 0; i < point.size(); ++i) {
        out += (i ? ", " : "") + scenario.sweeps[i].parameter + "=" + format_number(point[i]);
    }
    return out;
}

bool valid_name(std::string_view name) {
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
}

void check_value(const ParameterInfo &info, const std::string &value) {
    ParameterSet probe;
    probe.set(info.key, value);
    switch (info.type) {
        case ValueType::Real:
            (void)probe.real(info.key);
            break;
        case ValueType::Integer:
            (void)probe.integer(info.key);
            break;
        case ValueType::RealList:
            (void)probe.real_list(info.key);
            break;
        case ValueType::Choice:
        case ValueType::ChoiceList: {
            const auto items = info.type == ValueType::Choice ? std::vector<std::string>{value} : probe.choice_list(info.key);
            for (const auto &item : items) {
                if (std::find(info.choices.begin(), info.choices.end(), item) == info.choices.end()) {
                    throw ScenarioError(std::string(info.key) + ": '" + item + "' is not one of the allowed values");
                }
            }
            if (items.empty()) throw ScenarioError(std::string(info.key) + ": empty list");
            break;
        }
    }
}

std::vector<HeraldingScheme> schemes_of(const ParameterSet &params) {
    std::vector<HeraldingScheme> out;
    for (const auto &name : params.choice_list("fock.scheme")) {
        const auto scheme = montecarlo::parse_heralding_scheme(name);
        if (!scheme) throw ScenarioError("unknown heralding scheme '" + name + "'");
        out.push_back(*scheme);
    }
    return out;
}

void check_point(Kind kind, const ParameterSet &params) {
    switch (kind) {
        case Kind::Gain: {
            const auto config = array_config(params);
            config.validate();
            (void)analytic::distance_extension(config.m, params.real("qkd.l0"));
            break;
        }
        case Kind::Rates:
            require(params.integer("rate.detectors") >= 1, "rate.detectors must be >= 1");
            (void)analytic::max_repetition_rate(rate_budget(params), params.integer("rate.detectors"));
            break;
        case Kind::Heralding: {
            (void)schemes_of(params);
            const int cutoff = params.integer("fock.cutoff");
            require(cutoff >= 1 && cutoff <= 64, "fock.cutoff must lie in [1,64]");
            const double eps = params.real("fock.epsilon");
            require(eps > 0.0 && eps <= montecarlo::max_valid_epsilon(cutoff),
                    "fock.epsilon must lie in (0, " + format_number(montecarlo::max_valid_epsilon(cutoff)) +
                        "] at cutoff " + std::to_string(cutoff));
            break;
        }
        case Kind::Tally: {
            const auto config = simulation_config(params);
            require(analytic::is_power_of_two(config.array.m), "array.m must be a power of two for a router tree");
            config.validate();
            break;
        }
        case Kind::Hom:
            hom_settings(params).validate();
            break;
    }
}

/// Sweep parameters that a kind already reports under its own column name.
const std::map<std::string_view, std::string_view> &mapped_columns(Kind kind) {
    static const std::map<Kind, std::map<std::string_view, std::string_view>> maps{
        {Kind::Gain, {{"dist.mean", "mean_pairs"}, {"array.m", "m"}}},
        {Kind::Rates,
         {{"rate.rise", "rise_s"},
          {"rate.fall", "fall_s"},
          {"rate.recharge", "recharge_s"},
          {"rate.cable", "cable_s"},
          {"rate.dead_time", "dead_time_s"},
          {"rate.detectors", "detectors"}}},
        {Kind::Heralding, {{"fock.epsilon", "epsilon"}}},
        {Kind::Tally, {{"dist.mean", "mean_pairs"}, {"array.m", "m"}}},
        {Kind::Hom, {{"hom.phase", "mzi_phase"}, {"hom.delay", "delay_s"}}},
    };
    return maps.at(kind);
}

std::vector<std::string> kind_columns(Kind kind) {
    switch (kind) {
        case Kind::Gain:
            return {"m",    "mean_pairs", "p0",         "p1",
                    "p_gt_one", "q_one", "q_gt_one", "gain",
                    "gain_limit", "total_gain_path", "total_gain_hybrid", "distance_km"};
        case Kind::Rates:
            return {"rise_s",    "fall_s",           "recharge_s",          "cable_s",     "dead_time_s",
                    "detectors", "router_limited_hz", "detector_limited_hz", "max_rate_hz", "binding"};
        case Kind::Heralding:
            return {"scheme", "epsilon", "mean_pairs", "source_herald_probability", "p_output", "g2"};
        case Kind::Tally:
            return {"mean_pairs", "m",         "scheme",   "seed",     "pulses",       "triggers",
                    "transmitted", "reflected", "both",     "output_counts", "p_output", "p_output_err",
                    "g2",          "g2_err"};
        case Kind::Hom:
            return {"mzi_phase", "delay_s", "overlap", "pulses", "coincidences", "singles_b", "singles_c",
                    "coincidence_probability"};
    }
    return {};
}

Cell integer(std::uint64_t v) { return v; }

std::vector<Cell> gain_row(const ParameterSet &params) {
    const auto config = array_config(params);
    const auto &dist = config.distribution;
    auto total = [&](RouterScheme scheme) -> Cell {
        if (!analytic::is_power_of_two(config.m) || (scheme == RouterScheme::Hybrid && config.m < 2)) return {};
        return analytic::total_gain(config, scheme);
    };
    return {Cell{static_cast<std::uint64_t>(config.m)},
            dist.mean(),
            dist.p0(),
            dist.p1(),
            dist.prob_gt_one(),
            analytic::q_one(config),
            analytic::q_gt_one(config),
            analytic::gain(config.m, dist),
            analytic::gain_limit(dist),
            total(RouterScheme::PurePath),
            total(RouterScheme::Hybrid),
            analytic::distance_extension(config.m, params.real("qkd.l0"))};
}

std::vector<Cell> rates_row(const ParameterSet &params) {
    const auto budget = rate_budget(params);
    const int detectors = params.integer("rate.detectors");
    const auto report = analytic::max_repetition_rate(budget, detectors);
    return {budget.rise_time,
            budget.fall_time,
            budget.recharge_time,
            budget.cable_delay,
            budget.trigger_dead_time,
            Cell{static_cast<std::uint64_t>(detectors)},
            report.router_limited_hz,
            report.detector_limited_hz,
            report.max_rate_hz(),
            std::string(analytic::to_string(report.binding))};
}

std::vector<Cell> heralding_row(const montecarlo::HeraldingPoint &p) {
    return {std::string(montecarlo::to_string(p.scheme)), p.epsilon, p.mean_pairs, p.source_herald_probability,
            p.p_output, p.g2};
}

std::vector<Cell> tally_row(const ParameterSet &params, std::uint64_t pulses, std::uint64_t seed, unsigned threads) {
    const auto config = simulation_config(params);
    const auto t = montecarlo::simulate_pulses(config, pulses, seed, threads);
    Cell g2, g2_err;
    if (t.transmitted > 0 && t.reflected > 0) {
        const auto g = montecarlo::estimate_g2(t);
        g2 = g.value;
        g2_err = g.std_error;
    }
    return {config.array.distribution.mean(),
            Cell{static_cast<std::uint64_t>(config.array.m)},
            std::string(analytic::to_string(config.scheme)),
            integer(seed),
            integer(t.pulses),
            integer(t.triggers),
            integer(t.transmitted),
            integer(t.reflected),
            integer(t.both),
            integer(t.output_counts()),
            montecarlo::heralding_output_probability(t),
            montecarlo::heralding_output_std_error(t),
            g2,
            g2_err};
}

std::vector<Cell> hom_row(const ParameterSet &params, std::uint64_t pulses, std::uint64_t seed,
                          montecarlo::HomScanPoint &point) {
    auto settings = hom_settings(params);
    settings.pulses_per_point = pulses;
    settings.seed = seed;
    const double delay = params.real("hom.delay");
    point = montecarlo::hom_scan(std::span<const double>(&delay, 1), settings).front();
    return {point.mzi_phase,
            point.delay,
            montecarlo::mode_overlap(delay, settings),
            integer(point.pulses),
            integer(point.coincidences),
            integer(point.singles_b),
            integer(point.singles_c),
            point.coincidence_probability};
}

std::vector<std::string> metadata(const Scenario &scenario) {
    std::vector<std::string> lines{"scenario: " + scenario.name};
    if (!scenario.description.empty()) lines.push_back("description: " + scenario.description);
    lines.push_back("engine: " + std::string(to_string(scenario.engine)));
    lines.push_back("kind: " + std::string(to_string(scenario.kind)));
    if (scenario.engine == Engine::MonteCarlo) {
        lines.push_back("seed: " + std::to_string(scenario.seed));
        lines.push_back("pulses: " + std::to_string(scenario.pulses));
    }
    std::set<std::string> swept;
    for (const auto &sweep : scenario.sweeps) {
        std::string values;
        for (std::size_t i = 0; i < sweep.values.size(); ++i) values += (i ? "," : "") + format_number(sweep.values[i]);
        lines.push_back("sweep " + sweep.parameter + " = " + values);
        swept.insert(sweep.parameter);
    }
    const auto params = resolve(scenario, {});
    for (const auto &info : parameter_registry()) {
        if (!info.applies_to(scenario.kind) || swept.count(std::string(info.key))) continue;
        lines.push_back("param " + std::string(info.key) + " = " + params.text(info.key));
    }
    return lines;
}

void hom_fits(const Scenario &scenario, const std::vector<std::vector<double>> &points,
              const std::vector<montecarlo::HomScanPoint> &scan, std::vector<std::string> &lines) {
    std::size_t delay_axis = scenario.sweeps.size();
    for (std::size_t i = 0; i < scenario.sweeps.size(); ++i) {
        if (scenario.sweeps[i].parameter == "hom.delay") delay_axis = i;
    }
    if (delay_axis == scenario.sweeps.size()) return;

    std::map<std::vector<double>, std::vector<montecarlo::HomScanPoint>> groups;
    std::vector<std::vector<double>> order;
    std::map<std::vector<double>, std::size_t> first_row;
    for (std::size_t r = 0; r < points.size(); ++r) {
        auto key = points[r];
        key.erase(key.begin() + static_cast<std::ptrdiff_t>(delay_axis));
        if (!groups.count(key)) {
            order.push_back(key);
            first_row[key] = r;
        }
        groups[key].push_back(scan[r]);
    }
    for (const auto &key : order) {
        std::string label;
        for (std::size_t i = 0, k = 0; i < scenario.sweeps.size(); ++i) {
            if (i == delay_axis) continue;
            label += " " + scenario.sweeps[i].parameter + "=" + format_number(key[k++]);
        }
        const auto &group = groups[key];
        const auto params = resolve(scenario, points[first_row[key]]);
        try {
            const auto dip = montecarlo::fit_hom_dip(group, params.real("hom.coherence"));
            const auto line = montecarlo::fit_coincidence_line(group);
            lines.push_back("fit" + label + ": baseline=" + format_number(dip.baseline) +
                            " depth=" + format_number(dip.depth) + " visibility=" + format_number(dip.visibility) +
                            " visibility_error=" + format_number(dip.visibility_error));
            lines.push_back("line" + label + ": intercept=" + format_number(line.intercept) +
                            " slope=" + format_number(line.slope) + " slope_error=" + format_number(line.slope_error));
        } catch (const std::exception &e) {
            lines.push_back("fit" + label + ": unavailable (" + e.what() + ")");
        }
    }
}

void heralding_matches(const std::vector<montecarlo::HeraldingPoint> &rows, std::vector<std::string> &lines) {
    std::vector<montecarlo::HeraldingPoint> multi, pnrd;
    for (const auto &p : rows) {
        if (p.scheme == HeraldingScheme::Bucket60_4SPDC_T95) multi.push_back(p);
        if (p.scheme == HeraldingScheme::PNRD95_1SPDC) pnrd.push_back(p);
    }
    if (multi.size() < 2 || pnrd.size() < 2) return;
    std::sort(multi.begin(), multi.end(), [](const auto &a, const auto &b) { return a.epsilon < b.epsilon; });
    std::sort(pnrd.begin(), pnrd.end(), [](const auto &a, const auto &b) { return a.epsilon < b.epsilon; });
    try {
        for (const auto &m : montecarlo::compare_at_matched_output(multi, pnrd, 5)) {
            lines.push_back("matched p_output=" + format_number(m.p_output) +
                            " g2_bucket60_4spdc_t95=" + format_number(m.g2_first) +
                            " g2_pnrd95_1spdc=" + format_number(m.g2_second));
        }
    } catch (const InvalidArgument &) {
        // No overlap in output probability.
    }
}

}  // namespace

analytic::ArrayConfig array_config(const ParameterSet &params) {
    analytic::ArrayConfig c;
    c.m = params.integer("array.m");
    const auto kind = analytic::parse_distribution_kind(params.text("dist.kind"));
    require(kind.has_value(), "unknown dist.kind");
    c.distribution = analytic::PairNumberDistribution(*kind, params.real("dist.mean"));
    c.path_router_transmission = params.real("router.t0");
    c.polarization_router_transmission = params.real("router.t_pol");
    return c;
}

montecarlo::SimulationConfig simulation_config(const ParameterSet &params) {
    montecarlo::SimulationConfig c;
    c.array = array_config(params);
    c.array.routing_visibility = params.real("router.visibility");
    c.array.trigger_detector = fock::DetectorModel::bucket(params.real("trigger.efficiency"));
    c.array.output_coupling = params.real("output.coupling");
    const auto scheme = analytic::parse_router_scheme(params.text("array.scheme"));
    require(scheme.has_value(), "unknown array.scheme");
    c.scheme = *scheme;
    c.trigger_coupling = params.real("trigger.coupling");
    c.source_trigger_coupling = params.real_list("source.trigger_coupling");
    c.source_output_coupling = params.real_list("source.output_coupling");
    c.analysis_detector = fock::DetectorModel::bucket(params.real("analysis.efficiency"));
    c.dark_count_probability = params.real("noise.dark_count");
    c.trigger_dead_pulses = params.integer("noise.dead_pulses");
    return c;
}

analytic::RateBudget rate_budget(const ParameterSet &params) {
    return {params.real("rate.rise"), params.real("rate.fall"), params.real("rate.recharge"),
            params.real("rate.cable"), params.real("rate.dead_time")};
}

montecarlo::HomSettings hom_settings(const ParameterSet &params) {
    montecarlo::HomSettings s;
    s.mzi_phase = params.real("hom.phase");
    s.coherence_time = params.real("hom.coherence");
    s.routing_visibility = params.real("router.visibility");
    s.peak_overlap = params.real("hom.overlap");
    return s;
}

std::uint64_t row_seed(std::uint64_t seed, std::size_t row) {
    return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(row);
}

Scenario with_overrides(Scenario scenario, const RunOptions &options) {
    if (options.seed) {
        scenario.seed = *options.seed;
        scenario.seed_set = true;
    }
    if (options.pulses) {
        scenario.pulses = *options.pulses;
        scenario.pulses_set = true;
    }
    if (options.cutoff) scenario.fixed["fock.cutoff"] = std::to_string(*options.cutoff);
    return scenario;
}

void validate(const Scenario &scenario) {
    if (!valid_name(scenario.name)) {
        throw ScenarioError("scenario name '" + scenario.name + "' may only use letters, digits, '_', '-' and '.'");
    }
    if (scenario.engine != engine_for(scenario.kind)) {
        throw ScenarioError("kind " + std::string(to_string(scenario.kind)) + " needs the " +
                            std::string(to_string(engine_for(scenario.kind))) + " engine");
    }
    if (scenario.engine != Engine::MonteCarlo && (scenario.seed_set || scenario.pulses_set)) {
        throw ScenarioError("seed and pulses apply only to montecarlo scenarios");
    }
    if (scenario.pulses < 1) throw ScenarioError("pulses must be >= 1");

    for (const auto &[key, value] : scenario.fixed) {
        const auto *info = find_parameter(key);
        if (info == nullptr) throw ScenarioError("unknown parameter '" + key + "'");
        if (!info->applies_to(scenario.kind)) {
            throw ScenarioError("parameter " + key + " does not apply to " + std::string(to_string(scenario.kind)) +
                                " scenarios");
        }
        check_value(*info, value);
    }

    std::set<std::string> swept;
    for (const auto &sweep : scenario.sweeps) {
        const auto *info = find_parameter(sweep.parameter);
        if (info == nullptr) throw ScenarioError("unknown sweep parameter '" + sweep.parameter + "'");
        if (!info->applies_to(scenario.kind)) {
            throw ScenarioError("sweep parameter " + sweep.parameter + " does not apply to " +
                                std::string(to_string(scenario.kind)) + " scenarios");
        }
        if (info->type != ValueType::Real && info->type != ValueType::Integer) {
            throw ScenarioError("sweep parameter " + sweep.parameter + " is not numeric");
        }
        if (scenario.fixed.count(sweep.parameter) || !swept.insert(sweep.parameter).second) {
            throw ScenarioError("parameter " + sweep.parameter + " is both swept and fixed");
        }
        if (sweep.values.empty()) throw ScenarioError("sweep over " + sweep.parameter + " has an empty grid");
        for (const double v : sweep.values) {
            if (!std::isfinite(v)) throw ScenarioError("sweep over " + sweep.parameter + " has a non-finite value");
            if (info->type == ValueType::Integer && v != std::round(v)) {
                throw ScenarioError("sweep over " + sweep.parameter + " needs integer values, got " +
                                    format_number(v));
            }
        }
    }

    for (const auto &point : grid_points(scenario)) {
        try {
            check_point(scenario.kind, resolve(scenario, point));
        } catch (const std::invalid_argument &e) {
            const auto where = describe_point(scenario, point);
            throw ScenarioError(where.empty() ? std::string(e.what()) : where + ": " + e.what());
        }
    }
}

Table compute_table(const Scenario &scenario, unsigned threads) {
    validate(scenario);

    Table table;
    const auto &mapped = mapped_columns(scenario.kind);
    std::vector<std::size_t> extra;
    for (std::size_t i = 0; i < scenario.sweeps.size(); ++i) {
        if (!mapped.count(scenario.sweeps[i].parameter)) {
            extra.push_back(i);
            table.columns.push_back(scenario.sweeps[i].parameter);
        }
    }
    for (auto &c : kind_columns(scenario.kind)) table.columns.push_back(std::move(c));
    table.metadata = metadata(scenario);

    const auto points = grid_points(scenario);
    auto prefix = [&](const std::vector<double> &point) {
        std::vector<Cell> row;
        for (const auto i : extra) row.emplace_back(point[i]);
        return row;
    };
    auto append = [&](std::vector<Cell> row, std::vector<Cell> body) {
        for (auto &c : body) row.push_back(std::move(c));
        table.rows.push_back(std::move(row));
    };

    switch (scenario.kind) {
        case Kind::Gain:
            for (const auto &p : points) append(prefix(p), gain_row(resolve(scenario, p)));
            break;
        case Kind::Rates:
            for (const auto &p : points) append(prefix(p), rates_row(resolve(scenario, p)));
            break;
        case Kind::Heralding: {
            std::vector<montecarlo::HeraldingPoint> computed;
            for (const auto scheme : schemes_of(resolve(scenario, points.front()))) {
                for (const auto &p : points) {
                    const auto params = resolve(scenario, p);
                    computed.push_back(montecarlo::evaluate_heralding_scheme(scheme, params.real("fock.epsilon"),
                                                                              params.integer("fock.cutoff")));
                    append(prefix(p), heralding_row(computed.back()));
                }
            }
            if (scenario.sweeps.size() == 1 && scenario.sweeps.front().parameter == "fock.epsilon") {
                heralding_matches(computed, table.metadata);
            }
            break;
        }
        case Kind::Tally:
            for (std::size_t r = 0; r < points.size(); ++r) {
                append(prefix(points[r]),
                       tally_row(resolve(scenario, points[r]), scenario.pulses, row_seed(scenario.seed, r), threads));
            }
            break;
        case Kind::Hom: {
            std::vector<montecarlo::HomScanPoint> scan(points.size());
            for (std::size_t r = 0; r < points.size(); ++r) {
                append(prefix(points[r]), hom_row(resolve(scenario, points[r]), scenario.pulses,
                                                  row_seed(scenario.seed, r), scan[r]));
            }
            hom_fits(scenario, points, scan, table.metadata);
            break;
        }
    }
    return table;
}

std::filesystem::path output_path_for(const Scenario &scenario, const RunOptions &options) {
    if (options.output) return *options.output;
    if (!scenario.output_path.empty()) {
        const std::filesystem::path p(scenario.output_path);
        return p.is_absolute() ? p : options.output_dir / p;
    }
    return options.output_dir / (scenario.name + ".csv");
}

RunResult run_scenario(const Scenario &input, const RunOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    const auto scenario = with_overrides(input, options);
    validate(scenario);

    RunResult result;
    result.output = output_path_for(scenario, options);
    const auto parent = result.output.parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
        if (!std::filesystem::is_directory(parent)) {
            throw ScenarioError("cannot create output directory " + parent.string());
        }
    }

    const auto table = compute_table(scenario, options.threads);
    write_text_file(result.output, to_csv(table));
    result.rows = table.rows.size();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string summary_line(const Scenario &scenario, const RunResult &result) {
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.3f", result.seconds);
    const std::string seed = scenario.engine == Engine::MonteCarlo ? std::to_string(scenario.seed) : "none";
    return scenario.name + ": " + std::to_string(result.rows) + " rows, " + runtime + " s, seed " + seed + " -> " +
           result.output.string();
}

}  // namespace mux::scenario
