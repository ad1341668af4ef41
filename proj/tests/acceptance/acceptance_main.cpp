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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mux/analytic/array_model.hpp"
#include "mux/analytic/rates.hpp"
#include "mux/fock/operations.hpp"
#include "mux/montecarlo/heralding_schemes.hpp"
#include "mux/montecarlo/hom.hpp"
#include "mux/scenario/builtins.hpp"
#include "mux/scenario/runner.hpp"
#include "oracles/spdc_expm.hpp"

namespace {

using namespace mux;
using analytic::PairNumberDistribution;

int failures = 0;

template <typename... Args>
std::string format(const char *fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

void report(int id, const char *title, bool pass, const std::string &detail) {
    std::printf("%s  %2d  %-34s %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void note(const std::string &text) {
    std::printf("          %s\n", text.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void multi_pair_golden() {
    const double value = PairNumberDistribution::poisson(1.0).prob_gt_one();
    const double expected = 1.0 - 2.0 * std::exp(-1.0);
    report(1, "multi-pair probability at mean 1", std::abs(value - expected) <= 1e-6 && std::abs(value - 0.26) < 0.005,
           format("P(>1) = %.9f, closed form %.9f", value, expected));
}

void gain_saturation() {
    const auto dist = PairNumberDistribution::poisson(0.1);
    const double limit = 1.0 / (1.0 - std::exp(-0.1));
    const double g = analytic::gain(10000, dist);
    report(2, "gain saturation", std::abs(g - limit) <= 1e-6 && std::abs(limit - 10.5) < 0.05,
           format("G(10^4) = %.12f, limit %.12f", g, limit));
}

void lossy_total_gain() {
    analytic::ArrayConfig config;
    config.m = 4;
    config.distribution = PairNumberDistribution::poisson(0.01);
    config.path_router_transmission = 0.95;
    const double g = analytic::total_gain(config, analytic::RouterScheme::PurePath, analytic::GainApproximation::SmallMean);
    report(3, "lossy total gain", std::abs(g - 3.61) <= 1e-12, format("G_tot = %.15f", g));
}

void hybrid_break_even() {
    const double t = analytic::break_even_path_transmission(4, analytic::RouterScheme::Hybrid, 1.0);
    report(4, "hybrid break-even transmission", std::abs(t - 0.25) <= 1e-9, format("T0* = %.12f", t));
}

void distance_extension() {
    const double d = analytic::distance_extension(4, 21.7);
    report(5, "distance extension", std::abs(d - 30.1) <= 0.05 && std::abs(d - std::log(4.0) * 21.7) < 1e-12,
           format("%.4f km", d));
}

void rate_budget() {
    analytic::RateBudget budget;
    budget.rise_time = 5.6e-9;
    budget.fall_time = 5.6e-9;
    budget.recharge_time = 50e-9;
    budget.cable_delay = 5.5e-9;
    const auto r = analytic::max_repetition_rate(budget);
    report(6, "router repetition rate", std::abs(r.max_rate_hz() - 15e6) <= 0.5e6,
           format("%.4f MHz", r.max_rate_hz() / 1e6));
}

std::vector<std::complex<double>> vacuum_amplitudes(int cutoff) {
    std::vector<std::complex<double>> v(static_cast<std::size_t>((cutoff + 1) * (cutoff + 1)));
    v[0] = 1.0;
    return v;
}

double max_deviation(const fock::FockState &state, const std::vector<std::complex<double>> &reference) {
    double worst = 0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        worst = std::max(worst, std::abs(state.amplitudes()[i] - reference[i]));
    }
    return worst;
}

void spdc_oracle() {
    const auto start = std::chrono::steady_clock::now();
    const int cutoff = 4;
    double truncated = 0;
    double enlarged = 0;
    std::string per_eps;
    for (const double eps : {0.05, 0.1, 0.25, 0.5}) {
        const auto state = fock::apply_spdc(fock::FockState(2, cutoff), 0, 1, eps);
        const double d = max_deviation(state, oracle::evolve_two_mode(vacuum_amplitudes(cutoff), cutoff, cutoff, eps));
        truncated = std::max(truncated, d);
        enlarged = std::max(enlarged,
                            max_deviation(state, oracle::evolve_two_mode(vacuum_amplitudes(cutoff), cutoff, 60, eps)));
        per_eps += format(" %.2g:%.1e", eps, d);
    }
    const double elapsed = seconds_since(start);
    report(7, "squeezing vs matrix exponential", truncated < 1e-8 && elapsed < 1.0,
           format("max |diff| = %.2e against exp of the cutoff-4 Hamiltonian, %.3f s", truncated, elapsed));
    note("per eps:" + per_eps);
    note(format("generator exponentiated at cutoff 60, then projected: max |diff| = %.2e", enlarged));
}

void g2_values() {
    const double one = fock::g2_zero(fock::FockState::basis({1}, 4), 0);
    const double two = fock::g2_zero(fock::FockState::basis({2}, 4), 0);
    const double coherent = fock::g2_zero(fock::FockState::coherent(0.5, 8), 0);
    const double thermal = fock::g2_zero(fock::two_mode_squeezed_vacuum(0.1, 4), 0);
    const bool pass = std::abs(one) < 1e-12 && std::abs(two - 0.5) < 1e-12 && std::abs(coherent - 1) <= 1e-3 &&
                      std::abs(thermal - 2) <= 1e-2;
    report(8, "g2 reference states", pass,
           format("|1>: %.3g  |2>: %.6f  coherent: %.6f  thermal: %.6f", one, two, coherent, thermal));
}

double cell(const scenario::Table &t, std::size_t row, std::string_view column) {
    const auto &c = t.rows[row][t.column(column)];
    if (const auto *d = std::get_if<double>(&c)) return *d;
    if (const auto *u = std::get_if<std::uint64_t>(&c)) return static_cast<double>(*u);
    return std::nan("");
}

void fig3_trend() {
    const auto start = std::chrono::steady_clock::now();
    const auto scenario = *scenario::find_builtin("fig3");
    const auto table = scenario::compute_table(scenario);
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (cell(table, r, "mean_pairs") == 0.062) rows.push_back(r);
    }
    bool pass = rows.size() == 3 && scenario.pulses == 10'000'000;
    std::string detail;
    const double base = pass ? cell(table, rows[0], "output_counts") : 0;
    for (std::size_t i = 1; pass && i < rows.size(); ++i) {
        const double m = cell(table, rows[i], "m");
        const double counts = cell(table, rows[i], "output_counts");
        const double ratio = counts / base;
        const double sigma = ratio * std::sqrt(1.0 / counts + 1.0 / base);
        pass = pass && std::abs(ratio - m) <= 3 * sigma;
        detail += format("m=%g ratio %.3f±%.3f  ", m, ratio, sigma);
    }
    for (std::size_t i = 0; pass && i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const double gi = cell(table, rows[i], "g2"), gj = cell(table, rows[j], "g2");
            const double si = cell(table, rows[i], "g2_err"), sj = cell(table, rows[j], "g2_err");
            pass = pass && std::abs(gi - gj) <= 3 * std::hypot(si, sj);
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        detail += format("g2(m=%g) %.3f±%.3f ", cell(table, rows[i], "m"), cell(table, rows[i], "g2"),
                         cell(table, rows[i], "g2_err"));
    }
    report(9, "count scaling at constant g2", pass, detail);
    note(format("10^7 pulses per row, %zu rows, %.1f s", table.rows.size(), seconds_since(start)));
}

void fig4_ordering() {
    using montecarlo::HeraldingScheme;
    std::vector<double> grid;
    for (int i = 1; i <= 100; ++i) grid.push_back(0.005 * i);
    const auto multi = montecarlo::compare_heralding_schemes(grid, std::vector{HeraldingScheme::Bucket60_4SPDC_T95});
    const auto pnrd = montecarlo::compare_heralding_schemes(grid, std::vector{HeraldingScheme::PNRD95_1SPDC});
    const auto matched = montecarlo::compare_at_matched_output(multi, pnrd, 200);
    std::size_t lower = 0;
    double crossover = std::nan("");
    for (std::size_t i = 0; i < matched.size(); ++i) {
        if (matched[i].g2_first < matched[i].g2_second) {
            ++lower;
        } else {
            crossover = matched[i].p_output;
        }
    }
    const auto &mid = matched[matched.size() / 2];
    report(10, "multiplexed vs number-resolving", lower == matched.size(),
           format("multiplexed g2 lower at %zu of %zu matched outputs in [%.2e, %.2e]", lower, matched.size(),
                  matched.front().p_output, matched.back().p_output));
    note(format("number-resolving source is cleaner up to P_output = %.4f", crossover));
    note(format("mid-range P_output %.4f: g2 %.5f (multiplexed) vs %.5f (number-resolving)", mid.p_output,
                mid.g2_first, mid.g2_second));
}

void hom_complementarity() {
    std::vector<double> delays;
    for (int i = -12; i <= 12; ++i) delays.push_back(0.25e-12 * i);

    montecarlo::HomSettings ideal;
    ideal.mzi_phase = std::numbers::pi / 2;
    ideal.pulses_per_point = 1'000'000;
    ideal.seed = 11;
    const auto dip = montecarlo::fit_hom_dip(montecarlo::hom_scan(delays, ideal), ideal.coherence_time);

    montecarlo::HomSettings flat;
    flat.mzi_phase = 0.0;
    flat.routing_visibility = 0.95;
    flat.peak_overlap = 0.942;
    flat.pulses_per_point = 1'000'000;
    flat.seed = 12;
    const auto line = montecarlo::fit_coincidence_line(montecarlo::hom_scan(delays, flat));

    const bool pass = std::abs(dip.visibility - 1.0) <= 3 * dip.visibility_error &&
                      std::abs(line.slope) <= 3 * line.slope_error;
    report(11, "interference complementarity", pass,
           format("pi/2: V = %.6f±%.1e   0: slope %.3g±%.3g per s", dip.visibility, dip.visibility_error, line.slope,
                  line.slope_error));

    montecarlo::HomSettings fitted = ideal;
    fitted.peak_overlap = montecarlo::overlap_for_visibility(0.887);
    fitted.routing_visibility = 0.95;
    const auto fit = montecarlo::fit_hom_dip(montecarlo::hom_scan(delays, fitted), fitted.coherence_time);
    note(format("fitted peak overlap %.4f reproduces V = %.4f±%.4f", fitted.peak_overlap, fit.visibility,
                fit.visibility_error));
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "muxsim_acceptance";
    std::filesystem::create_directories(dir);
    bool pass = true;
    std::string detail;
    for (const auto &b : scenario::builtin_scenarios()) {
        auto s = *scenario::find_builtin(b.name);
        if (s.engine != scenario::Engine::MonteCarlo) continue;
        std::vector<std::string> outputs;
        for (const unsigned threads : {1u, 4u, 1u}) {
            scenario::RunOptions options;
            options.pulses = std::min<std::uint64_t>(s.pulses, 1'000'000);
            options.threads = threads;
            options.output = dir / (std::string(b.name) + "_" + std::to_string(outputs.size()) + ".csv");
            scenario::run_scenario(s, options);
            outputs.push_back(slurp(*options.output));
        }
        const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2] && !outputs[0].empty();
        pass = pass && same;
        detail += format("%s %s (%zu bytes)  ", std::string(b.name).c_str(), same ? "identical" : "DIFFERS",
                         outputs[0].size());
    }
    std::filesystem::remove_all(dir);
    report(12, "Monte Carlo reproducibility", pass, detail + "threads 1/4/1");
}

void signal_to_noise() {
    double worst = 0;
    for (const auto kind : {analytic::DistributionKind::Poisson, analytic::DistributionKind::Thermal}) {
        for (const double mean : {0.01, 0.1, 0.5}) {
            for (int m = 1; m <= 16; ++m) {
                analytic::ArrayConfig c;
                c.m = m;
                c.distribution = PairNumberDistribution(kind, mean);
                const double array_ratio = analytic::q_one(c) / analytic::q_gt_one(c);
                const double source_ratio = c.distribution.p1() / c.distribution.prob_gt_one();
                worst = std::max(worst, std::abs(array_ratio - source_ratio));
            }
        }
    }
    report(13, "signal-to-noise identity", worst <= 1e-12, format("max |difference| = %.2e", worst));
}

}  // namespace

int main() {
    multi_pair_golden();
    gain_saturation();
    lossy_total_gain();
    hybrid_break_even();
    distance_extension();
    rate_budget();
    spdc_oracle();
    g2_values();
    fig3_trend();
    fig4_ordering();
    hom_complementarity();
    determinism();
    signal_to_noise();
    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
