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

#include "mux/montecarlo/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "mux/errors.hpp"

namespace mux::montecarlo {

namespace {

void require_unit(double v, const char *what) { require(v >= 0.0 && v <= 1.0, std::string(what) + " must lie in [0,1]"); }

}  // namespace

void SimulationConfig::validate() const {
    array.validate();
    require(array.trigger_detector.kind() == fock::DetectorKind::Bucket,
            "pulse simulation supports bucket trigger detectors only");
    require_unit(trigger_coupling, "trigger coupling");
    require_unit(dark_count_probability, "dark count probability");
    require(trigger_dead_pulses >= 0, "trigger dead time must be >= 0 pulses");
    for (const auto *v : {&source_trigger_coupling, &source_output_coupling}) {
        require(v->empty() || v->size() == static_cast<std::size_t>(array.m),
                "per-source efficiency lists need exactly m entries");
        for (double x : *v) {
            require_unit(x, "per-source coupling");
        }
    }
    if (array.m > 1) {
        (void)analytic::path_router_count(array.m, scheme);
    }
}

double SimulationConfig::trigger_efficiency(int source) const {
    const double coupling =
        source_trigger_coupling.empty() ? trigger_coupling : source_trigger_coupling[static_cast<std::size_t>(source)];
    return coupling * array.trigger_detector.efficiency();
}

double SimulationConfig::output_efficiency(int source) const {
    double t = 1.0;
    if (array.m > 1) {
        const int routers = analytic::path_router_count(array.m, scheme);
        // A misrouted photon leaves through the dead port and is lost.
        const double per_router = array.path_router_transmission * analytic::intended_port_probability(array.routing_visibility);
        t = std::pow(per_router, routers);
        if (scheme == analytic::RouterScheme::Hybrid) {
            t *= array.polarization_router_transmission;
        }
    }
    const double coupling =
        source_output_coupling.empty() ? array.output_coupling : source_output_coupling[static_cast<std::size_t>(source)];
    return t * coupling;
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x6d757832u};
    return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

PulseSampler::PulseSampler(const SimulationConfig &config) : config_(config) {
    config_.validate();
    const auto &dist = config_.array.distribution;
    double cumulative = 0;
    for (int n = 0; n < 4096; ++n) {
        cumulative += dist.prob_n(n);
        pair_cdf_.push_back(cumulative);
        if (1.0 - cumulative < 1e-17 && n > 0) {
            break;
        }
    }
    pair_cdf_.back() = 1.0;
    for (int s = 0; s < config_.array.m; ++s) {
        trigger_efficiency_.push_back(config_.trigger_efficiency(s));
        output_efficiency_.push_back(config_.output_efficiency(s));
    }
    dead_remaining_.assign(static_cast<std::size_t>(config_.array.m), 0);
}

int PulseSampler::draw_pairs(double u) const {
    int n = 0;
    while (u >= pair_cdf_[static_cast<std::size_t>(n)]) {
        ++n;
    }
    return n;
}

PulseOutcome PulseSampler::sample(std::mt19937_64 &rng) {
    const int m = config_.array.m;
    PulseOutcome pulse;
    pulse.pairs_per_source.resize(static_cast<std::size_t>(m));
    int winner_pairs = 0;
    for (int s = 0; s < m; ++s) {
        const auto si = static_cast<std::size_t>(s);
        const int n = draw_pairs(uniform01(rng));
        pulse.pairs_per_source[si] = n;
        bool fired = false;
        for (int k = 0; k < n; ++k) {
            fired |= uniform01(rng) < trigger_efficiency_[si];
        }
        if (config_.dark_count_probability > 0.0) {
            fired |= uniform01(rng) < config_.dark_count_probability;
        }
        if (dead_remaining_[si] > 0) {
            --dead_remaining_[si];
            fired = false;
        } else if (fired) {
            dead_remaining_[si] = config_.trigger_dead_pulses;
        }
        if (fired && !pulse.winning_source) {
            pulse.winning_source = s;
            winner_pairs = n;
        }
    }
    if (!pulse.winning_source) {
        return pulse;
    }
    pulse.trigger_fired = true;
    // Each signal photon independently survives the route, picks a splitter
    // arm, and is registered there with the analysis efficiency.
    const double arm = 0.5 * output_efficiency_[static_cast<std::size_t>(*pulse.winning_source)];
    const double eta = config_.analysis_detector.efficiency();
    for (int k = 0; k < winner_pairs; ++k) {
        const double u = uniform01(rng);
        if (u < 2.0 * arm) {
            ++pulse.photons_at_output;
            const bool to_transmitted = u < arm;
            if (eta >= 1.0 || uniform01(rng) < eta) {
                (to_transmitted ? pulse.transmitted_click : pulse.reflected_click) = true;
            }
        }
    }
    return pulse;
}

void PulseSampler::accumulate(const PulseOutcome &pulse, CoincidenceTally &tally) const {
    ++tally.pulses;
    if (!pulse.trigger_fired) {
        return;
    }
    ++tally.triggers;
    tally.transmitted += pulse.transmitted_click;
    tally.reflected += pulse.reflected_click;
    tally.both += pulse.transmitted_click && pulse.reflected_click;
}

CoincidenceTally simulate_pulses(const SimulationConfig &config, std::uint64_t num_pulses, std::uint64_t seed,
                                 unsigned threads) {
    require(num_pulses >= 1, "num_pulses must be >= 1");
    config.validate();
    const std::uint64_t batches = (num_pulses + kPulsesPerBatch - 1) / kPulsesPerBatch;
    std::vector<CoincidenceTally> per_batch(batches);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t b = next++; b < batches; b = next++) {
            // Dead-time state restarts at every batch boundary.
            PulseSampler sampler(config);
            auto rng = make_stream(seed, b);
            const std::uint64_t count = std::min(kPulsesPerBatch, num_pulses - b * kPulsesPerBatch);
            CoincidenceTally tally;
            for (std::uint64_t i = 0; i < count; ++i) {
                sampler.accumulate(sampler.sample(rng), tally);
            }
            per_batch[b] = tally;
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, batches));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }

    CoincidenceTally total;
    for (const auto &t : per_batch) {
        total += t;
    }
    return total;
}

}  // namespace mux::montecarlo
