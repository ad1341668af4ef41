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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "mux/errors.hpp"
#include "mux/fock/operations.hpp"
#include "oracles/spdc_expm.hpp"

using namespace mux;
using namespace mux::fock;

namespace {

FockState random_state(std::size_t modes, int cutoff, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    FockState shape(modes, cutoff);
    std::vector<Complex> amps(shape.dimension());
    double norm = 0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return FockState::from_amplitudes(modes, cutoff, std::move(amps));
}

std::vector<Complex> to_vector(const FockState &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

double max_deviation(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("fock_state basis indexing") {
    auto s = FockState::basis({2, 1, 0}, 3);
    CHECK(s.dimension() == 64);
    CHECK(s.probability({2, 1, 0}) == 1.0);
    CHECK(s.index_of(std::vector<int>{2, 1, 0}) == 2 * 16 + 1 * 4);
    CHECK(s.occupations(36) == std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(FockState::basis({5}, 4), InvalidArgument);
    CHECK_THROWS_AS(FockState::from_amplitudes(2, 4, std::vector<Complex>(24)), InvalidArgument);
}

TEST_CASE("apply_spdc is identity at zero coupling") {
    auto out = apply_spdc(FockState(2), 0, 1, 0.0);
    CHECK(out.probability({0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("apply_spdc on vacuum gives thermal pair statistics") {
    const double eps = 0.25;
    const auto out = two_mode_squeezed_vacuum(eps);
    const double t2 = std::pow(std::tanh(eps), 2);
    double z = 0;
    for (int n = 0; n <= 4; ++n) {
        z += std::pow(t2, n);
    }
    for (int n = 0; n <= 4; ++n) {
        CHECK(out.probability({n, n}) == doctest::Approx(std::pow(t2, n) / z).epsilon(1e-12));
    }
    // sinh^2(0.25) = 0.0638; the cutoff only removes weight of order tanh^10.
    const double mean = mean_photon_number(MixedStateEnsemble(out), 0);
    CHECK(std::abs(mean - mean_pairs_from_epsilon(eps)) < 2e-5);
    CHECK(mean_pairs_from_epsilon(eps) == doctest::Approx(0.0638).epsilon(2e-3));
}

TEST_CASE("squeezing for the reported mean pair number 0.062") {
    const double eps = epsilon_from_mean_pairs(0.062);
    CHECK(mean_pairs_from_epsilon(eps) == doctest::Approx(0.062).epsilon(1e-12));
    const double mean = mean_photon_number(MixedStateEnsemble(two_mode_squeezed_vacuum(eps)), 1);
    CHECK(std::abs(mean - 0.062) < 1e-5);
}

TEST_CASE("apply_spdc matches the matrix exponential oracle") {
    SUBCASE("vacuum") {
        for (double eps : {0.05, 0.1, 0.25, 0.5}) {
            const auto closed = to_vector(two_mode_squeezed_vacuum(eps, 4));
            std::vector<Complex> vac(25);
            vac[0] = 1.0;
            const auto ref = oracle::evolve_two_mode(vac, 4, 60, eps);
            CHECK(max_deviation(closed, ref) < 1e-10);
        }
    }
    SUBCASE("arbitrary inputs") {
        std::mt19937_64 rng(7);
        for (double eps : {0.1, 0.3, 0.5}) {
            const auto in = random_state(2, 4, rng);
            const auto closed = to_vector(apply_spdc(in, 0, 1, eps));
            const auto ref = oracle::evolve_two_mode(to_vector(in), 4, 60, eps);
            CHECK(max_deviation(closed, ref) < 1e-10);
        }
    }
    SUBCASE("mode order and spectators") {
        // Squeezing modes (2, 0) of a 3-mode state with mode 1 as a spectator in |1>.
        const auto out = apply_spdc(FockState::basis({0, 1, 0}), 2, 0, 0.3);
        const auto ref = two_mode_squeezed_vacuum(0.3);
        for (int n = 0; n <= 4; ++n) {
            CHECK(std::abs(out.amplitude({n, 1, n}) - ref.amplitude({n, n})) < 1e-14);
        }
    }
}

TEST_CASE("apply_spdc rejects bad input") {
    CHECK_THROWS_AS(apply_spdc(FockState(2), 1, 1, 0.1), InvalidArgument);
    CHECK_THROWS_AS(apply_spdc(FockState(2), 0, 1, -0.1), InvalidArgument);
    CHECK_THROWS_AS(apply_spdc(FockState::from_amplitudes(2, 1, {1.0, 1.0, 0.0, 0.0}), 0, 1, 0.1), InvalidArgument);
}

TEST_CASE("beam splitter examples") {
    CHECK(apply_beamsplitter(FockState::basis({1, 0}), 0, 1, 1.0).probability({1, 0}) ==
          doctest::Approx(1.0));
    const auto hom = apply_beamsplitter(FockState::basis({1, 1}), 0, 1, 0.5);
    CHECK(hom.probability({1, 1}) < 1e-30);
    CHECK(hom.probability({2, 0}) == doctest::Approx(0.5));
    const auto two = apply_beamsplitter(FockState::basis({2, 0}), 0, 1, 0.5);
    CHECK(two.probability({2, 0}) == doctest::Approx(0.25));
    CHECK(two.probability({1, 1}) == doctest::Approx(0.5));
    CHECK(two.probability({0, 2}) == doctest::Approx(0.25));
    CHECK_THROWS_AS(apply_beamsplitter(FockState::basis({1, 0}), 0, 1, 1.2), InvalidArgument);
    CHECK_THROWS_AS(apply_beamsplitter(FockState::basis({1, 0}), 0, 0, 0.5), InvalidArgument);
}

TEST_CASE("beam splitter grows the cutoff instead of truncating") {
    const auto out = apply_beamsplitter(FockState::basis({3, 3}, 3), 0, 1, 0.5);
    CHECK(out.cutoff() == 6);
    CHECK(out.is_normalized());
}

TEST_CASE("property: unitaries preserve norm and photon number") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u;
    for (int trial = 0; trial < 25; ++trial) {
        const auto in = random_state(3, 2, rng);
        const double t = u(rng);
        const double phi = 6.0 * u(rng);
        const auto out = apply_phase_shift(apply_beamsplitter(in, 0, 2, t, phi), 1, 2.0 * phi);
        CHECK(std::abs(out.norm_squared() - 1.0) < 1e-10);
        // Weight in every total-photon-number sector of modes (0, 2) is unchanged.
        std::vector<double> before(5), after(9);
        for (std::size_t i = 0; i < in.dimension(); ++i) {
            before[static_cast<std::size_t>(in.occupation(i, 0) + in.occupation(i, 2))] += std::norm(in.amplitudes()[i]);
        }
        for (std::size_t i = 0; i < out.dimension(); ++i) {
            after[static_cast<std::size_t>(out.occupation(i, 0) + out.occupation(i, 2))] += std::norm(out.amplitudes()[i]);
        }
        for (std::size_t n = 0; n < before.size(); ++n) {
            CHECK(std::abs(before[n] - after[n]) < 1e-12);
        }
        const double eps = 0.5 * u(rng);
        CHECK(std::abs(apply_spdc(in, 1, 2, eps).norm_squared() - 1.0) < 1e-10);
    }
}

TEST_CASE("loss examples") {
    const auto keep = apply_loss(FockState::basis({1}), 0, 1.0);
    CHECK(keep.size() == 1);
    CHECK(number_distribution(keep, 0)[1] == doctest::Approx(1.0));

    const auto thin = number_distribution(apply_loss(FockState::basis({1}), 0, 0.95), 0);
    CHECK(thin[1] == doctest::Approx(0.95));
    CHECK(thin[0] == doctest::Approx(0.05));

    const auto half = number_distribution(apply_loss(FockState::basis({2}), 0, 0.5), 0);
    CHECK(half[2] == doctest::Approx(0.25));
    CHECK(half[1] == doctest::Approx(0.5));
    CHECK(half[0] == doctest::Approx(0.25));

    CHECK_THROWS_AS(apply_loss(FockState::basis({1}), 0, -0.1), InvalidArgument);
}

TEST_CASE("property: loss composes multiplicatively on number marginals") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u;
    for (int trial = 0; trial < 10; ++trial) {
        const auto in = random_state(2, 4, rng);
        const double t1 = u(rng), t2 = u(rng);
        const auto twice = number_distribution(apply_loss(apply_loss(in, 1, t1), 1, t2), 1);
        const auto once = number_distribution(apply_loss(in, 1, t1 * t2), 1);
        for (std::size_t n = 0; n < once.size(); ++n) {
            CHECK(std::abs(twice[n] - once[n]) < 1e-12);
        }
        const auto ident = number_distribution(apply_loss(in, 0, 1.0), 0);
        const auto direct = number_distribution(in, 0);
        for (std::size_t n = 0; n < direct.size(); ++n) {
            CHECK(std::abs(ident[n] - direct[n]) < 1e-14);
        }
    }
}

TEST_CASE("g2 of number states") {
    CHECK(g2_zero(FockState::basis({1}), 0) == 0.0);
    CHECK(g2_zero(FockState::basis({2}), 0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(g2_zero(FockState(1), 0), UndefinedCorrelation);
}

TEST_CASE("g2 of coherent and thermal marginals") {
    CHECK(std::abs(g2_zero(FockState::coherent({1.0, 0.0}, 8), 0) - 1.0) < 1e-3);
    // Tracing the partner of a two-mode squeezed state leaves a thermal mode;
    // the truncation bias shrinks as the cutoff grows.
    double previous = 1e9;
    for (int cutoff : {2, 4, 8, 16}) {
        const double g2 = g2_zero(two_mode_squeezed_vacuum(0.3, cutoff), 0);
        const double bias = std::abs(g2 - 2.0);
        CHECK(bias < previous);
        previous = bias;
    }
    CHECK(previous < 1e-8);
    CHECK(std::abs(g2_zero(two_mode_squeezed_vacuum(0.1, 4), 1) - 2.0) < 1e-2);
}

TEST_CASE("herald examples") {
    const auto ideal = herald(FockState::basis({1, 1}), 0, DetectorModel::bucket(1.0), HeraldCondition::ClickedAtLeastOnce);
    CHECK(ideal.probability == doctest::Approx(1.0));
    CHECK(ideal.state.num_modes() == 1);
    CHECK(number_distribution(ideal.state, 0)[1] == doctest::Approx(1.0));

    const auto lossy = herald(FockState::basis({1, 1}), 0, DetectorModel::bucket(0.6), HeraldCondition::ClickedAtLeastOnce);
    CHECK(lossy.probability == doctest::Approx(0.6));

    CHECK_THROWS_AS(herald(FockState::basis({1, 1}), 0, DetectorModel::bucket(0.6), HeraldCondition::ExactlyOne),
                    InvalidArgument);
    CHECK_THROWS_AS(herald(FockState(2), 0, DetectorModel::bucket(0.6), HeraldCondition::ClickedAtLeastOnce),
                    ZeroProbabilityEvent);
}

TEST_CASE("PNRD herald on a squeezed state matches exhaustive enumeration") {
    const double eps = 0.3;
    const double eta = 0.95;
    const auto result =
        herald(two_mode_squeezed_vacuum(eps), 0, DetectorModel::number_resolving(eta), HeraldCondition::ExactlyOne);

    // Enumerate every (n pairs, k counts) outcome from the analytic amplitudes.
    const double t2 = std::pow(std::tanh(eps), 2);
    double z = 0;
    for (int n = 0; n <= 4; ++n) {
        z += std::pow(t2, n);
    }
    double p_herald = 0, m1 = 0, m2 = 0;
    for (int n = 0; n <= 4; ++n) {
        const double pn = std::pow(t2, n) / z;
        for (int k = 0; k <= n; ++k) {
            double c = 1;
            for (int i = 1; i <= k; ++i) {
                c = c * (n - k + i) / i;
            }
            const double pk = c * std::pow(eta, k) * std::pow(1 - eta, n - k);
            if (k == 1) {
                p_herald += pn * pk;
                m1 += pn * pk * n;
                m2 += pn * pk * n * (n - 1);
            }
        }
    }
    CHECK(result.probability == doctest::Approx(p_herald).epsilon(1e-12));
    const double g2_ref = (m2 / p_herald) / std::pow(m1 / p_herald, 2);
    CHECK(g2_zero(result.state, 0) == doctest::Approx(g2_ref).epsilon(1e-12));
}

TEST_CASE("property: herald outcome partitions sum to one") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u;
    for (int trial = 0; trial < 10; ++trial) {
        const auto state = apply_loss(two_mode_squeezed_vacuum(0.5 * u(rng) + 0.01), 0, u(rng));
        const auto bucket = DetectorModel::bucket(u(rng));
        const double click = outcome_probability(state, 0, bucket, HeraldCondition::ClickedAtLeastOnce);
        const double dark = outcome_probability(state, 0, bucket, HeraldCondition::NoClick);
        CHECK(std::abs(click + dark - 1.0) < 1e-10);

        const auto pnrd = DetectorModel::number_resolving(u(rng));
        const auto p = number_distribution(state, 0);
        double total = 0;
        for (int k = 0; k <= 4; ++k) {
            for (std::size_t n = 0; n < p.size(); ++n) {
                total += p[n] * pnrd.count_probability(static_cast<int>(n), k);
            }
        }
        CHECK(std::abs(total - 1.0) < 1e-10);
    }
}

TEST_CASE("ensembles") {
    CHECK_THROWS_AS(MixedStateEnsemble({{0.5, FockState(1)}, {0.4, FockState(1)}}), InvalidArgument);
    const std::vector<double> weights{0.5, 0.3, 0.2};
    const auto pairs = pair_number_ensemble(weights, 4);
    CHECK(pairs.size() == 3);
    CHECK(number_distribution(pairs, 1)[2] == doctest::Approx(0.2));
}
