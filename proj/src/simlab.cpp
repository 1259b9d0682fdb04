// Copyright 2026 The QMM Authors
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

#include "qmm/simlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "qmm/povm.hpp"
#include "qmm/random.hpp"

namespace qmm {

void Scenario::validate() const {
    if (priors[0] < 0.0 || priors[1] < 0.0 ||
        std::abs(priors[0] + priors[1] - 1.0) > 1e-12) {
        throw ValidationError("Scenario: priors must be nonnegative and sum to 1");
    }
    if (trials == 0) {
        throw ValidationError("Scenario: need at least one trial");
    }
    if (program) {
        program->validate();
    }
}

AncillaProgram Scenario::resolved_program() const {
    return program ? *program : solve_program(pair, design);
}

std::uint64_t TrialStats::sent(std::size_t input) const {
    const auto &row = counts.at(input);
    return row[0] + row[1] + row[2];
}

std::uint64_t TrialStats::successes() const {
    return counts[0][static_cast<std::size_t>(Identification::Psi1)] +
           counts[1][static_cast<std::size_t>(Identification::Psi2)];
}

std::uint64_t TrialStats::wrong_identifications() const {
    return counts[0][static_cast<std::size_t>(Identification::Psi2)] +
           counts[1][static_cast<std::size_t>(Identification::Psi1)];
}

std::uint64_t TrialStats::inconclusive() const {
    constexpr auto inc = static_cast<std::size_t>(Identification::Inconclusive);
    return counts[0][inc] + counts[1][inc];
}

TrialStats monte_carlo(const Scenario &s, unsigned workers) {
    s.validate();
    const AncillaProgram program = s.resolved_program();

    // The outcome distribution depends only on which state was sent.
    const std::array<std::array<double, 3>, 2> dist{
        identification_probabilities(s.pair, s.design, program, +1),
        identification_probabilities(s.pair, s.design, program, -1)};

    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, s.trials / 4096)));

    using Counts = std::array<std::array<std::uint64_t, 3>, 2>;
    std::vector<Counts> partial(workers, Counts{});
    auto run_range = [&](std::uint64_t begin, std::uint64_t end, Counts &out) {
        for (std::uint64_t t = begin; t < end; ++t) {
            SplitMix64 rng = SplitMix64::stream(s.seed, t);
            const std::size_t input = rng.uniform() < s.priors[0] ? 0 : 1;
            const std::size_t outcome = sample_outcome(dist[input], rng());
            ++out[input][outcome];
        }
    };

    const std::uint64_t chunk = s.trials / workers;
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = chunk * w;
        const std::uint64_t end = (w + 1 == workers) ? s.trials : begin + chunk;
        if (w + 1 == workers) {
            run_range(begin, end, partial[w]);
        } else {
            threads.emplace_back(run_range, begin, end, std::ref(partial[w]));
        }
    }
    threads.clear();

    TrialStats stats;
    stats.seed = s.seed;
    stats.trials = s.trials;
    for (const Counts &c : partial) {
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t o = 0; o < 3; ++o) {
                stats.counts[i][o] += c[i][o];
            }
        }
    }
    return stats;
}

double scenario_success_probability(const Scenario &s) {
    s.validate();
    const AncillaProgram program = s.resolved_program();
    const auto p1 = identification_probabilities(s.pair, s.design, program, +1);
    const auto p2 = identification_probabilities(s.pair, s.design, program, -1);
    return s.priors[0] * p1[static_cast<std::size_t>(Identification::Psi1)] +
           s.priors[1] * p2[static_cast<std::size_t>(Identification::Psi2)];
}

AnalyticComparison compare_analytic(const TrialStats &stats, double p_success) {
    if (stats.trials == 0) {
        throw std::invalid_argument("compare_analytic: no trials");
    }
    AnalyticComparison r;
    const auto n = static_cast<double>(stats.trials);
    r.frequency = static_cast<double>(stats.successes()) / n;
    r.expected = p_success;
    r.sigma = std::sqrt(std::max(p_success * (1.0 - p_success), 0.0) / n);
    r.errors = stats.wrong_identifications();
    const double diff = r.frequency - p_success;
    if (r.sigma > 0.0) {
        r.z = diff / r.sigma;
    } else {
        // Degenerate p ∈ {0, 1}: any deviation beyond rounding is infinitely
        // unlikely.
        r.z = std::abs(diff) <= 1e-12 ? 0.0
                                      : std::copysign(
                                            std::numeric_limits<double>::infinity(),
                                            diff);
    }
    r.pass = r.errors == 0 && std::abs(r.z) <= kAcceptanceSigmas;
    return r;
}

} // namespace qmm
