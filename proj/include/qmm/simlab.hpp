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

/**
 * @file
 * Seeded Monte Carlo discrimination trials. Outcome distributions come from
 * the full-state simulation; each trial draws from its own stream derived
 * from (seed, trial index), so counts are identical for any worker count.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qmm/discriminator.hpp"

namespace qmm {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct Scenario {
    StatePair pair;
    DiscriminatorDesign design;
    /// Unset means "auto": solve_program(pair, design).
    std::optional<AncillaProgram> program;
    /// Probability of sending ψ₁ and ψ₂.
    std::array<double, 2> priors{0.5, 0.5};
    std::uint64_t trials = 1;
    std::uint64_t seed = kDefaultSeed;

    /// Throws ValidationError on bad priors, zero trials or an unnormalized
    /// program.
    void validate() const;
    /// The configured program, or the solved one. May throw Unprogrammable.
    [[nodiscard]] AncillaProgram resolved_program() const;
};

struct TrialStats {
    /// counts[input][outcome]; input 0 = ψ₁, 1 = ψ₂; outcome indexed by
    /// Identification.
    std::array<std::array<std::uint64_t, 3>, 2> counts{};
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;

    [[nodiscard]] std::uint64_t sent(std::size_t input) const;
    [[nodiscard]] std::uint64_t successes() const;
    [[nodiscard]] std::uint64_t wrong_identifications() const;
    [[nodiscard]] std::uint64_t inconclusive() const;

    friend bool operator==(const TrialStats &, const TrialStats &) = default;
};

/// `workers` = 0 picks the hardware concurrency.
TrialStats monte_carlo(const Scenario &s, unsigned workers = 0);

/// Prior-weighted success probability of the scenario's program, from the
/// full-state simulation.
double scenario_success_probability(const Scenario &s);

struct AnalyticComparison {
    double frequency = 0.0;
    double expected = 0.0;
    double sigma = 0.0; ///< √(p(1−p)/N)
    double z = 0.0;
    std::uint64_t errors = 0;
    bool pass = false;
};

inline constexpr double kAcceptanceSigmas = 4.0;

/// Passes iff there are no wrong identifications and the success frequency
/// is within 4σ of `p_success`.
AnalyticComparison compare_analytic(const TrialStats &stats, double p_success);

} // namespace qmm
