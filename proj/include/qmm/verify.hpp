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
 * Self-check suite behind `qmm verify`: property and oracle checks over the
 * whole library, plus the numerical comparison of the two complex-pair
 * closed forms against the simulated success probability.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmm {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// One row of the complex-pair closed-form comparison.
struct ClosedFormRow {
    double phi0;
    double beta_abs;
    double beta_arg; ///< phase of β with α real
    double simulated;
    double derived;  ///< 2 sin²θ |αβ|² / (1 − 2 cos θ Re(αβ*))
    double printed;  ///< 2 sin θ |αβ|² / (1 − 2 cos θ Re(αβ))
};

struct ClosedFormComparison {
    std::vector<ClosedFormRow> rows;
    double max_derived_error = 0.0;
    double max_printed_error = 0.0;
    std::size_t points = 0;
};

/// Compares both closed forms with the simulated success probability on a
/// grid of complex pairs (α real, β = |β| e^{iχ}) and design angles.
/// `rows` keeps a small representative sample; the maxima cover every point.
ClosedFormComparison compare_closed_forms();

/// Which induced-POVM construction to exercise.
enum class PovmConstructor { General, Matched, NoAncilla, Contraction };

const char *to_string(PovmConstructor c);

struct OracleEquivalence {
    std::size_t instances = 0;
    double max_probability_error = 0.0;
    double max_completeness_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool all_valid = true;
};

/// Seeded random instances of one constructor; Born probabilities through
/// the induced POVM are compared with the full-state simulation.
OracleEquivalence povm_oracle_equivalence(PovmConstructor c, std::size_t instances,
                                          std::uint64_t seed);

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::uint64_t trials = 100000;
    std::size_t random_instances = 100;
};

std::vector<VerifyCheck> run_verification(const VerifyOptions &opts);

} // namespace qmm
