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
 * Choosing the design angle: the interval-averaged ratio R, its 1-D
 * maximization, and banks of designs switched by a program register.
 */

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qmm/discriminator.hpp"

namespace qmm {

inline constexpr std::size_t kDefaultSimpsonIntervals = 1024;

/// [lo, hi] with 0 ≤ lo < hi ≤ π/2.
struct Interval {
    double lo;
    double hi;

    /// Throws ValidationError on an invalid interval.
    void validate() const;
    [[nodiscard]] double width() const noexcept { return hi - lo; }
};

/// The full range (0, π/2).
Interval default_interval();

/// Mean of R(·, φ₀) over the interval by composite Simpson quadrature with
/// `n` subintervals (rounded up to even; n ≥ 16).
double average_ratio(double phi0, const Interval &iv,
                     std::size_t n = kDefaultSimpsonIntervals);

struct OptimumResult {
    double phi0;
    double average;
};

/// Maximizes average_ratio over φ₀ ∈ [0, π/2]: a 64-point scan of [0, π/2)
/// brackets the maximum, then golden-section search narrows it to 1e-6.
OptimumResult best_phi0(const Interval &iv,
                        std::size_t n = kDefaultSimpsonIntervals);

class DesignBank {
  public:
    /// Throws ValidationError unless the angles are strictly increasing and
    /// each lies in (0, π/2].
    explicit DesignBank(std::vector<DiscriminatorDesign> designs);

    [[nodiscard]] const std::vector<DiscriminatorDesign> &designs() const noexcept {
        return designs_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return designs_.size(); }

  private:
    std::vector<DiscriminatorDesign> designs_;
};

struct BankSegment {
    Interval segment;
    OptimumResult optimum;
};

struct BankDesign {
    DesignBank bank;
    std::vector<BankSegment> segments;
};

/// Splits `iv` into K equal segments and places one design at each segment's
/// best_phi0. Segment searches run concurrently.
BankDesign design_bank(std::size_t k, const Interval &iv);

enum class SelectRule { ArgmaxR, NearestPhi };

SelectRule parse_select_rule(std::string_view name);
std::string_view to_string(SelectRule rule);

struct Selection {
    std::size_t index;
    AncillaProgram program;
    /// Achieved success probability over the optimal 2 sin²(φ/2).
    double ratio;
};

/// ArgmaxR picks the design with the largest success probability for the
/// pair (equivalently the largest R for real pairs); NearestPhi picks the
/// design angle closest to the pair's φ. Ties go to the smaller index and
/// unprogrammable designs are skipped. Throws Unprogrammable if no design
/// can be programmed.
Selection select_program(const DesignBank &bank, const StatePair &pair,
                         SelectRule rule = SelectRule::ArgmaxR);

} // namespace qmm
