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

#include "qmm/optimize.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace qmm {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr std::size_t kScanPoints = 64;
constexpr double kSearchTol = 1e-6;

} // namespace

void Interval::validate() const {
    if (!(lo >= 0.0 && lo < hi && hi <= kHalfPi + 1e-12)) {
        throw ValidationError("Interval: need 0 <= lo < hi <= pi/2, got [" +
                              std::to_string(lo) + ", " + std::to_string(hi) +
                              "]");
    }
}

Interval default_interval() { return {0.0, kHalfPi}; }

double average_ratio(double phi0, const Interval &iv, std::size_t n) {
    iv.validate();
    if (n < 16) {
        throw std::invalid_argument("average_ratio: need at least 16 subintervals");
    }
    if (n % 2 == 1) {
        ++n;
    }
    const double h = iv.width() / static_cast<double>(n);
    double sum = ratio_R(iv.lo, phi0) + ratio_R(iv.hi, phi0);
    for (std::size_t i = 1; i < n; ++i) {
        const double x = iv.lo + h * static_cast<double>(i);
        sum += (i % 2 == 1 ? 4.0 : 2.0) * ratio_R(x, phi0);
    }
    return sum * h / 3.0 / iv.width();
}

OptimumResult best_phi0(const Interval &iv, std::size_t n) {
    iv.validate();
    auto objective = [&](double phi0) { return average_ratio(phi0, iv, n); };

    const double step = kHalfPi / static_cast<double>(kScanPoints);
    std::size_t best_i = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kScanPoints; ++i) {
        const double v = objective(step * static_cast<double>(i));
        if (v > best_val) {
            best_val = v;
            best_i = i;
        }
    }

    double lo = best_i == 0 ? 0.0 : step * static_cast<double>(best_i - 1);
    double hi = std::min(kHalfPi, step * static_cast<double>(best_i + 1));
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > kSearchTol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        }
    }
    const double x = 0.5 * (lo + hi);
    const double fx = objective(x);
    // The scan point wins only if the search wandered off a flat top.
    if (fx < best_val) {
        return {step * static_cast<double>(best_i), best_val};
    }
    return {x, fx};
}

DesignBank::DesignBank(std::vector<DiscriminatorDesign> designs)
    : designs_(std::move(designs)) {
    if (designs_.empty()) {
        throw ValidationError("DesignBank: empty");
    }
    for (std::size_t i = 0; i < designs_.size(); ++i) {
        const double p = designs_[i].phi0();
        if (!(p > 0.0 && p <= kHalfPi)) {
            throw ValidationError("DesignBank: design angle outside (0, pi/2]");
        }
        if (i > 0 && !(p > designs_[i - 1].phi0())) {
            throw ValidationError("DesignBank: design angles not strictly increasing");
        }
    }
}

BankDesign design_bank(std::size_t k, const Interval &iv) {
    iv.validate();
    if (k == 0) {
        throw std::invalid_argument("design_bank: need at least one design");
    }
    const double width = iv.width() / static_cast<double>(k);
    std::vector<Interval> segments;
    for (std::size_t s = 0; s < k; ++s) {
        const double lo = iv.lo + width * static_cast<double>(s);
        const double hi = (s + 1 == k) ? iv.hi : lo + width;
        segments.push_back({lo, hi});
    }

    std::vector<std::future<OptimumResult>> pending;
    pending.reserve(k);
    for (const Interval &seg : segments) {
        pending.push_back(
            std::async(std::launch::async, [seg] { return best_phi0(seg); }));
    }

    std::vector<BankSegment> results;
    std::vector<DiscriminatorDesign> designs;
    for (std::size_t s = 0; s < k; ++s) {
        const OptimumResult opt = pending[s].get();
        results.push_back({segments[s], opt});
        designs.emplace_back(opt.phi0);
    }
    return {DesignBank(std::move(designs)), std::move(results)};
}

SelectRule parse_select_rule(std::string_view name) {
    if (name == "argmax-r") {
        return SelectRule::ArgmaxR;
    }
    if (name == "nearest-phi") {
        return SelectRule::NearestPhi;
    }
    throw std::invalid_argument("unknown selection rule '" + std::string(name) +
                                "' (expected argmax-r or nearest-phi)");
}

std::string_view to_string(SelectRule rule) {
    return rule == SelectRule::ArgmaxR ? "argmax-r" : "nearest-phi";
}

Selection select_program(const DesignBank &bank, const StatePair &pair,
                         SelectRule rule) {
    const double phi = pair.phi();
    const double optimum = optimal_probability(phi);
    std::optional<Selection> best;
    double best_key = 0.0;
    for (std::size_t i = 0; i < bank.size(); ++i) {
        const DiscriminatorDesign &d = bank.designs()[i];
        AncillaProgram program;
        try {
            program = solve_program(pair, d);
        } catch (const Unprogrammable &) {
            continue;
        }
        const double p = evolve(pair, d, program, +1).success_probability();
        // Larger key wins.
        const double key =
            rule == SelectRule::ArgmaxR ? p : -std::abs(d.phi0() - phi);
        if (!best || key > best_key) {
            best = Selection{i, program, p / optimum};
            best_key = key;
        }
    }
    if (!best) {
        throw Unprogrammable("no design in the bank can be programmed for this pair");
    }
    return *best;
}

} // namespace qmm
