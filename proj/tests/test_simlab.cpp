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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qmm/simlab.hpp"

using namespace qmm;

namespace {

constexpr double kPi = std::numbers::pi;

Scenario reference(std::uint64_t trials) {
    Scenario s{StatePair::from_angle(kPi / 3), DiscriminatorDesign(kPi / 4)};
    s.trials = trials;
    return s;
}

} // namespace

TEST_CASE("scenario validation") {
    Scenario s = reference(10);
    CHECK_NOTHROW(s.validate());
    s.priors = {0.6, 0.6};
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s.priors = {1.2, -0.2};
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s = reference(0);
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s = reference(10);
    s.program = AncillaProgram{1.0, 1.0};
    CHECK_THROWS_AS(s.validate(), ValidationError);

    Scenario bad{StatePair::from_angle(1.0), DiscriminatorDesign(kPi / 2)};
    CHECK_THROWS_AS((void)bad.resolved_program(), Unprogrammable);
}

TEST_CASE("Monte Carlo is deterministic and independent of the worker count") {
    const Scenario s = reference(50000);
    const TrialStats one = monte_carlo(s, 1);
    const TrialStats four = monte_carlo(s, 4);
    const TrialStats again = monte_carlo(s, 0);
    CHECK(one == four);
    CHECK(one == again);
    CHECK(one.trials == 50000);
    CHECK(one.seed == kDefaultSeed);
    CHECK(one.sent(0) + one.sent(1) == 50000);

    Scenario other = s;
    other.seed = 7;
    CHECK_FALSE(monte_carlo(other, 1) == one);
}

TEST_CASE("Monte Carlo agrees with the analytic success probability") {
    const Scenario s = reference(200000);
    const TrialStats stats = monte_carlo(s);
    CHECK(stats.wrong_identifications() == 0);
    CHECK(stats.successes() + stats.inconclusive() == 200000);
    const double p = scenario_success_probability(s);
    CHECK(p == doctest::Approx(0.4844372409382767).epsilon(1e-12));
    const AnalyticComparison cmp = compare_analytic(stats, p);
    CHECK(cmp.pass);
    CHECK(std::abs(cmp.z) < 4.0);
    CHECK(cmp.sigma == doctest::Approx(std::sqrt(p * (1 - p) / 200000)));
}

TEST_CASE("uneven priors only change how often each state is sent") {
    Scenario s = reference(40000);
    s.priors = {0.9, 0.1};
    const TrialStats stats = monte_carlo(s);
    const double f0 = static_cast<double>(stats.sent(0)) / 40000.0;
    CHECK(std::abs(f0 - 0.9) < 4 * std::sqrt(0.09 / 40000));
    CHECK(stats.wrong_identifications() == 0);
    CHECK(scenario_success_probability(s) ==
          doctest::Approx(0.4844372409382767).epsilon(1e-12));

    s.priors = {1.0, 0.0};
    CHECK(monte_carlo(s).sent(1) == 0);
}

TEST_CASE("mismatched program produces wrong identifications and fails") {
    Scenario s = reference(20000);
    s.program = solve_program(StatePair::from_angle(kPi / 5), s.design);
    const TrialStats stats = monte_carlo(s);
    CHECK(stats.wrong_identifications() > 0);
    CHECK_FALSE(compare_analytic(stats, scenario_success_probability(s)).pass);
}

TEST_CASE("compare_analytic edge cases") {
    TrialStats stats;
    CHECK_THROWS(compare_analytic(stats, 0.5));
    stats.trials = 100;
    stats.counts[0] = {50, 0, 0};
    stats.counts[1] = {0, 50, 0};
    // σ = 0 at p = 1: only an exact match passes.
    CHECK(compare_analytic(stats, 1.0).pass);
    stats.counts[1] = {0, 49, 1};
    CHECK_FALSE(compare_analytic(stats, 1.0).pass);
    stats.counts[1] = {1, 49, 0};
    const AnalyticComparison c = compare_analytic(stats, 0.99);
    CHECK(c.errors == 1);
    CHECK_FALSE(c.pass);
}
