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

#include <chrono>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qmm/optimize.hpp"

using namespace qmm;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("interval validation") {
    CHECK_NOTHROW(default_interval().validate());
    CHECK(default_interval().lo == 0.0);
    CHECK(default_interval().hi == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS((Interval{0.5, 0.5}.validate()), ValidationError);
    CHECK_THROWS_AS((Interval{-0.1, 0.5}.validate()), ValidationError);
    CHECK_THROWS_AS((Interval{0.1, 2.0}.validate()), ValidationError);
}

TEST_CASE("average R at phi0 = 0 is 1/2 + 1/pi") {
    CHECK(average_ratio(0.0, default_interval()) ==
          doctest::Approx(0.5 + 1.0 / kPi).epsilon(1e-12));
    // Odd counts round up; too few are rejected.
    CHECK(average_ratio(0.0, default_interval(), 1001) ==
          doctest::Approx(0.5 + 1.0 / kPi).epsilon(1e-12));
    CHECK_THROWS(average_ratio(0.0, default_interval(), 8));
}

TEST_CASE("average R is bounded by 1") {
    for (double phi0 = 0.0; phi0 <= kPi / 2; phi0 += 0.1) {
        const double avg = average_ratio(phi0, default_interval());
        CHECK(avg > 0.0);
        CHECK(avg <= 1.0);
    }
}

TEST_CASE("optimal design over (0, pi/2)") {
    const auto start = std::chrono::steady_clock::now();
    const OptimumResult r = best_phi0(default_interval());
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.phi0 / kPi == doctest::Approx(0.2351665).epsilon(1e-6));
    CHECK(r.average == doctest::Approx(0.9199131).epsilon(1e-6));
    CHECK(secs < 5.0);
    // A local maximum: nearby angles do no better.
    CHECK(average_ratio(r.phi0 + 1e-3, default_interval()) <= r.average);
    CHECK(average_ratio(r.phi0 - 1e-3, default_interval()) <= r.average);
}

TEST_CASE("a narrow interval puts the design inside it") {
    const Interval iv{0.6, 0.7};
    const OptimumResult r = best_phi0(iv);
    CHECK(r.phi0 > 0.6);
    CHECK(r.phi0 < 0.7);
    CHECK(r.average > 0.999);
}

TEST_CASE("design banks") {
    const BankDesign one = design_bank(1, default_interval());
    REQUIRE(one.bank.size() == 1);
    CHECK(one.bank.designs()[0].phi0() ==
          doctest::Approx(best_phi0(default_interval()).phi0).epsilon(1e-9));

    const BankDesign four = design_bank(4, default_interval());
    REQUIRE(four.bank.size() == 4);
    REQUIRE(four.segments.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        const BankSegment &s = four.segments[k];
        CHECK(s.segment.width() == doctest::Approx(kPi / 8));
        CHECK(s.optimum.phi0 >= s.segment.lo);
        CHECK(s.optimum.phi0 <= s.segment.hi);
        CHECK(s.optimum.average > one.segments[0].optimum.average);
    }
    CHECK_THROWS(design_bank(0, default_interval()));
}

TEST_CASE("DesignBank validation") {
    CHECK_THROWS_AS(DesignBank({}), ValidationError);
    CHECK_THROWS_AS(DesignBank({DiscriminatorDesign(0.0)}), ValidationError);
    CHECK_THROWS_AS(DesignBank({DiscriminatorDesign(0.5), DiscriminatorDesign(0.5)}),
                    ValidationError);
    CHECK_THROWS_AS(DesignBank({DiscriminatorDesign(0.6), DiscriminatorDesign(0.5)}),
                    ValidationError);
    CHECK_NOTHROW(DesignBank({DiscriminatorDesign(0.5), DiscriminatorDesign(kPi / 2)}));
}

TEST_CASE("select rules") {
    CHECK(parse_select_rule("argmax-r") == SelectRule::ArgmaxR);
    CHECK(parse_select_rule("nearest-phi") == SelectRule::NearestPhi);
    CHECK(to_string(SelectRule::NearestPhi) == "nearest-phi");
    CHECK_THROWS(parse_select_rule("best"));

    const DesignBank bank({DiscriminatorDesign(0.3), DiscriminatorDesign(0.8),
                           DiscriminatorDesign(1.3)});
    const StatePair pair = StatePair::from_angle(0.75);
    const Selection s = select_program(bank, pair, SelectRule::ArgmaxR);
    CHECK(s.index == 1);
    CHECK(s.ratio == doctest::Approx(ratio_R(0.75, 0.8)).epsilon(1e-12));
    const Selection n = select_program(bank, StatePair::from_angle(1.2),
                                       SelectRule::NearestPhi);
    CHECK(n.index == 2);

    // Argmax is never worse than any single design.
    for (double phi = 0.1; phi < kPi / 2; phi += 0.1) {
        const StatePair p = StatePair::from_angle(phi);
        const Selection best = select_program(bank, p);
        for (const DiscriminatorDesign &d : bank.designs()) {
            CHECK(best.ratio >= ratio_R(phi, d.phi0()) - 1e-12);
        }
    }
}

TEST_CASE("select_program skips unprogrammable designs") {
    const DesignBank only_right({DiscriminatorDesign(kPi / 2)});
    CHECK_THROWS_AS(select_program(only_right, StatePair::from_angle(1.0)),
                    Unprogrammable);
    const DesignBank mixed({DiscriminatorDesign(0.4), DiscriminatorDesign(kPi / 2)});
    CHECK(select_program(mixed, StatePair::from_angle(1.5), SelectRule::NearestPhi)
              .index == 0);
    CHECK(select_program(mixed, StatePair::from_angle(kPi / 2)).index == 1);
}
