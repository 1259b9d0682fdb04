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
 * Command implementations behind the `qmm` tool. Each command writes its
 * report to the given streams and returns the process exit code.
 */

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmm/optimize.hpp"
#include "qmm/simlab.hpp"

namespace qmm::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitStatisticalFail = 1,
    kExitInputError = 2,
    kExitUnprogrammable = 3,
};

/// Malformed user input (exit code 2).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses "0.785", "0.25pi", "pi" or "pi/4". Throws InputError.
double parse_angle(std::string_view text);
/// Parses "lo:hi" where each side is an angle. Throws InputError.
Interval parse_interval(std::string_view text);

/// `digits` significant digits in printf %g style, independent of the
/// global locale.
std::string format_number(double v, int digits = 9);

struct SweepRow {
    double phi;
    double ratio;
    double p_success;
    double p_optimal;
    double p_quasiclassical;
};

/// `steps` evenly spaced points from iv.lo to iv.hi inclusive.
std::vector<SweepRow> sweep_rows(double phi0, const Interval &iv, std::size_t steps);
/// Header `phi,R,p_success,p_optimal,p_quasiclassical`, 9 significant digits,
/// '\n' line endings.
std::string sweep_csv(const std::vector<SweepRow> &rows);

/// Scenario file contents after validation. `phi0` is unset when the design
/// is to come from a bank.
struct ScenarioSpec {
    StatePair pair;
    std::optional<double> phi0;
    std::optional<AncillaProgram> program;
    std::array<double, 2> priors{0.5, 0.5};
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
};

/// Flat JSON object; see README for the keys. Throws InputError.
ScenarioSpec parse_scenario(std::string_view json_text);

/// QMM_SEED if set and valid, else the built-in default.
std::uint64_t default_seed();

struct SweepOptions {
    double phi0 = 0.0;
    Interval interval{};
    std::size_t steps = 91;
    std::string out; ///< empty: standard output
};

struct RunOptions {
    std::string scenario_path;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> bank;
    Interval interval{};
    SelectRule rule = SelectRule::ArgmaxR;
    std::string json_path;
};

struct OptimizeOptions {
    Interval interval{};
    std::optional<std::size_t> bank;
    std::string json_path;
};

struct VerifyCliOptions {
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t trials = 100000;
};

int cmd_sweep(const SweepOptions &opts, std::ostream &out, std::ostream &err);
int cmd_run(const RunOptions &opts, std::ostream &out, std::ostream &err);
int cmd_optimize(const OptimizeOptions &opts, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyCliOptions &opts, std::ostream &out, std::ostream &err);

} // namespace qmm::cli
