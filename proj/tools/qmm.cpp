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

// qmm: programmable quantum multimeter and unambiguous discriminator.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qmm/cli.hpp"

namespace {

using namespace qmm::cli;

struct AngleArgs {
    std::string phi0 = "0.25pi";
    std::string interval = "0:0.5pi";
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Programmable quantum multimeter: unambiguous discrimination of "
                 "symmetric qubit pairs"};
    app.require_subcommand(1);

    // sweep
    AngleArgs sweep_args;
    SweepOptions sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "R(phi, phi0) sweep as CSV");
    sweep_cmd->add_option("--phi0", sweep_args.phi0,
                          "Design angle (radians, or e.g. 0.25pi)")
        ->capture_default_str();
    sweep_cmd->add_option("--interval", sweep_args.interval, "phi range lo:hi")
        ->capture_default_str();
    sweep_cmd->add_option("--steps", sweep.steps, "Grid points (>= 2)")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out, "Output CSV path (default stdout)");

    // run
    std::string run_interval = "0:0.5pi";
    std::string run_rule = "argmax-r";
    RunOptions run;
    std::optional<std::size_t> run_bank;
    auto *run_cmd = app.add_subcommand("run", "Monte Carlo discrimination of a scenario file");
    run_cmd->add_option("scenario", run.scenario_path, "Scenario JSON file")->required();
    run_cmd->add_option("--trials", run.trials, "Override the trial count");
    run_cmd->add_option("--seed", run.seed, "Override the seed");
    run_cmd->add_option("--json", run.json_path, "Write a JSON report to this path");
    run_cmd->add_option("--bank", run_bank,
                        "Pick the design from a bank of K switched designs");
    run_cmd->add_option("--interval", run_interval, "Interval covered by the bank")
        ->capture_default_str();
    run_cmd->add_option("--select-rule", run_rule, "argmax-r or nearest-phi")
        ->capture_default_str();

    // optimize
    std::string opt_interval = "0:0.5pi";
    OptimizeOptions optimize;
    std::optional<std::size_t> opt_bank;
    auto *opt_cmd = app.add_subcommand("optimize", "Best design angle for an interval");
    opt_cmd->add_option("--interval", opt_interval, "phi range lo:hi")
        ->capture_default_str();
    opt_cmd->add_option("--bank", opt_bank, "Also design a bank of K switched designs");
    opt_cmd->add_option("--json", optimize.json_path, "Write a JSON report to this path");

    // verify
    VerifyCliOptions verify;
    verify.seed = default_seed();
    auto *verify_cmd = app.add_subcommand("verify", "Run the built-in property suite");
    verify_cmd->add_option("--seed", verify.seed, "Seed for random instances and trials")
        ->capture_default_str();
    verify_cmd->add_option("--trials", verify.trials, "Monte Carlo trials")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (*sweep_cmd) {
            sweep.phi0 = parse_angle(sweep_args.phi0);
            sweep.interval = parse_interval(sweep_args.interval);
            return cmd_sweep(sweep, std::cout, std::cerr);
        }
        if (*run_cmd) {
            run.bank = run_bank;
            run.interval = parse_interval(run_interval);
            run.rule = qmm::parse_select_rule(run_rule);
            return cmd_run(run, std::cout, std::cerr);
        }
        if (*opt_cmd) {
            optimize.interval = parse_interval(opt_interval);
            optimize.bank = opt_bank;
            return cmd_optimize(optimize, std::cout, std::cerr);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, std::cout, std::cerr);
        }
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
