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

#include "qmm/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qmm/verify.hpp"

namespace qmm::cli {

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view text) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw InputError("not a number: '" + std::string(text) + "'");
    }
    return v;
}

std::string angle_text(double rad) {
    return format_number(rad) + " (" + format_number(rad / kPi) + " pi)";
}

std::string complex_text(cplx z) {
    if (z.imag() == 0.0) {
        return format_number(z.real());
    }
    return format_number(z.real()) + (z.imag() < 0.0 ? " - " : " + ") +
           format_number(std::abs(z.imag())) + "i";
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << contents;
    if (!out) {
        throw InputError("error writing '" + path + "'");
    }
}

double number_field(const json &obj, const char *key) {
    const json &v = obj.at(key);
    if (!v.is_number()) {
        throw InputError(std::string("'") + key + "' must be a number");
    }
    return v.get<double>();
}

std::optional<double> angle_field(const json &obj, const char *rad_key,
                                  const char *pi_key) {
    if (obj.contains(rad_key) && obj.contains(pi_key)) {
        throw InputError(std::string("give only one of '") + rad_key + "' and '" +
                         pi_key + "'");
    }
    if (obj.contains(rad_key)) {
        return number_field(obj, rad_key);
    }
    if (obj.contains(pi_key)) {
        return number_field(obj, pi_key) * kPi;
    }
    return std::nullopt;
}

std::uint64_t count_field(const json &obj, const char *key) {
    const json &v = obj.at(key);
    if (!v.is_number_unsigned()) {
        throw InputError(std::string("'") + key + "' must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

} // namespace

double parse_angle(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        throw InputError("empty angle");
    }
    const std::size_t pi_pos = text.find("pi");
    if (pi_pos == std::string_view::npos) {
        return parse_real(text);
    }
    const std::string_view coef = trim(text.substr(0, pi_pos));
    std::string_view rest = trim(text.substr(pi_pos + 2));
    double v = kPi * (coef.empty() ? 1.0 : parse_real(coef));
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw InputError("malformed angle '" + std::string(text) + "'");
        }
        const double div = parse_real(rest.substr(1));
        if (div == 0.0) {
            throw InputError("division by zero in angle '" + std::string(text) + "'");
        }
        v /= div;
    }
    return v;
}

Interval parse_interval(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw InputError("interval must be lo:hi, got '" + std::string(text) + "'");
    }
    Interval iv{parse_angle(text.substr(0, colon)), parse_angle(text.substr(colon + 1))};
    try {
        iv.validate();
    } catch (const ValidationError &e) {
        throw InputError(e.what());
    }
    return iv;
}

std::string format_number(double v, int digits) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    if (ec != std::errc{}) {
        return "nan";
    }
    return {buf, ptr};
}

std::vector<SweepRow> sweep_rows(double phi0, const Interval &iv, std::size_t steps) {
    iv.validate();
    if (steps < 2) {
        throw InputError("sweep needs at least 2 steps");
    }
    const DiscriminatorDesign design(phi0);
    std::vector<SweepRow> rows;
    rows.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double phi =
            (i + 1 == steps)
                ? iv.hi
                : iv.lo + iv.width() * static_cast<double>(i) / static_cast<double>(steps - 1);
        SweepRow row{phi, ratio_R(phi, phi0), 0.0, optimal_probability(phi),
                     quasiclassical_probability(phi)};
        // Identical states (φ = 0) and unprogrammable designs succeed with
        // probability zero.
        if (phi > 0.0) {
            try {
                row.p_success = success_probability(StatePair::from_angle(phi), design);
            } catch (const Unprogrammable &) {
                row.p_success = 0.0;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "phi,R,p_success,p_optimal,p_quasiclassical\n";
    for (const SweepRow &r : rows) {
        out += format_number(r.phi) + ',' + format_number(r.ratio) + ',' +
               format_number(r.p_success) + ',' + format_number(r.p_optimal) + ',' +
               format_number(r.p_quasiclassical) + '\n';
    }
    return out;
}

ScenarioSpec parse_scenario(std::string_view json_text) {
    json obj;
    try {
        obj = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!obj.is_object()) {
        throw InputError("scenario must be a JSON object");
    }
    static const std::set<std::string> known{
        "phi",     "phi_pi",  "phi0",    "phi0_pi", "alpha_re", "alpha_im",
        "beta_re", "beta_im", "trials",  "seed",    "priors",   "program",
        "a_re",    "a_im",    "b_re",    "b_im"};
    for (const auto &[key, value] : obj.items()) {
        if (!known.contains(key)) {
            throw InputError("unknown scenario key '" + key + "'");
        }
    }

    try {
        auto get_or = [&](const char *key, double fallback) {
            return obj.contains(key) ? number_field(obj, key) : fallback;
        };

        const std::optional<double> phi = angle_field(obj, "phi", "phi_pi");
        const bool has_amplitudes = obj.contains("alpha_re") || obj.contains("alpha_im") ||
                                    obj.contains("beta_re") || obj.contains("beta_im");
        if (phi.has_value() == has_amplitudes) {
            throw InputError("give exactly one of 'phi', 'phi_pi' or the "
                             "alpha/beta amplitudes");
        }
        std::optional<StatePair> pair;
        if (phi) {
            pair = StatePair::from_angle(*phi);
        } else {
            const cplx alpha{get_or("alpha_re", 0.0), get_or("alpha_im", 0.0)};
            const cplx beta{get_or("beta_re", 0.0), get_or("beta_im", 0.0)};
            const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
            if (norm == 0.0) {
                throw InputError("alpha and beta are both zero");
            }
            pair = StatePair(alpha / norm, beta / norm);
        }

        ScenarioSpec spec{*pair, angle_field(obj, "phi0", "phi0_pi"), std::nullopt,
                          {0.5, 0.5}, std::nullopt, std::nullopt};
        if (spec.phi0) {
            (void)DiscriminatorDesign(*spec.phi0);
        }

        const bool has_program = obj.contains("a_re") || obj.contains("a_im") ||
                                 obj.contains("b_re") || obj.contains("b_im");
        if (obj.contains("program")) {
            if (obj["program"] != "auto") {
                throw InputError("'program' may only be \"auto\"; give an explicit "
                                 "program with a_re/a_im/b_re/b_im");
            }
            if (has_program) {
                throw InputError("'program': \"auto\" conflicts with explicit amplitudes");
            }
        }
        if (has_program) {
            const cplx a{get_or("a_re", 0.0), get_or("a_im", 0.0)};
            const cplx b{get_or("b_re", 0.0), get_or("b_im", 0.0)};
            const double norm = std::sqrt(std::norm(a) + std::norm(b));
            if (norm == 0.0) {
                throw InputError("program amplitudes are both zero");
            }
            spec.program = AncillaProgram{a / norm, b / norm};
        }

        if (obj.contains("priors")) {
            const json &p = obj["priors"];
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
                throw InputError("'priors' must be an array of two numbers");
            }
            spec.priors = {p[0].get<double>(), p[1].get<double>()};
            if (spec.priors[0] < 0.0 || spec.priors[1] < 0.0 ||
                std::abs(spec.priors[0] + spec.priors[1] - 1.0) > 1e-12) {
                throw InputError("'priors' must be nonnegative and sum to 1");
            }
        }
        if (obj.contains("trials")) {
            spec.trials = count_field(obj, "trials");
        }
        if (obj.contains("seed")) {
            spec.seed = count_field(obj, "seed");
        }
        return spec;
    } catch (const ValidationError &e) {
        throw InputError(e.what());
    }
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv("QMM_SEED"); env != nullptr && *env != '\0') {
        std::uint64_t v = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size()) {
            return v;
        }
    }
    return kDefaultSeed;
}

int cmd_sweep(const SweepOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const std::string csv = sweep_csv(sweep_rows(opts.phi0, opts.interval, opts.steps));
        if (opts.out.empty()) {
            out << csv;
        } else {
            write_file(opts.out, csv);
        }
        return kExitPass;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInputError;
}

int cmd_run(const RunOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const ScenarioSpec spec = parse_scenario(read_file(opts.scenario_path));
        const std::uint64_t trials = opts.trials.value_or(spec.trials.value_or(100000));
        const std::uint64_t seed = opts.seed.value_or(spec.seed.value_or(default_seed()));

        std::optional<Selection> selection;
        std::optional<DiscriminatorDesign> design;
        if (opts.bank) {
            const BankDesign bank = design_bank(*opts.bank, opts.interval);
            selection = select_program(bank.bank, spec.pair, opts.rule);
            design = bank.bank.designs()[selection->index];
        } else if (spec.phi0) {
            design = DiscriminatorDesign(*spec.phi0);
        } else {
            throw InputError("scenario has no 'phi0' and no --bank was given");
        }

        Scenario scenario{spec.pair, *design, spec.program, spec.priors, trials, seed};
        if (!scenario.program && selection) {
            scenario.program = selection->program;
        }
        scenario.validate();
        const AncillaProgram program = scenario.resolved_program();
        scenario.program = program;

        const double p_success = scenario_success_probability(scenario);
        const double p_opt = optimal_probability(spec.pair.phi());
        const TrialStats stats = monte_carlo(scenario);
        const AnalyticComparison cmp = compare_analytic(stats, p_success);

        out << "pair       alpha = " << complex_text(spec.pair.alpha())
            << ", beta = " << complex_text(spec.pair.beta())
            << ", phi = " << angle_text(spec.pair.phi()) << '\n';
        out << "design     phi0 = " << angle_text(design->phi0())
            << ", theta = " << angle_text(design->theta()) << '\n';
        if (selection) {
            out << "bank       " << *opts.bank << " designs, rule " << to_string(opts.rule)
                << ", selected index " << selection->index << '\n';
        }
        out << "program    a = " << complex_text(program.a)
            << ", b = " << complex_text(program.b) << '\n';
        out << "analytic   p_success = " << format_number(p_success)
            << ", p_optimal = " << format_number(p_opt)
            << ", ratio = " << format_number(p_success / p_opt) << '\n';
        out << "trials     " << stats.trials << " (seed " << stats.seed << ", priors "
            << format_number(spec.priors[0]) << '/' << format_number(spec.priors[1])
            << ")\n";
        for (std::size_t input = 0; input < 2; ++input) {
            out << "sent psi" << input + 1 << "  -> psi1 " << stats.counts[input][0]
                << ", psi2 " << stats.counts[input][1] << ", inconclusive "
                << stats.counts[input][2] << '\n';
        }
        out << "observed   success frequency = " << format_number(cmp.frequency)
            << ", sigma = " << format_number(cmp.sigma, 3)
            << ", z = " << format_number(cmp.z, 3)
            << ", wrong identifications = " << cmp.errors << '\n';
        out << "verdict    " << (cmp.pass ? "PASS" : "FAIL") << '\n';

        if (!opts.json_path.empty()) {
            json report{
                {"pair",
                 {{"alpha", complex_json(spec.pair.alpha())},
                  {"beta", complex_json(spec.pair.beta())},
                  {"phi", spec.pair.phi()}}},
                {"design", {{"phi0", design->phi0()}, {"theta", design->theta()}}},
                {"program", {{"a", complex_json(program.a)}, {"b", complex_json(program.b)}}},
                {"p_success", p_success},
                {"p_optimal", p_opt},
                {"stats",
                 {{"seed", stats.seed},
                  {"trials", stats.trials},
                  {"counts", stats.counts},
                  {"outcomes", {"psi1", "psi2", "inconclusive"}}}},
                {"comparison",
                 {{"frequency", cmp.frequency},
                  {"sigma", cmp.sigma},
                  {"z", cmp.z},
                  {"wrong_identifications", cmp.errors},
                  {"pass", cmp.pass}}}};
            if (selection) {
                report["selection"] = {{"bank_size", *opts.bank},
                                       {"rule", std::string(to_string(opts.rule))},
                                       {"index", selection->index},
                                       {"ratio", selection->ratio}};
            }
            write_file(opts.json_path, report.dump(2) + "\n");
        }
        return cmp.pass ? kExitPass : kExitStatisticalFail;
    } catch (const Unprogrammable &e) {
        err << "unprogrammable: " << e.what() << '\n';
        return kExitUnprogrammable;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInputError;
}

int cmd_optimize(const OptimizeOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const OptimumResult best = best_phi0(opts.interval);
        out << "interval   [" << angle_text(opts.interval.lo) << ", "
            << angle_text(opts.interval.hi) << "]\n";
        out << "phi0*      " << angle_text(best.phi0) << '\n';
        out << "average R  " << format_number(best.average) << '\n';

        json report{{"interval", {opts.interval.lo, opts.interval.hi}},
                    {"phi0", best.phi0},
                    {"average", best.average}};

        if (opts.bank) {
            const BankDesign bank = design_bank(*opts.bank, opts.interval);
            out << "bank       " << *opts.bank << " designs\n";
            out << "segment                    phi0/pi      avg R        single-design avg R\n";
            json rows = json::array();
            for (std::size_t s = 0; s < bank.segments.size(); ++s) {
                const BankSegment &seg = bank.segments[s];
                const double single = average_ratio(best.phi0, seg.segment);
                out << "[" << format_number(seg.segment.lo / kPi, 6) << ", "
                    << format_number(seg.segment.hi / kPi, 6) << "] pi    "
                    << format_number(seg.optimum.phi0 / kPi, 6) << "     "
                    << format_number(seg.optimum.average, 6) << "     "
                    << format_number(single, 6) << '\n';
                rows.push_back({{"lo", seg.segment.lo},
                                {"hi", seg.segment.hi},
                                {"phi0", seg.optimum.phi0},
                                {"average", seg.optimum.average},
                                {"single_design_average", single}});
            }
            report["bank"] = rows;
        }
        if (!opts.json_path.empty()) {
            write_file(opts.json_path, report.dump(2) + "\n");
        }
        return kExitPass;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInputError;
}

int cmd_verify(const VerifyCliOptions &opts, std::ostream &out, std::ostream & /*err*/) {
    const std::vector<VerifyCheck> checks =
        run_verification({opts.seed, opts.trials, 100});
    bool all = true;
    for (const VerifyCheck &c : checks) {
        all = all && c.pass;
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
    }

    const ClosedFormComparison cmp = compare_closed_forms();
    out << "\ncomplex-pair success probability: simulation vs closed forms\n";
    out << "  derived: 2 sin^2(theta) |ab|^2 / (1 - 2 cos(theta) Re(a conj(b)))\n";
    out << "  printed: 2 sin(theta)   |ab|^2 / (1 - 2 cos(theta) Re(a b))\n";
    out << "  phi0/pi     |beta|      arg(beta)   simulated     derived       printed\n";
    for (const ClosedFormRow &r : cmp.rows) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-10.6f  %-10.6f  %-10.6f  %-12.9f  %-12.9f  %-12.9f\n",
                      r.phi0 / kPi, r.beta_abs, r.beta_arg, r.simulated, r.derived,
                      r.printed);
        out << line;
    }
    out << "  over " << cmp.points << " points: max |derived - simulated| = "
        << format_number(cmp.max_derived_error, 3)
        << ", max |printed - simulated| = " << format_number(cmp.max_printed_error, 3)
        << '\n';
    out << "  verdict: derived form " << (cmp.max_derived_error <= 1e-12 ? "agrees" : "DISAGREES")
        << "; printed form " << (cmp.max_printed_error <= 1e-12 ? "agrees" : "disagrees")
        << " with the simulation\n";
    out << (all ? "verify: all checks passed\n" : "verify: FAILED\n");
    return all ? kExitPass : kExitStatisticalFail;
}

} // namespace qmm::cli
