/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ccsched/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "ccsched/analysis.hpp"
#include "ccsched/experiment.hpp"
#include "ccsched/io.hpp"
#include "ccsched/verify.hpp"

namespace ccsched {

namespace {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class VerificationFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Renders into memory first so a failed command never leaves a partial file.
void emit(const CommandOptions &options, std::ostream &out, const std::function<void(std::ostream &)> &render) {
    std::ostringstream buf;
    render(buf);
    if (!options.out_path) {
        out << buf.str();
        return;
    }
    std::ofstream file(*options.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write " + *options.out_path);
    file << buf.str();
    file.flush();
    if (!file) throw IoError("error writing " + *options.out_path);
}

const DeliveryParams &fixed_delivery(const Scenario &scenario, const std::string &command) {
    if (!scenario.delivery) throw UsageError(command + " needs fixed delivery parameters, not \"sweep\"");
    return *scenario.delivery;
}

int cmd_schedule(const CommandOptions &options, const Scenario &scenario, std::ostream &out) {
    const auto schedule =
        build_schedule(scenario.config, fixed_delivery(scenario, "schedule"), scenario.effective_demands());
    emit(options, out, [&](std::ostream &os) { os << schedule_to_json(schedule).dump(2) << '\n'; });
    return kExitOk;
}

int cmd_verify(const CommandOptions &options, const Scenario &scenario, std::ostream &out, std::ostream &log) {
    const auto &params = fixed_delivery(scenario, "verify");
    const auto demands = scenario.effective_demands();
    validate_config(scenario.config);
    validate(scenario.config, params);
    Schedule schedule;
    if (options.schedule_path) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(*options.schedule_path));
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(std::string("invalid schedule JSON: ") + e.what());
        }
        schedule = schedule_from_json(doc, scenario.config, params);
    } else {
        schedule = build_schedule(scenario.config, params, demands);
    }
    const auto report = verify_schedule(schedule, scenario.config, demands);
    emit(options, out, [&](std::ostream &os) { os << report.summary(); });
    log << (report.pass ? "verification passed\n" : "verification FAILED\n");
    return report.pass ? kExitOk : kExitVerification;
}

int cmd_dof(const CommandOptions &options, const Scenario &scenario, std::ostream &out) {
    const auto eval = evaluate(scenario.config, fixed_delivery(scenario, "dof"), scenario.effective_demands());
    emit(options, out, [&](std::ostream &os) {
        os << dof_report_to_json(eval.dof, eval.verification.pass).dump(2) << '\n';
    });
    return eval.verification.pass ? kExitOk : kExitVerification;
}

int cmd_sweep(const CommandOptions &options, const Scenario &scenario, std::ostream &out, std::ostream &log) {
    SweepResult result;
    try {
        result = dof_sweep(scenario.config, scenario.effective_demands());
    } catch (const std::logic_error &e) {
        if (dynamic_cast<const std::invalid_argument *>(&e) != nullptr) throw;
        throw VerificationFailure(e.what());
    }
    emit(options, out, [&](std::ostream &os) { write_sweep_csv(os, result); });
    if (result.best) {
        const auto &row = result.rows[*result.best];
        log << "DoF_max " << row.dof->to_string() << " at eta_hat=" << row.params.eta_hat << " Q=" << row.params.Q
            << " strategy=" << to_string(row.params.strategy) << '\n';
    } else {
        log << "no feasible delivery row\n";
    }
    return kExitOk;
}

int cmd_sigma(const CommandOptions &options, const Scenario &scenario, std::ostream &out, std::ostream &log) {
    validate_config(scenario.config);
    SigmaExperimentOptions opt;
    opt.P = scenario.config.P;
    opt.tbar = scenario.config.tbar;
    opt.alpha = scenario.config.alpha;
    opt.L = scenario.config.L;
    opt.N = scenario.config.N;
    opt.K = scenario.config.K();
    opt.samples = options.samples.value_or(scenario.samples.value_or(2000));
    opt.seed = options.seed.value_or(scenario.seed.value_or(1));
    opt.exhaustive = options.exhaustive;
    opt.threads = worker_count();
    if (opt.samples < 1) throw UsageError("--samples must be positive");
    const auto result = sigma_experiment(opt);
    emit(options, out, [&](std::ostream &os) { write_sigma_csv(os, result); });
    log << sigma_metadata(opt, result).dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int run_command(const CommandOptions &options, std::ostream &out, std::ostream &log) {
    try {
        const auto scenario = parse_scenario_text(read_file(options.scenario_path));
        if (options.command == "schedule") return cmd_schedule(options, scenario, out);
        if (options.command == "verify") return cmd_verify(options, scenario, out, log);
        if (options.command == "dof") return cmd_dof(options, scenario, out);
        if (options.command == "sweep") return cmd_sweep(options, scenario, out, log);
        if (options.command == "sigma-experiment") return cmd_sigma(options, scenario, out, log);
        throw UsageError("unknown command \"" + options.command + "\"");
    } catch (const UsageError &e) {
        log << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError &e) {
        log << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParseError &e) {
        log << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ConfigError &e) {
        log << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ValidationError &e) {
        log << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const VerificationFailure &e) {
        log << "verification failure: " << e.what() << '\n';
        return kExitVerification;
    }
}

}  // namespace ccsched
