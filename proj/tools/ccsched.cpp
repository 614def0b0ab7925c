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

#include <iostream>

#include "CLI11.hpp"
#include "ccsched/cli.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Shared-cache coded caching schedule synthesizer and DoF analyzer"};
    app.require_subcommand(1, 1);

    ccsched::CommandOptions options;
    std::string out_path;
    std::string schedule_path;
    int samples = 0;
    std::uint64_t seed = 0;

    const auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--scenario", options.scenario_path, "Scenario JSON file")->required();
        cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
    };
    add_common(app.add_subcommand("schedule", "Emit the full transmission listing as JSON"));
    auto *verify = app.add_subcommand("verify", "Check coverage and zero-forcing feasibility");
    add_common(verify);
    verify->add_option("--schedule", schedule_path, "Verify this schedule JSON instead of building one");
    add_common(app.add_subcommand("dof", "Report exact DoF as JSON"));
    add_common(app.add_subcommand("sweep", "Evaluate every (eta_hat, Q) row as CSV"));
    auto *sigma = app.add_subcommand("sigma-experiment", "Average DoF_max per sigma bin as CSV");
    add_common(sigma);
    sigma->add_option("--samples", samples, "Sampled associations (default 2000)")->check(CLI::PositiveNumber);
    sigma->add_option("--seed", seed, "RNG seed (default 1)");
    sigma->add_flag("--exhaustive", options.exhaustive, "Enumerate every association instead of sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ccsched::kExitUsage;
    }

    auto *chosen = app.get_subcommands().front();
    options.command = chosen->get_name();
    if (chosen->count("--out") > 0) options.out_path = out_path;
    if (chosen->get_option_no_throw("--schedule") != nullptr && chosen->count("--schedule") > 0) {
        options.schedule_path = schedule_path;
    }
    if (chosen->get_option_no_throw("--samples") != nullptr && chosen->count("--samples") > 0) options.samples = samples;
    if (chosen->get_option_no_throw("--seed") != nullptr && chosen->count("--seed") > 0) options.seed = seed;
    return ccsched::run_command(options, std::cout, std::cerr);
}
