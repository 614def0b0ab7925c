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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ccsched {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitValidation = 3,
    kExitVerification = 4,
    kExitIo = 5,
};

struct CommandOptions {
    std::string command;  // schedule | verify | dof | sweep | sigma-experiment
    std::string scenario_path;
    std::optional<std::string> out_path;  // stdout when absent
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    bool exhaustive = false;
    // verify only: check this schedule file instead of building one
    std::optional<std::string> schedule_path;
};

// Runs one command. Results go to out_path (or `out`); diagnostics and
// metadata go to `log`. Returns an ExitCode.
int run_command(const CommandOptions &options, std::ostream &out, std::ostream &log);

}  // namespace ccsched
