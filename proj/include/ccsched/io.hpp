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
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ccsched/analysis.hpp"
#include "ccsched/core.hpp"
#include "ccsched/experiment.hpp"
#include "ccsched/schedule.hpp"

namespace ccsched {

// Malformed or structurally invalid input text.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Scenario {
    NetworkConfig config;
    // Whether the file spelled out user -> profile pairs rather than an eta vector.
    bool explicit_association = false;
    // nullopt means "sweep".
    std::optional<DeliveryParams> delivery;
    std::optional<Demands> demands;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;

    Demands effective_demands() const { return demands ? *demands : default_demands(config); }
    bool operator==(const Scenario &) const = default;
};

Scenario parse_scenario(const nlohmann::json &doc);
Scenario parse_scenario_text(const std::string &text);
nlohmann::json to_json(const Scenario &scenario);

// Schedules are an array of {"step", "id", "codewords"} objects; the delivery
// parameters travel with the scenario.
nlohmann::json schedule_to_json(const Schedule &schedule);
Schedule schedule_from_json(const nlohmann::json &doc, const NetworkConfig &cfg, const DeliveryParams &params);

nlohmann::json dof_report_to_json(const DofReport &report, bool verified);

void write_sweep_csv(std::ostream &out, const SweepResult &result);
void write_sigma_csv(std::ostream &out, const SigmaExperimentResult &result);
nlohmann::json sigma_metadata(const SigmaExperimentOptions &options, const SigmaExperimentResult &result);

}  // namespace ccsched
