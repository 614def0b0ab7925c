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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccsched/core.hpp"
#include "ccsched/placement.hpp"
#include "ccsched/schedule.hpp"

namespace ccsched {

struct Delivery {
    UserId user = 0;
    SubpacketId subpacket;
};

// Outcome of re-deriving coverage and zero-forcing feasibility from a raw
// transmission list. Nothing here reuses the schedulers' set construction.
struct VerificationReport {
    std::map<UserId, std::set<SubpacketId>> received;
    std::vector<Delivery> duplicates;
    std::vector<Delivery> missing;
    // Deliveries of something the user did not need: another file, a cached
    // mini-file, or a subpacket index past the split.
    std::vector<Delivery> unexpected;
    std::vector<std::string> violations;
    std::size_t max_nullset = 0;
    int max_profile_service = 0;
    bool pass = true;

    void merge(const VerificationReport &other);
    std::string summary() const;
};

// Every user must end with cached + received = all subpackets of its demand,
// each received exactly once across the coded and unicast steps.
VerificationReport check_coverage(const Schedule &schedule, const NetworkConfig &cfg, const Demands &demands);

// Null sets within alpha-1, per-profile and per-transmission load limits, and
// every interfering stream at each recipient either cached or nulled there.
VerificationReport check_zf_feasibility(const Schedule &schedule, const NetworkConfig &cfg);

VerificationReport verify_schedule(const Schedule &schedule, const NetworkConfig &cfg, const Demands &demands);

}  // namespace ccsched
