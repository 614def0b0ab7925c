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

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ccsched/core.hpp"
#include "ccsched/placement.hpp"
#include "ccsched/schedule.hpp"

namespace ccsched {

namespace strategy_a {

// S_p: eta_hat rows; rows past phi are empty. Rows are multisets.
struct ElevatedProfile {
    std::vector<std::vector<UserId>> rows;
    int phi = 0;
    int delta = 0;
};

ElevatedProfile elevate_profile(const std::vector<UserId> &served, int beta, int eta_hat);

// M_r: the (Q-1)-subsets of [r+1..P] in ksubsets order.
std::vector<std::vector<int>> profile_families(int r, int P, int Q);

// T_{r,c,l} over rank-indexed elevated profiles; nullopt when delta_r == 0.
std::optional<std::vector<UserId>> served_set(const std::vector<ElevatedProfile> &elevated, int r, int c, int l,
                                              int Q);

using Triple = std::array<int, 3>;

struct Context {
    const NetworkConfig &cfg;
    const DeliveryParams &params;
    const ServedPartition &partition;
    const Demands &demands;
    std::vector<ElevatedProfile> elevated;  // by rank

    Context(const NetworkConfig &cfg, const DeliveryParams &params, const ServedPartition &partition,
            const Demands &demands);
};

Transmission build_transmission(const Context &ctx, const Triple &triple, SubpacketCounter &counter);

// All non-skipped triples in lexicographic (r, c, l) order.
std::vector<Transmission> schedule(const NetworkConfig &cfg, const DeliveryParams &params,
                                   const ServedPartition &partition, const Demands &demands,
                                   SubpacketCounter &counter);

}  // namespace strategy_a
}  // namespace ccsched
