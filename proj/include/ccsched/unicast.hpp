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
#include <vector>

#include "ccsched/placement.hpp"
#include "ccsched/schedule.hpp"

namespace ccsched {

// Greedy unicast rounds: each round sorts users by remaining missing count
// (descending, ties by ascending id) and sends one subpacket to each of the
// first min(alpha, users still missing). Per-user lists are consumed front first.
std::vector<UcRound> schedule_uc(const std::vector<UserId> &excluded,
                                 const std::map<UserId, std::vector<SubpacketId>> &missing, int alpha);

}  // namespace ccsched
