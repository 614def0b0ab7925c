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
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccsched/core.hpp"
#include "ccsched/placement.hpp"

namespace ccsched {

// user id -> demanded file index in [N]
using Demands = std::map<UserId, int>;

// Every user k demands file mod1(k, N).
Demands default_demands(const NetworkConfig &cfg);

// One symbolic stream: `subpacket` precoded towards `recipient` with nulls at `nullset`.
struct Codeword {
    UserId recipient = 0;
    SubpacketId subpacket;
    std::vector<UserId> nullset;  // ascending
};

struct Transmission {
    // (r,c,l) for Strategy A, (r,c,l,m,s) for Strategy B, (round) for unicast.
    std::vector<int> id;
    std::vector<Codeword> codewords;

    // Distinct recipients, ascending.
    std::vector<UserId> recipients() const;
};

using UcRound = Transmission;

struct Schedule {
    Strategy strategy = Strategy::A;
    DeliveryParams params;
    std::uint64_t subpackets_per_minifile = 0;
    std::vector<Transmission> cc;
    std::vector<UcRound> uc;
};

// Thrown when a codeword would need more than alpha-1 zero-forcing nulls.
class InfeasibleTransmission : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Next subpacket index per (user, mini-file profile set). Shared by the coded
// and unicast steps of one schedule.
class SubpacketCounter {
  public:
    int take(UserId user, const ProfileSet &profiles) { return ++next_[{user, profiles}]; }
    int delivered(UserId user, const ProfileSet &profiles) const {
        auto it = next_.find({user, profiles});
        return it == next_.end() ? 0 : it->second;
    }

  private:
    std::map<std::pair<UserId, ProfileSet>, int> next_;
};

// Validates params, then builds the coded-caching step with the requested
// strategy followed by greedy unicast for the excluded users.
Schedule build_schedule(const NetworkConfig &cfg, const DeliveryParams &params, const Demands &demands);

}  // namespace ccsched
