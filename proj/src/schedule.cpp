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

#include "ccsched/schedule.hpp"

#include <algorithm>

#include "ccsched/strategy_a.hpp"
#include "ccsched/strategy_b.hpp"
#include "ccsched/unicast.hpp"

namespace ccsched {

Demands default_demands(const NetworkConfig &cfg) {
    Demands out;
    for (const auto &[user, profile] : cfg.association) out.emplace(user, mod1(user, cfg.N));
    return out;
}

std::vector<UserId> Transmission::recipients() const {
    std::vector<UserId> out;
    for (const auto &cw : codewords) out.push_back(cw.recipient);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Schedule build_schedule(const NetworkConfig &cfg, const DeliveryParams &params, const Demands &demands) {
    validate_config(cfg);
    validate(cfg, params);
    for (const auto &[user, profile] : cfg.association) {
        auto it = demands.find(user);
        if (it == demands.end()) throw ConfigError("no demand for user " + std::to_string(user));
        if (it->second < 1 || it->second > cfg.N) {
            throw ConfigError("user " + std::to_string(user) + " demands file outside [1, N]");
        }
    }

    Schedule out;
    out.strategy = params.strategy;
    out.params = params;
    out.subpackets_per_minifile = subpackets_per_minifile(cfg, params);

    const auto partition = select_served(cfg, params.eta_hat);
    SubpacketCounter counter;
    out.cc = params.strategy == Strategy::A ? strategy_a::schedule(cfg, params, partition, demands, counter)
                                            : strategy_b::schedule(cfg, params, partition, demands, counter);

    const auto minis = ksubsets(iota_range(1, cfg.P), cfg.tbar);
    std::map<UserId, std::vector<SubpacketId>> missing;
    for (UserId u : partition.excluded) {
        const ProfileId p = cfg.association.at(u);
        auto &list = missing[u];
        for (const auto &profiles : minis) {
            if (std::binary_search(profiles.begin(), profiles.end(), p)) continue;
            const int first = counter.delivered(u, profiles) + 1;
            for (int q = first; q <= static_cast<int>(out.subpackets_per_minifile); ++q) {
                list.push_back({{demands.at(u), profiles}, q});
            }
        }
    }
    out.uc = schedule_uc(partition.excluded, missing, cfg.alpha);
    return out;
}

}  // namespace ccsched
