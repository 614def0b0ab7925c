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

#include "ccsched/unicast.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccsched {

std::vector<UcRound> schedule_uc(const std::vector<UserId> &excluded,
                                 const std::map<UserId, std::vector<SubpacketId>> &missing, int alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be positive");
    struct Pending {
        UserId user;
        const std::vector<SubpacketId> *list;
        std::size_t next;
        std::size_t remaining() const { return list->size() - next; }
    };
    std::vector<Pending> pending;
    for (UserId u : excluded) {
        auto it = missing.find(u);
        if (it != missing.end() && !it->second.empty()) pending.push_back({u, &it->second, 0});
    }
    std::sort(pending.begin(), pending.end(), [](const Pending &a, const Pending &b) { return a.user < b.user; });

    std::vector<UcRound> rounds;
    while (!pending.empty()) {
        std::stable_sort(pending.begin(), pending.end(), [](const Pending &a, const Pending &b) {
            if (a.remaining() != b.remaining()) return a.remaining() > b.remaining();
            return a.user < b.user;
        });
        const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(alpha), pending.size());
        UcRound round;
        round.id = {static_cast<int>(rounds.size()) + 1};
        for (std::size_t i = 0; i < take; ++i) {
            Codeword cw;
            cw.recipient = pending[i].user;
            cw.subpacket = (*pending[i].list)[pending[i].next++];
            for (std::size_t j = 0; j < take; ++j) {
                if (j != i) cw.nullset.push_back(pending[j].user);
            }
            std::sort(cw.nullset.begin(), cw.nullset.end());
            round.codewords.push_back(std::move(cw));
        }
        rounds.push_back(std::move(round));
        std::erase_if(pending, [](const Pending &p) { return p.remaining() == 0; });
    }
    return rounds;
}

}  // namespace ccsched
