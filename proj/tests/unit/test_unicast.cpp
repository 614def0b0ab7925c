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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "ccsched/schedule.hpp"
#include "ccsched/unicast.hpp"

using namespace ccsched;

namespace {

std::vector<SubpacketId> subpackets(int file, int count) {
    std::vector<SubpacketId> out;
    for (int q = 1; q <= count; ++q) out.push_back({{file, {2}}, q});
    return out;
}

}  // namespace

TEST_CASE("empty input gives no rounds") {
    CHECK(schedule_uc({}, {}, 4).empty());
}

TEST_CASE("single excluded user is served one subpacket per round") {
    const auto rounds = schedule_uc({5}, {{5, subpackets(5, 6)}}, 6);
    CHECK(rounds.size() == 6);
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        REQUIRE(rounds[i].codewords.size() == 1);
        CHECK(rounds[i].codewords[0].recipient == 5);
        CHECK(rounds[i].codewords[0].subpacket.q == static_cast<int>(i) + 1);
        CHECK(rounds[i].codewords[0].nullset.empty());
        CHECK(rounds[i].id == std::vector<int>{static_cast<int>(i) + 1});
    }
}

TEST_CASE("four users, two streams, three subpackets each") {
    std::map<UserId, std::vector<SubpacketId>> missing;
    for (UserId u = 1; u <= 4; ++u) missing[u] = subpackets(u, 3);
    const auto rounds = schedule_uc({1, 2, 3, 4}, missing, 2);
    CHECK(rounds.size() == 6);
    std::map<UserId, std::set<SubpacketId>> got;
    for (const auto &r : rounds) {
        CHECK(r.codewords.size() == 2);
        CHECK(r.recipients().size() == 2);
        for (const auto &cw : r.codewords) {
            CHECK(got[cw.recipient].insert(cw.subpacket).second);
            CHECK(cw.nullset.size() == 1);
        }
    }
    for (UserId u = 1; u <= 4; ++u) CHECK(got[u].size() == 3);
    // first round: all tied at 3, lowest ids first
    CHECK(rounds[0].recipients() == std::vector<UserId>{1, 2});
    // second round: users 3 and 4 now have the most left
    CHECK(rounds[1].recipients() == std::vector<UserId>{3, 4});
}

TEST_CASE("round sizes shrink as users finish") {
    std::map<UserId, std::vector<SubpacketId>> missing{{1, subpackets(1, 5)}, {2, subpackets(2, 1)}, {3, subpackets(3, 1)}};
    const auto rounds = schedule_uc({1, 2, 3}, missing, 3);
    // greedy simulation by hand: (1,2,3) then 1 alone four times
    CHECK(rounds.size() == 5);
    CHECK(rounds[0].codewords.size() == 3);
    for (std::size_t i = 1; i < rounds.size(); ++i) CHECK(rounds[i].recipients() == std::vector<UserId>{1});
}

TEST_CASE("round count equals the ceiling formula when lists are balanced") {
    for (int users = 1; users <= 7; ++users) {
        for (int alpha = 1; alpha <= 5; ++alpha) {
            for (int each = 1; each <= 4; ++each) {
                std::map<UserId, std::vector<SubpacketId>> missing;
                std::vector<UserId> excluded;
                for (UserId u = 1; u <= users; ++u) {
                    missing[u] = subpackets(u, each);
                    excluded.push_back(u);
                }
                const auto rounds = schedule_uc(excluded, missing, alpha);
                const int total = users * each;
                const int cap = std::min(users, alpha);
                CHECK(static_cast<int>(rounds.size()) == (total + cap - 1) / cap);
                for (const auto &r : rounds) CHECK(static_cast<int>(r.codewords.size()) <= alpha);
            }
        }
    }
}
