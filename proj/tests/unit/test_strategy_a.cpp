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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ccsched/schedule.hpp"
#include "ccsched/strategy_a.hpp"

using namespace ccsched;
using namespace ccsched::strategy_a;

namespace {

using Rows = std::vector<std::vector<UserId>>;

NetworkConfig three_profile_a() {
    NetworkConfig cfg;
    cfg.P = 3;
    cfg.tbar = 1;
    cfg.alpha = 6;
    cfg.L = 6;
    cfg.N = 12;
    cfg.association = NetworkConfig::association_from_eta({5, 4, 3});
    return cfg;
}

const DeliveryParams kParams{4, 3, 3, Strategy::A};

std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t v = 1;
    for (int i = 1; i <= k; ++i) v = v * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return v;
}

std::vector<Transmission> three_profile_a_cc() {
    const auto cfg = three_profile_a();
    SubpacketCounter counter;
    return schedule(cfg, kParams, select_served(cfg, 4), default_demands(cfg), counter);
}

}  // namespace

TEST_CASE("elevation rows for the three-profile example") {
    const auto s1 = elevate_profile({1, 2, 3, 4}, 3, 4);
    CHECK(s1.rows == Rows{{1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {4, 1, 2}});
    CHECK(s1.phi == 4);
    const auto s2 = elevate_profile({6, 7, 8, 9}, 3, 4);
    CHECK(s2.rows == Rows{{6, 7, 8}, {7, 8, 9}, {8, 9, 6}, {9, 6, 7}});
    const auto s3 = elevate_profile({10, 11, 12}, 3, 4);
    CHECK(s3.rows == Rows{{10, 11, 12}, {10, 11, 12}, {10, 11, 12}, {}});
    CHECK(s3.phi == 3);
    const auto empty = elevate_profile({}, 2, 3);
    CHECK(empty.rows == Rows{{}, {}, {}});
    CHECK_THROWS(elevate_profile({1, 2, 3}, 2, 2));
}

TEST_CASE("short profiles repeat whole when beta exceeds delta") {
    const auto s = elevate_profile({5, 6}, 3, 4);
    CHECK(s.phi == 3);
    CHECK(s.rows == Rows{{5, 6}, {5, 6}, {5, 6}, {}});
}

TEST_CASE("profile families") {
    CHECK(profile_families(1, 3, 3) == Rows{{2, 3}});
    CHECK(profile_families(4, 6, 3) == Rows{{5, 6}});
    CHECK(profile_families(1, 6, 3).size() == 10);
    CHECK(profile_families(2, 6, 3).size() == 6);
    CHECK_THROWS(profile_families(5, 6, 3));
    CHECK_THROWS(profile_families(0, 6, 3));
}

TEST_CASE("served set for the first triple") {
    std::vector<ElevatedProfile> elevated{elevate_profile({1, 2, 3, 4}, 3, 4), elevate_profile({6, 7, 8, 9}, 3, 4),
                                          elevate_profile({10, 11, 12}, 3, 4)};
    const auto t = served_set(elevated, 1, 1, 1, 3);
    REQUIRE(t.has_value());
    CHECK(*t == std::vector<UserId>{1, 2, 3, 6, 7, 8, 10, 11, 12});
    CHECK(served_set(elevated, 1, 4, 1, 3)->size() == 6);

    elevated[0] = elevate_profile({}, 3, 4);
    CHECK_FALSE(served_set(elevated, 1, 1, 1, 3).has_value());
}

TEST_CASE("first transmission matches the worked expansion") {
    const auto cc = three_profile_a_cc();
    REQUIRE(!cc.empty());
    const auto &x = cc.front();
    CHECK(x.id == std::vector<int>{1, 1, 1});

    std::map<ProfileSet, std::set<UserId>> by_mini;
    for (const auto &cw : x.codewords) by_mini[cw.subpacket.mini.profiles].insert(cw.recipient);
    CHECK(by_mini.size() == 3);
    CHECK(by_mini[{1}] == std::set<UserId>{6, 7, 8, 10, 11, 12});
    CHECK(by_mini[{2}] == std::set<UserId>{1, 2, 3, 10, 11, 12});
    CHECK(by_mini[{3}] == std::set<UserId>{1, 2, 3, 6, 7, 8});

    std::vector<SubpacketId> user1;
    for (const auto &cw : x.codewords) {
        if (cw.recipient == 1) user1.push_back(cw.subpacket);
    }
    CHECK(user1 == std::vector<SubpacketId>{{{1, {2}}, 1}, {{1, {3}}, 1}});

    for (const auto &cw : x.codewords) {
        if (cw.recipient == 6 && cw.subpacket.mini.profiles == ProfileSet{1}) {
            CHECK(cw.nullset == std::vector<UserId>{7, 8, 10, 11, 12});
        }
        CHECK(cw.nullset.size() <= 5);
    }
}

TEST_CASE("schedule size for the three-profile example") {
    const auto cc = three_profile_a_cc();
    CHECK(cc.size() == 4);
    std::size_t entries = 0;
    for (const auto &t : cc) entries += t.recipients().size();
    CHECK(entries == 33);
    CHECK(cc[0].recipients().size() == 9);
    CHECK(cc[3].recipients().size() == 6);

    // every served user appears in beta * C(P-1, Q-1) transmissions
    std::map<UserId, int> appearances;
    for (const auto &t : cc) {
        for (UserId u : t.recipients()) ++appearances[u];
    }
    CHECK(appearances.size() == 11);
    for (const auto &[u, n] : appearances) CHECK(n == 3);
    CHECK(appearances.count(5) == 0);
}

TEST_CASE("per-transmission subpackets per user") {
    // C(Q-1, Q-tbar-1) with Q=3, tbar=1
    for (const auto &t : three_profile_a_cc()) {
        std::map<UserId, int> count;
        for (const auto &cw : t.codewords) ++count[cw.recipient];
        for (const auto &[u, n] : count) CHECK(n == 2);
    }
}

TEST_CASE("telescoping family identity") {
    for (int P = 1; P <= 12; ++P) {
        for (int Q = 2; Q <= P; ++Q) {
            for (int p = 1; p <= P; ++p) {
                std::uint64_t lhs = choose(P - p, Q - 1);
                for (int r = 1; r <= p - 1; ++r) lhs += choose(P - r - 1, Q - 2);
                CHECK(lhs == choose(P - 1, Q - 1));
            }
        }
    }
}

TEST_CASE("each missing pair is delivered exactly the split count") {
    std::mt19937 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        NetworkConfig cfg;
        cfg.P = 2 + static_cast<int>(rng() % 4);
        cfg.tbar = 1 + static_cast<int>(rng() % 2);
        if (cfg.tbar >= cfg.P || std::gcd(cfg.tbar, cfg.P) != 1) continue;
        cfg.alpha = 1 + static_cast<int>(rng() % 6);
        cfg.L = cfg.alpha;
        cfg.N = 5;
        std::vector<int> eta(cfg.P);
        for (auto &e : eta) e = static_cast<int>(rng() % 5);
        eta[0] = std::max(eta[0], 1);
        cfg.association = NetworkConfig::association_from_eta(eta);
        const int eta_hat = 1 + static_cast<int>(rng() % cfg.max_eta());
        const int beta = 1 + static_cast<int>(rng() % std::min(cfg.alpha, eta_hat));
        const int Q = cfg.tbar + 1 + static_cast<int>(rng() % 2);
        const DeliveryParams params{eta_hat, Q, beta, Strategy::A};
        try {
            validate(cfg, params);
        } catch (const ValidationError &) {
            continue;
        }
        ++checked;
        const auto part = select_served(cfg, eta_hat);
        SubpacketCounter counter;
        const auto cc = schedule(cfg, params, part, default_demands(cfg), counter);
        std::map<std::pair<UserId, ProfileSet>, int> delivered;
        for (const auto &t : cc) {
            for (const auto &cw : t.codewords) ++delivered[{cw.recipient, cw.subpacket.mini.profiles}];
        }
        const auto split = beta * choose(cfg.P - cfg.tbar - 1, Q - cfg.tbar - 1);
        // each served user misses C(P-1, tbar) mini-files
        CHECK(delivered.size() == static_cast<std::size_t>(part.K_M) * choose(cfg.P - 1, cfg.tbar));
        for (const auto &[key, n] : delivered) {
            CHECK(n == static_cast<int>(split));
            CHECK(std::find(key.second.begin(), key.second.end(), cfg.association.at(key.first)) == key.second.end());
        }
    }
    CHECK(checked >= 30);
}
