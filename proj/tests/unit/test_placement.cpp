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
#include <random>
#include <set>

#include "ccsched/placement.hpp"

using namespace ccsched;

namespace {

NetworkConfig make_config(int P, int tbar, std::vector<int> eta, int N = 4) {
    NetworkConfig cfg;
    cfg.P = P;
    cfg.tbar = tbar;
    cfg.alpha = 6;
    cfg.L = 6;
    cfg.N = N;
    cfg.association = NetworkConfig::association_from_eta(eta);
    return cfg;
}

}  // namespace

TEST_CASE("library split sizes") {
    CHECK(split_library(make_config(3, 1, {5, 4, 3})).front().size() == 3);
    CHECK(split_library(make_config(2, 1, {1, 1})).front().size() == 2);
    CHECK(split_library(make_config(6, 1, {1, 1, 1, 1, 1, 1})).front().size() == 6);
    const auto lib = split_library(make_config(5, 2, {1, 1, 1, 1, 1}, 3));
    CHECK(lib.size() == 3);
    for (const auto &file : lib) {
        CHECK(file.size() == 10);
        for (const auto &m : file) CHECK(m.profiles.size() == 2);
    }
    CHECK(lib[1][0].file == 2);
}

TEST_CASE("profile caches") {
    const auto cfg = make_config(3, 1, {5, 4, 3});
    const auto z1 = profile_cache(cfg, 1);
    CHECK(z1.size() == static_cast<std::size_t>(cfg.N));
    for (const auto &m : z1) CHECK(m.profiles == ProfileSet{1});
    CHECK_THROWS_AS(profile_cache(cfg, 0), std::out_of_range);
    CHECK_THROWS_AS(profile_cache(cfg, 4), std::out_of_range);

    const auto six = make_config(6, 1, {1, 1, 1, 1, 1, 1}, 5);
    const auto z4 = profile_cache(six, 4);
    CHECK(z4.size() == 5);
    for (const auto &m : z4) CHECK(m.profiles == ProfileSet{4});
}

TEST_CASE("cache ratio and per-mini-file replication") {
    const auto cfg = make_config(5, 2, {1, 1, 1, 1, 1}, 3);
    std::map<MiniFileId, int> holders;
    for (int p = 1; p <= cfg.P; ++p) {
        const auto z = profile_cache(cfg, p);
        // |Z_p| / (N * C(P, tbar)) = tbar / P  <=>  |Z_p| * P = N * C(P, tbar) * tbar
        CHECK(z.size() * 5 == 3u * 10u * 2u);
        for (const auto &m : z) ++holders[m];
    }
    CHECK(holders.size() == 30);
    for (const auto &[m, count] : holders) CHECK(count == cfg.tbar);
}

TEST_CASE("served partition for the three-profile example") {
    const auto part = select_served(make_config(3, 1, {5, 4, 3}), 4);
    CHECK(part.served == std::vector<std::vector<UserId>>{{1, 2, 3, 4}, {6, 7, 8, 9}, {10, 11, 12}});
    CHECK(part.excluded == std::vector<UserId>{5});
    CHECK(part.K_M == 11);
    CHECK(part.K_U == 1);
    CHECK(part.delta == std::vector<int>{4, 4, 3});
}

TEST_CASE("served partition truncation") {
    const auto part = select_served(make_config(3, 1, {7, 5, 3}), 5);
    CHECK(part.delta == std::vector<int>{5, 5, 3});
    CHECK(part.K_M == 13);
    CHECK(part.K_U == 2);
    CHECK(part.excluded == std::vector<UserId>{6, 7});

    const auto uniform = select_served(make_config(3, 1, {4, 4, 4}), 4);
    CHECK(uniform.excluded.empty());
    CHECK(uniform.K_U == 0);

    CHECK_THROWS(select_served(make_config(3, 1, {4, 4, 4}), 5));
    CHECK_THROWS(select_served(make_config(3, 1, {4, 4, 4}), 0));
}

TEST_CASE("profiles are relabeled by descending size, ties by id") {
    const auto part = select_served(make_config(4, 1, {1, 3, 0, 3}), 2);
    CHECK(part.profile_of_rank == std::vector<ProfileId>{2, 4, 1, 3});
    CHECK(part.delta == std::vector<int>{2, 2, 1, 0});
    CHECK(part.served[0] == std::vector<UserId>{2, 3});
    CHECK(part.served[1] == std::vector<UserId>{5, 6});
    CHECK(part.served[2] == std::vector<UserId>{1});
    CHECK(part.served[3].empty());
    CHECK(part.to_profiles({1, 3}) == ProfileSet{1, 2});
}

TEST_CASE("partition invariants on random associations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int P = 2 + static_cast<int>(rng() % 5);
        std::vector<int> eta(P);
        for (auto &e : eta) e = static_cast<int>(rng() % 6);
        if (*std::max_element(eta.begin(), eta.end()) == 0) eta[0] = 1;
        const auto cfg = make_config(P, 1, eta);
        for (int eh = 1; eh <= cfg.max_eta(); ++eh) {
            const auto part = select_served(cfg, eh);
            CHECK(part.K_M + part.K_U == cfg.K());
            CHECK(std::is_sorted(part.delta.rbegin(), part.delta.rend()));
            CHECK(part.delta.front() == eh);
            std::set<UserId> all(part.excluded.begin(), part.excluded.end());
            for (const auto &v : part.served) all.insert(v.begin(), v.end());
            CHECK(all.size() == static_cast<std::size_t>(cfg.K()));
        }
    }
}
