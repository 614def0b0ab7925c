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

#include <compare>
#include <vector>

#include "ccsched/core.hpp"

namespace ccsched {

// W^n_P: the fragment of file n indexed by a tbar-subset of profiles.
struct MiniFileId {
    int file = 0;
    ProfileSet profiles;

    auto operator<=>(const MiniFileId &) const = default;
};

// W^n_{P,q}
struct SubpacketId {
    MiniFileId mini;
    int q = 0;

    auto operator<=>(const SubpacketId &) const = default;
};

// split_library(cfg)[n-1] holds the C(P, tbar) mini-files of file n.
std::vector<std::vector<MiniFileId>> split_library(const NetworkConfig &cfg);

// Mini-files stored by every user of profile p, ascending.
std::vector<MiniFileId> profile_cache(const NetworkConfig &cfg, ProfileId p);

// Users kept for coded-caching delivery after eta_hat truncation.
//
// Profiles are relabeled by descending eta (ties by ascending original id);
// everything indexed by "rank" below uses that order, rank 1 first.
struct ServedPartition {
    int eta_hat = 0;
    // served[rank-1] = v_{rank,1..delta}, ascending user id.
    std::vector<std::vector<UserId>> served;
    // delta[rank-1] = min(eta_hat, eta of that profile)
    std::vector<int> delta;
    // profile_of_rank[rank-1] = original profile id
    std::vector<ProfileId> profile_of_rank;
    // UC-served users, ascending id.
    std::vector<UserId> excluded;
    int K_M = 0;
    int K_U = 0;

    int P() const { return static_cast<int>(served.size()); }
    // Original profile ids of a set of ranks, sorted ascending.
    ProfileSet to_profiles(const std::vector<int> &ranks) const;
};

ServedPartition select_served(const NetworkConfig &cfg, int eta_hat);

}  // namespace ccsched
