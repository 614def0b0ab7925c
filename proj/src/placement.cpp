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

#include "ccsched/placement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccsched {

std::vector<std::vector<MiniFileId>> split_library(const NetworkConfig &cfg) {
    validate_config(cfg);
    const auto subsets = ksubsets(iota_range(1, cfg.P), cfg.tbar);
    std::vector<std::vector<MiniFileId>> files;
    files.reserve(static_cast<std::size_t>(cfg.N));
    for (int n = 1; n <= cfg.N; ++n) {
        std::vector<MiniFileId> minis;
        minis.reserve(subsets.size());
        for (const auto &subset : subsets) minis.push_back({n, subset});
        files.push_back(std::move(minis));
    }
    return files;
}

std::vector<MiniFileId> profile_cache(const NetworkConfig &cfg, ProfileId p) {
    validate_config(cfg);
    if (p < 1 || p > cfg.P) throw std::out_of_range("profile " + std::to_string(p) + " outside [1, P]");
    std::vector<MiniFileId> out;
    for (const auto &file : split_library(cfg)) {
        for (const auto &mini : file) {
            if (std::binary_search(mini.profiles.begin(), mini.profiles.end(), p)) out.push_back(mini);
        }
    }
    return out;
}

ProfileSet ServedPartition::to_profiles(const std::vector<int> &ranks) const {
    ProfileSet out;
    out.reserve(ranks.size());
    for (int rank : ranks) out.push_back(profile_of_rank.at(static_cast<std::size_t>(rank - 1)));
    std::sort(out.begin(), out.end());
    return out;
}

ServedPartition select_served(const NetworkConfig &cfg, int eta_hat) {
    validate_config(cfg);
    if (eta_hat < 1) throw std::invalid_argument("eta_hat must be positive");
    if (eta_hat > cfg.max_eta()) {
        throw std::invalid_argument("eta_hat=" + std::to_string(eta_hat) + " exceeds max_p eta_p=" +
                                    std::to_string(cfg.max_eta()));
    }
    const auto eta = cfg.eta();
    std::vector<ProfileId> order(static_cast<std::size_t>(cfg.P));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](ProfileId a, ProfileId b) { return eta[a - 1] > eta[b - 1]; });

    ServedPartition out;
    out.eta_hat = eta_hat;
    out.profile_of_rank = order;
    for (ProfileId p : order) {
        auto users = cfg.users_of(p);
        const int keep = std::min<int>(eta_hat, static_cast<int>(users.size()));
        out.served.emplace_back(users.begin(), users.begin() + keep);
        out.delta.push_back(keep);
        out.excluded.insert(out.excluded.end(), users.begin() + keep, users.end());
        out.K_M += keep;
        out.K_U += static_cast<int>(users.size()) - keep;
    }
    std::sort(out.excluded.begin(), out.excluded.end());
    return out;
}

}  // namespace ccsched
