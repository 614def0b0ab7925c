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

#include "ccsched/strategy_a.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ccsched::strategy_a {

ElevatedProfile elevate_profile(const std::vector<UserId> &served, int beta, int eta_hat) {
    const int delta = static_cast<int>(served.size());
    if (beta < 1) throw std::invalid_argument("beta must be positive");
    if (delta > eta_hat) throw std::invalid_argument("profile has more served users than eta_hat");
    ElevatedProfile out;
    out.delta = delta;
    out.phi = std::max(beta, delta);
    if (out.phi > eta_hat) throw std::invalid_argument("beta exceeds eta_hat");
    out.rows.resize(static_cast<std::size_t>(eta_hat));
    for (int j = 1; j <= out.phi; ++j) {
        auto &row = out.rows[j - 1];
        if (delta <= beta) {
            row = served;
        } else {
            for (int i = 1; i <= beta; ++i) row.push_back(served[mod1(i + j - 1, delta) - 1]);
        }
    }
    return out;
}

std::vector<std::vector<int>> profile_families(int r, int P, int Q) {
    if (r < 1 || r > P - Q + 1) {
        throw std::out_of_range("r=" + std::to_string(r) + " outside [1, P-Q+1]");
    }
    return ksubsets(iota_range(r + 1, P), Q - 1);
}

std::optional<std::vector<UserId>> served_set(const std::vector<ElevatedProfile> &elevated, int r, int c, int l,
                                              int Q) {
    const int P = static_cast<int>(elevated.size());
    const auto families = profile_families(r, P, Q);
    const auto &head = elevated[r - 1];
    if (c < 1 || c > head.phi) throw std::out_of_range("c outside [1, phi_r]");
    if (l < 1 || l > static_cast<int>(families.size())) throw std::out_of_range("l outside [1, C(P-r, Q-1)]");
    if (head.delta == 0) return std::nullopt;
    std::vector<UserId> out = head.rows[c - 1];
    for (int b : families[l - 1]) {
        const auto &row = elevated[b - 1].rows[c - 1];
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

Context::Context(const NetworkConfig &cfg_, const DeliveryParams &params_, const ServedPartition &partition_,
                 const Demands &demands_)
    : cfg(cfg_), params(params_), partition(partition_), demands(demands_) {
    for (const auto &users : partition.served) {
        elevated.push_back(elevate_profile(users, params.beta, params.eta_hat));
    }
}

Transmission build_transmission(const Context &ctx, const Triple &triple, SubpacketCounter &counter) {
    const auto [r, c, l] = triple;
    const int P = ctx.partition.P();
    if (ctx.elevated[r - 1].delta == 0) throw std::logic_error("triple is skipped: delta_r = 0");
    const auto families = profile_families(r, P, ctx.params.Q);
    std::vector<int> active{r};
    active.insert(active.end(), families.at(l - 1).begin(), families.at(l - 1).end());

    Transmission out;
    out.id = {r, c, l};
    for (const auto &lambda : ksubsets(active, ctx.cfg.tbar)) {
        std::vector<int> rest;
        for (int p : active) {
            if (std::find(lambda.begin(), lambda.end(), p) == lambda.end()) rest.push_back(p);
        }
        std::set<UserId> group;
        std::vector<UserId> order;
        for (int p : rest) {
            for (UserId k : ctx.elevated[p - 1].rows[c - 1]) {
                if (group.insert(k).second) order.push_back(k);
            }
        }
        const ProfileSet mini_profiles = ctx.partition.to_profiles(lambda);
        for (UserId k : order) {
            Codeword cw;
            cw.recipient = k;
            cw.subpacket = {{ctx.demands.at(k), mini_profiles}, counter.take(k, mini_profiles)};
            for (UserId j : group) {
                if (j != k) cw.nullset.push_back(j);
            }
            if (static_cast<int>(cw.nullset.size()) > ctx.cfg.alpha - 1) {
                throw InfeasibleTransmission("null set of size " + std::to_string(cw.nullset.size()) +
                                             " exceeds alpha-1");
            }
            out.codewords.push_back(std::move(cw));
        }
    }
    return out;
}

std::vector<Transmission> schedule(const NetworkConfig &cfg, const DeliveryParams &params,
                                   const ServedPartition &partition, const Demands &demands,
                                   SubpacketCounter &counter) {
    if (params.strategy != Strategy::A) throw std::invalid_argument("strategy_a::schedule needs strategy A");
    validate(cfg, params);
    Context ctx(cfg, params, partition, demands);
    const int P = partition.P();
    std::vector<Transmission> out;
    for (int r = 1; r <= P - params.Q + 1; ++r) {
        const auto &head = ctx.elevated[r - 1];
        if (head.delta == 0) continue;
        const int families = static_cast<int>(binomial(P - r, params.Q - 1));
        for (int c = 1; c <= head.phi; ++c) {
            for (int l = 1; l <= families; ++l) out.push_back(build_transmission(ctx, {r, c, l}, counter));
        }
    }
    return out;
}

}  // namespace ccsched::strategy_a
