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

#include "ccsched/strategy_b.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ccsched::strategy_b {

PaddedProfile pad_profile(const std::vector<UserId> &served, int eta_hat) {
    if (static_cast<int>(served.size()) > eta_hat) {
        throw std::invalid_argument("profile has more served users than eta_hat");
    }
    PaddedProfile out;
    for (UserId u : served) out.slots.push_back(Slot::real(u));
    out.slots.resize(static_cast<std::size_t>(eta_hat), Slot::phantom());
    return out;
}

std::vector<Slot> head_window(const PaddedProfile &padded, int m, int theta) {
    const int len = static_cast<int>(padded.slots.size());
    if (m < 1 || m > len) throw std::out_of_range("m outside [1, eta_hat]");
    if (theta < 1) throw std::invalid_argument("theta must be positive");
    std::vector<Slot> out;
    for (int i = 0; i < theta; ++i) out.push_back(padded.slots[mod1(i + m, len) - 1]);
    return out;
}

std::vector<Slot> slot_pattern(const Slot &u, std::uint64_t nu1, std::uint64_t nu2, int s) {
    if (nu1 > nu2) throw std::invalid_argument("nu1 exceeds nu2");
    if (s < 1 || static_cast<std::uint64_t>(s) > nu2) throw std::out_of_range("s outside [1, nu2]");
    std::vector<Slot> base(nu2, Slot::phantom());
    std::fill(base.begin(), base.begin() + static_cast<long>(nu1), u);
    std::vector<Slot> out;
    out.reserve(nu2);
    for (std::uint64_t i = 0; i < nu2; ++i) out.push_back(base[mod1(static_cast<long long>(i) + s, nu2) - 1]);
    return out;
}

Companions companion_profiles(const std::vector<int> &delta, int r, int c, int l, int Q) {
    const int P = static_cast<int>(delta.size());
    if (r < 1 || r > P) throw std::out_of_range("r outside [1, P]");
    if (c < 1 || c > P - Q + 1) throw std::out_of_range("c outside [1, P-Q+1]");
    Companions out;
    for (int p = 1; p <= P; ++p) {
        if (p != r) out.others.push_back(p);
    }
    std::stable_sort(out.others.begin(), out.others.end(),
                     [&](int a, int b) { return delta[a - 1] > delta[b - 1]; });
    out.pivot = out.others[c - 1];
    std::vector<int> tail(out.others.begin() + c, out.others.end());
    const auto tuples = ksubsets(tail, Q - 2);
    if (l < 1 || l > static_cast<int>(tuples.size())) throw std::out_of_range("l outside [1, C(P-c-1, Q-2)]");
    out.tuple = tuples[l - 1];
    out.profiles.push_back(out.pivot);
    out.profiles.insert(out.profiles.end(), out.tuple.begin(), out.tuple.end());
    return out;
}

Context::Context(const NetworkConfig &cfg_, const DeliveryParams &params_, const ServedPartition &partition_,
                 const Demands &demands_)
    : cfg(cfg_), params(params_), partition(partition_), demands(demands_) {
    for (const auto &users : partition.served) padded.push_back(pad_profile(users, params.eta_hat));
    theta = params.theta(cfg.alpha);
    nu1 = params.nu1(cfg.tbar);
    nu2 = params.nu2(cfg.tbar);
}

QuintupleContext make_quintuple(const Context &ctx, const Quintuple &q) {
    const auto [r, c, l, m, s] = q;
    if (s < 1 || static_cast<std::uint64_t>(s) > ctx.nu2) throw std::out_of_range("s outside [1, nu2]");
    const auto companions = companion_profiles(ctx.partition.delta, r, c, l, ctx.params.Q);
    QuintupleContext out;
    out.id = q;
    out.B = companions.profiles;
    out.pivot = companions.pivot;
    out.window = head_window(ctx.padded[r - 1], m, ctx.theta);
    const int per_group = ctx.cfg.alpha / ctx.params.eta_hat;
    out.groups = ksubsets(out.B, per_group);
    if (out.groups.size() != ctx.nu2) throw std::logic_error("|C| differs from nu2");
    for (const auto &group : out.groups) {
        std::vector<int> rest;
        for (int p : out.B) {
            if (std::find(group.begin(), group.end(), p) == group.end()) rest.push_back(p);
        }
        if (static_cast<int>(rest.size()) != ctx.cfg.tbar) throw std::logic_error("|Theta_n| differs from tbar");
        out.theta.push_back(std::move(rest));
    }
    return out;
}

std::optional<Transmission> build_transmission(const Context &ctx, const Quintuple &q, SubpacketCounter &counter) {
    const auto qc = make_quintuple(ctx, q);
    const bool window_phantom =
        std::all_of(qc.window.begin(), qc.window.end(), [](const Slot &slot) { return slot.is_phantom(); });
    if (window_phantom && ctx.partition.delta[qc.pivot - 1] == 0) return std::nullopt;

    const int s = q[4];
    std::vector<UserId> window_users;
    for (const auto &slot : qc.window) {
        if (!slot.is_phantom()) window_users.push_back(slot.user());
    }

    Transmission out;
    out.id.assign(q.begin(), q.end());
    for (std::size_t n = 0; n < qc.groups.size(); ++n) {
        // null-set universe: the whole window plus every profile in C(n)
        std::set<UserId> universe(window_users.begin(), window_users.end());
        std::vector<UserId> recipients;
        std::set<UserId> seen;
        for (const auto &slot : qc.window) {
            const Slot picked = slot_pattern(slot, ctx.nu1, ctx.nu2, s)[n];
            if (!picked.is_phantom() && seen.insert(picked.user()).second) recipients.push_back(picked.user());
        }
        for (int p : qc.groups[n]) {
            for (UserId k : ctx.partition.served[p - 1]) {
                universe.insert(k);
                if (!seen.insert(k).second) throw std::logic_error("window user also served through its profile");
                recipients.push_back(k);
            }
        }
        const ProfileSet mini_profiles = ctx.partition.to_profiles(qc.theta[n]);
        for (UserId k : recipients) {
            Codeword cw;
            cw.recipient = k;
            cw.subpacket = {{ctx.demands.at(k), mini_profiles}, counter.take(k, mini_profiles)};
            for (UserId j : universe) {
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
    if (params.strategy != Strategy::B) throw std::invalid_argument("strategy_b::schedule needs strategy B");
    validate(cfg, params);
    Context ctx(cfg, params, partition, demands);
    const int P = partition.P();
    const int Q = params.Q;
    std::vector<Transmission> out;
    for (int r = 1; r <= P; ++r) {
        for (int c = 1; c <= P - Q + 1; ++c) {
            const int tuples = static_cast<int>(binomial(P - c - 1, Q - 2));
            for (int l = 1; l <= tuples; ++l) {
                for (int m = 1; m <= params.eta_hat; ++m) {
                    for (int s = 1; s <= static_cast<int>(ctx.nu2); ++s) {
                        if (auto tx = build_transmission(ctx, {r, c, l, m, s}, counter)) out.push_back(std::move(*tx));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace ccsched::strategy_b
