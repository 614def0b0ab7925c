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

#include "ccsched/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ccsched {

int mod1(long long x, long long c) {
    if (x <= 0 || c <= 0) {
        throw std::invalid_argument("mod1 requires positive arguments, got (" + std::to_string(x) + ", " +
                                    std::to_string(c) + ")");
    }
    return static_cast<int>((x - 1) % c + 1);
}

std::uint64_t binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (long long i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (result > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<int> iota_range(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

std::vector<int> NetworkConfig::eta() const {
    std::vector<int> counts(static_cast<std::size_t>(std::max(P, 0)), 0);
    for (const auto &[user, profile] : association) {
        if (profile >= 1 && profile <= P) ++counts[profile - 1];
    }
    return counts;
}

int NetworkConfig::max_eta() const {
    auto counts = eta();
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::vector<UserId> NetworkConfig::users_of(ProfileId p) const {
    std::vector<UserId> users;
    for (const auto &[user, profile] : association) {
        if (profile == p) users.push_back(user);
    }
    return users;
}

std::map<UserId, ProfileId> NetworkConfig::association_from_eta(const std::vector<int> &eta) {
    std::map<UserId, ProfileId> out;
    UserId next = 1;
    for (std::size_t p = 0; p < eta.size(); ++p) {
        if (eta[p] < 0) throw ConfigError("negative profile length in eta vector");
        for (int i = 0; i < eta[p]; ++i) out.emplace(next++, static_cast<ProfileId>(p + 1));
    }
    return out;
}

void validate_config(const NetworkConfig &cfg) {
    if (cfg.P < 1 || cfg.P > kMaxProfiles) {
        throw ConfigError("P must lie in [1, " + std::to_string(kMaxProfiles) + "], got " + std::to_string(cfg.P));
    }
    if (cfg.tbar <= 0 || cfg.tbar >= cfg.P) {
        throw ConfigError("tbar must satisfy 0 < tbar < P, got tbar=" + std::to_string(cfg.tbar));
    }
    if (std::gcd(cfg.tbar, cfg.P) != 1) throw ConfigError("gcd(tbar, P) must be 1");
    if (cfg.alpha < 1) throw ConfigError("alpha must be positive");
    if (cfg.L < cfg.alpha) throw ConfigError("L must be at least alpha");
    if (cfg.N < 1) throw ConfigError("N must be positive");
    if (cfg.K() > kMaxUsers) throw ConfigError("at most " + std::to_string(kMaxUsers) + " users are supported");
    for (const auto &[user, profile] : cfg.association) {
        if (user < 1) throw ConfigError("user ids must be positive, got " + std::to_string(user));
        if (profile < 1 || profile > cfg.P) {
            throw ConfigError("user " + std::to_string(user) + " maps to profile " + std::to_string(profile) +
                              " outside [1, P]");
        }
    }
}

std::string to_string(Strategy strategy) { return strategy == Strategy::A ? "A" : "B"; }

Strategy parse_strategy(const std::string &text) {
    if (text == "A") return Strategy::A;
    if (text == "B") return Strategy::B;
    throw std::invalid_argument("unknown strategy '" + text + "'");
}

std::string to_string(ParamError code) {
    switch (code) {
        case ParamError::EtaHatNonPositive: return "eta_hat must be positive";
        case ParamError::EtaHatAboveMaxEta: return "eta_hat exceeds max profile length";
        case ParamError::QBelowMin: return "Q below tbar+1";
        case ParamError::QAboveMax: return "Q above tbar+ceil(alpha/beta)";
        case ParamError::QAboveProfileCount: return "Q exceeds P";
        case ParamError::BetaNonPositive: return "beta must be positive";
        case ParamError::BetaAboveMin: return "beta exceeds min(alpha,eta_hat)";
        case ParamError::StrategyAZeroForcing: return "strategy A needs (Q-tbar)*beta <= alpha";
        case ParamError::StrategyBRegime: return "strategy B needs alpha > eta_hat with non-integer alpha/eta_hat";
        case ParamError::StrategyBBeta: return "strategy B needs beta = eta_hat";
        case ParamError::StrategyBQ: return "strategy B needs Q = tbar+ceil(alpha/eta_hat)";
    }
    return "unknown parameter error";
}

DeliveryParams validate(const NetworkConfig &cfg, const DeliveryParams &params) {
    const int alpha = cfg.alpha;
    const int tbar = cfg.tbar;
    const int eta_hat = params.eta_hat;
    const int beta = params.beta;
    const int Q = params.Q;
    auto fail = [](ParamError code, const std::string &detail) { throw ValidationError(code, detail); };

    if (eta_hat < 1) fail(ParamError::EtaHatNonPositive, "eta_hat=" + std::to_string(eta_hat));
    if (eta_hat > cfg.max_eta()) {
        fail(ParamError::EtaHatAboveMaxEta,
             "eta_hat=" + std::to_string(eta_hat) + " > max_p eta_p=" + std::to_string(cfg.max_eta()));
    }
    if (beta < 1) fail(ParamError::BetaNonPositive, "beta=" + std::to_string(beta));
    if (beta > std::min(alpha, eta_hat)) {
        fail(ParamError::BetaAboveMin, "beta=" + std::to_string(beta) + " > min(" + std::to_string(alpha) + "," +
                                           std::to_string(eta_hat) + ")");
    }
    if (Q < tbar + 1) fail(ParamError::QBelowMin, "Q=" + std::to_string(Q) + " < " + std::to_string(tbar + 1));
    const int ceil_ratio = (alpha + beta - 1) / beta;
    if (Q > tbar + ceil_ratio) {
        fail(ParamError::QAboveMax, "Q=" + std::to_string(Q) + " > " + std::to_string(tbar + ceil_ratio));
    }
    if (Q > cfg.P) fail(ParamError::QAboveProfileCount, "Q=" + std::to_string(Q) + " > P=" + std::to_string(cfg.P));

    if (params.strategy == Strategy::A) {
        if ((Q - tbar) * beta > alpha) {
            fail(ParamError::StrategyAZeroForcing,
                 "(Q-tbar)*beta=" + std::to_string((Q - tbar) * beta) + " > alpha=" + std::to_string(alpha));
        }
    } else {
        if (alpha <= eta_hat || alpha % eta_hat == 0) {
            fail(ParamError::StrategyBRegime, "alpha=" + std::to_string(alpha) + ", eta_hat=" + std::to_string(eta_hat));
        }
        if (beta != eta_hat) fail(ParamError::StrategyBBeta, "beta=" + std::to_string(beta));
        const int expected_q = tbar + (alpha + eta_hat - 1) / eta_hat;
        if (Q != expected_q) {
            fail(ParamError::StrategyBQ, "Q=" + std::to_string(Q) + ", expected " + std::to_string(expected_q));
        }
    }
    return params;
}

std::uint64_t subpackets_per_minifile(const NetworkConfig &cfg, const DeliveryParams &params) {
    const int P = cfg.P;
    const int tbar = cfg.tbar;
    const int Q = params.Q;
    if (params.strategy == Strategy::A) {
        return static_cast<std::uint64_t>(params.beta) * binomial(P - tbar - 1, Q - tbar - 1);
    }
    return static_cast<std::uint64_t>(params.eta_hat * tbar + cfg.alpha) * binomial(P - tbar - 1, Q - tbar - 1) *
           binomial(Q - 2, Q - tbar - 2);
}

}  // namespace ccsched
