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

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccsched/rational.hpp"

namespace ccsched {

using UserId = int;
using ProfileId = int;
// Ascending list of distinct 1-based profile indices.
using ProfileSet = std::vector<ProfileId>;

inline constexpr int kMaxProfiles = 16;
inline constexpr int kMaxUsers = 256;

// 1-indexed modulus: mod1(c, c) == c and mod1(d + c, c) == mod1(d, c).
int mod1(long long x, long long c);

std::uint64_t binomial(long long n, long long k);

// All k-subsets of `ground`, lexicographic over ground-list positions.
template <typename T>
std::vector<std::vector<T>> ksubsets(const std::vector<T> &ground, int k) {
    const int n = static_cast<int>(ground.size());
    if (k < 0 || k > n) {
        throw std::invalid_argument("ksubsets: k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    }
    std::vector<std::vector<T>> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[i] = i;
    while (true) {
        std::vector<T> subset;
        subset.reserve(pos.size());
        for (int p : pos) subset.push_back(ground[p]);
        out.push_back(std::move(subset));
        int i = k - 1;
        while (i >= 0 && pos[i] == n - k + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
    return out;
}

// [lo..hi] as an ascending list; empty when hi < lo.
std::vector<int> iota_range(int lo, int hi);

struct NetworkConfig {
    int P = 0;
    int tbar = 0;
    int alpha = 0;
    int L = 0;
    int N = 0;
    // user id -> 1-based profile
    std::map<UserId, ProfileId> association;

    int K() const { return static_cast<int>(association.size()); }
    Rational gamma() const { return Rational(tbar, P); }
    // eta()[p-1] is the number of users associated with profile p.
    std::vector<int> eta() const;
    int max_eta() const;
    // Users of profile p in ascending id order.
    std::vector<UserId> users_of(ProfileId p) const;

    // Association where profile p receives the next eta[p-1] consecutive ids, starting at 1.
    static std::map<UserId, ProfileId> association_from_eta(const std::vector<int> &eta);

    bool operator==(const NetworkConfig &) const = default;
};

class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

void validate_config(const NetworkConfig &cfg);

enum class Strategy { A, B };

std::string to_string(Strategy strategy);
Strategy parse_strategy(const std::string &text);

struct DeliveryParams {
    int eta_hat = 0;
    int Q = 0;
    int beta = 0;
    Strategy strategy = Strategy::A;

    bool operator==(const DeliveryParams &) const = default;

    // Users picked from the window profile in a Strategy B transmission.
    int theta(int alpha) const { return alpha - eta_hat * (alpha / eta_hat); }
    std::uint64_t nu1(int tbar) const { return binomial(Q - 2, Q - tbar - 2); }
    std::uint64_t nu2(int tbar) const { return binomial(Q - 1, Q - tbar - 1); }
};

enum class ParamError {
    EtaHatNonPositive,
    EtaHatAboveMaxEta,
    QBelowMin,
    QAboveMax,
    QAboveProfileCount,
    BetaNonPositive,
    BetaAboveMin,
    StrategyAZeroForcing,
    StrategyBRegime,
    StrategyBBeta,
    StrategyBQ,
};

std::string to_string(ParamError code);

class ValidationError : public std::invalid_argument {
  public:
    ValidationError(ParamError code, const std::string &detail)
        : std::invalid_argument(to_string(code) + ": " + detail), code_(code) {}
    ParamError code() const { return code_; }

  private:
    ParamError code_;
};

// Checks params against the config and its realized eta vector. Returns the
// params unchanged on success, throws ValidationError otherwise.
DeliveryParams validate(const NetworkConfig &cfg, const DeliveryParams &params);

// Number of subpackets each mini-file is split into for the given delivery.
std::uint64_t subpackets_per_minifile(const NetworkConfig &cfg, const DeliveryParams &params);

}  // namespace ccsched
