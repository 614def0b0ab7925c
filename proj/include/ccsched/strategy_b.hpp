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

#include <array>
#include <optional>
#include <vector>

#include "ccsched/core.hpp"
#include "ccsched/placement.hpp"
#include "ccsched/schedule.hpp"

namespace ccsched::strategy_b {

// A real user or the phantom placeholder f*.
class Slot {
  public:
    static Slot real(UserId user) { return Slot(user); }
    static Slot phantom() { return Slot(); }

    bool is_phantom() const { return !user_.has_value(); }
    UserId user() const { return user_.value(); }

    bool operator==(const Slot &) const = default;

  private:
    Slot() = default;
    explicit Slot(UserId user) : user_(user) {}
    std::optional<UserId> user_;
};

// Y_r: served users followed by eta_hat - delta phantoms.
struct PaddedProfile {
    std::vector<Slot> slots;
};

PaddedProfile pad_profile(const std::vector<UserId> &served, int eta_hat);

// E_r^m: theta consecutive slots of Y_r starting at position m, wrapping.
std::vector<Slot> head_window(const PaddedProfile &padded, int m, int theta);

// K_{r,s}^{m,u}: nu1 copies of u then nu2-nu1 phantoms, circularly shifted by s.
std::vector<Slot> slot_pattern(const Slot &u, std::uint64_t nu1, std::uint64_t nu2, int s);

struct Companions {
    std::vector<int> others;   // [P]\{r} sorted by descending delta
    int pivot = 0;             // others[c-1]
    std::vector<int> tuple;    // I_c^r(l)
    std::vector<int> profiles; // B = {pivot} + tuple, pivot first
};

// Companion profiles for (r, c, l) over rank-indexed delta values.
Companions companion_profiles(const std::vector<int> &delta, int r, int c, int l, int Q);

using Quintuple = std::array<int, 5>;

struct QuintupleContext {
    Quintuple id{};
    std::vector<int> B;
    std::vector<Slot> window;
    std::vector<std::vector<int>> groups;  // C(1..nu2)
    std::vector<std::vector<int>> theta;   // Theta_n = B \ C(n)
    int pivot = 0;
};

struct Context {
    const NetworkConfig &cfg;
    const DeliveryParams &params;
    const ServedPartition &partition;
    const Demands &demands;
    std::vector<PaddedProfile> padded;  // by rank
    int theta = 0;
    std::uint64_t nu1 = 0;
    std::uint64_t nu2 = 0;

    Context(const NetworkConfig &cfg, const DeliveryParams &params, const ServedPartition &partition,
            const Demands &demands);
};

QuintupleContext make_quintuple(const Context &ctx, const Quintuple &q);

// nullopt when the window is all phantom and the pivot profile has no served users.
std::optional<Transmission> build_transmission(const Context &ctx, const Quintuple &q, SubpacketCounter &counter);

// Iterates (r, c, l, m, s) lexicographically; skipped quintuples emit nothing.
std::vector<Transmission> schedule(const NetworkConfig &cfg, const DeliveryParams &params,
                                   const ServedPartition &partition, const Demands &demands,
                                   SubpacketCounter &counter);

}  // namespace ccsched::strategy_b
