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
#include <optional>
#include <vector>

#include "ccsched/core.hpp"
#include "ccsched/placement.hpp"
#include "ccsched/rational.hpp"
#include "ccsched/schedule.hpp"
#include "ccsched/verify.hpp"

namespace ccsched {

struct DofReport {
    std::uint64_t J_M = 0;
    std::uint64_t J_U = 0;
    std::uint64_t T_M = 0;
    std::uint64_t T_U = 0;
    Rational empirical;
    std::optional<Rational> closed_form;
    DeliveryParams params;
};

class UndefinedDof : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Counts served users and transmissions directly from the schedule. J_M sums
// distinct recipients per coded transmission; J_U counts unicast entries.
DofReport empirical_dof(const Schedule &schedule);

// Closed form for either strategy, from the partition alone.
Rational closed_form_dof(const NetworkConfig &cfg, const DeliveryParams &params, const ServedPartition &partition);

// Sum over (r, c, m, s) of C(P-c-1, Q-2) for every non-skipped Strategy B quintuple family.
std::uint64_t strategy_b_transmission_count(const NetworkConfig &cfg, const DeliveryParams &params,
                                            const ServedPartition &partition);

struct Evaluation {
    Schedule schedule;
    VerificationReport verification;
    DofReport dof;
};

// schedule -> verify -> empirical DoF, with the closed form attached.
Evaluation evaluate(const NetworkConfig &cfg, const DeliveryParams &params, const Demands &demands);

// Population standard deviation of the profile lengths.
double sigma(const std::vector<int> &eta);
// P^2 * sigma^2, an integer.
std::int64_t scaled_sigma_squared(const std::vector<int> &eta);

struct SweepRow {
    DeliveryParams params;
    bool feasible = false;
    std::optional<Rational> dof;
    int K_M = 0;
    int K_U = 0;
    std::uint64_t T_M = 0;
    std::uint64_t T_U = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<std::size_t> best;

    std::optional<Rational> dof_max() const;
};

// Candidate (Q, beta, strategy) rows for one eta_hat: alpha <= eta_hat gives
// the single (beta = alpha, Q = tbar+1) row; otherwise Strategy A for
// Q in [tbar+1 .. tbar+floor(alpha/eta_hat)] plus the Strategy B row when
// alpha/eta_hat is fractional. Rows may still fail validation (Q > P).
std::vector<DeliveryParams> candidate_rows(const NetworkConfig &cfg, int eta_hat);

// Every eta_hat in [1..max eta] and every candidate row, evaluated through the
// full pipeline. Throws std::logic_error if a schedule fails verification or
// its DoF disagrees with the closed form.
// ClosedForm skips schedule construction and leaves T_M and T_U at zero.
enum class SweepMode { Pipeline, ClosedForm };

SweepResult dof_sweep(const NetworkConfig &cfg, const Demands &demands, SweepMode mode = SweepMode::Pipeline);

// Optimum for a uniform association with eta_hat users per profile.
Rational uniform_optimum(const NetworkConfig &cfg, int eta_hat);

Rational dof_loss_uniform(int alpha, int eta_hat, int eta_avg);

enum class Mode { CodedCaching, Unicast };

Mode choose_mode(const Rational &eta_avg, int tbar, int alpha);

}  // namespace ccsched
