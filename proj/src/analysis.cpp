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

#include "ccsched/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ccsched {

DofReport empirical_dof(const Schedule &schedule) {
    DofReport out;
    out.params = schedule.params;
    for (const auto &tx : schedule.cc) out.J_M += tx.recipients().size();
    for (const auto &round : schedule.uc) out.J_U += round.codewords.size();
    out.T_M = schedule.cc.size();
    out.T_U = schedule.uc.size();
    if (out.T_M + out.T_U == 0) throw UndefinedDof("schedule has no transmissions");
    out.empirical = Rational(static_cast<Rational::Int>(out.J_M + out.J_U), static_cast<Rational::Int>(out.T_M + out.T_U));
    return out;
}

std::uint64_t strategy_b_transmission_count(const NetworkConfig &cfg, const DeliveryParams &params,
                                            const ServedPartition &partition) {
    const int P = partition.P();
    const int Q = params.Q;
    const int eta_hat = params.eta_hat;
    const int theta = params.theta(cfg.alpha);
    const std::uint64_t nu2 = params.nu2(cfg.tbar);
    const auto &delta = partition.delta;
    std::uint64_t total = 0;
    for (int r = 1; r <= P; ++r) {
        std::vector<int> rest;
        for (int p = 1; p <= P; ++p) {
            if (p != r) rest.push_back(p);
        }
        std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return delta[a - 1] > delta[b - 1]; });
        for (int c = 1; c <= P - Q + 1; ++c) {
            const bool pivot_empty = delta[rest[c - 1] - 1] == 0;
            for (int m = 1; m <= eta_hat; ++m) {
                // the window holds positions m..m+theta-1 (cyclic); real users sit at 1..delta_r
                bool window_empty = true;
                for (int i = 0; i < theta; ++i) {
                    if ((i + m - 1) % eta_hat + 1 <= delta[r - 1]) window_empty = false;
                }
                if (window_empty && pivot_empty) continue;
                total += nu2 * binomial(P - c - 1, Q - 2);
            }
        }
    }
    return total;
}

Rational closed_form_dof(const NetworkConfig &cfg, const DeliveryParams &params, const ServedPartition &partition) {
    validate(cfg, params);
    if (partition.eta_hat != params.eta_hat) throw std::invalid_argument("partition built for another eta_hat");
    using Int = Rational::Int;
    const int P = cfg.P;
    const int tbar = cfg.tbar;
    const int Q = params.Q;
    const Int K_M = partition.K_M;
    const Int K_U = partition.K_U;
    const Rational unicast_share = (Rational(1) - cfg.gamma()) * Rational(static_cast<Int>(binomial(P, tbar)));

    Rational served_total;
    Rational coded_transmissions;
    Rational per_user_split;
    if (params.strategy == Strategy::A) {
        const Int beta = params.beta;
        per_user_split = Rational(beta * static_cast<Int>(binomial(P - tbar - 1, Q - tbar - 1)));
        served_total = Rational(K_M * static_cast<Int>(binomial(P - 1, Q - 1)) * beta);
        Int tm = 0;
        for (int r = 1; r <= P - Q + 1; ++r) {
            const int d = partition.delta[r - 1];
            const Int weight = d == 0 ? 0 : std::max(params.beta, d);
            tm += weight * static_cast<Int>(binomial(P - r, Q - 1));
        }
        coded_transmissions = Rational(tm);
    } else {
        const Int rate = static_cast<Int>(params.eta_hat) * tbar + cfg.alpha;
        const Int nu1 = static_cast<Int>(params.nu1(tbar));
        const Int nu2 = static_cast<Int>(params.nu2(tbar));
        per_user_split = Rational(rate * nu1 * static_cast<Int>(binomial(P - tbar - 1, Q - tbar - 1)));
        served_total = Rational(K_M * static_cast<Int>(binomial(P - 1, Q - 1)) * rate * nu2);
        coded_transmissions = Rational(static_cast<Int>(strategy_b_transmission_count(cfg, params, partition)));
    }
    if (K_U == 0) {
        if (coded_transmissions == Rational(0)) throw UndefinedDof("no transmissions");
        return served_total / coded_transmissions;
    }
    const Rational unicast_load = Rational(K_U) * unicast_share * per_user_split;
    const Int unicast_rounds = ceil(unicast_load / Rational(std::min<Int>(K_U, cfg.alpha)));
    return (served_total + unicast_load) / (coded_transmissions + Rational(unicast_rounds));
}

Evaluation evaluate(const NetworkConfig &cfg, const DeliveryParams &params, const Demands &demands) {
    Evaluation out;
    out.schedule = build_schedule(cfg, params, demands);
    out.verification = verify_schedule(out.schedule, cfg, demands);
    out.dof = empirical_dof(out.schedule);
    out.dof.closed_form = closed_form_dof(cfg, params, select_served(cfg, params.eta_hat));
    return out;
}

std::int64_t scaled_sigma_squared(const std::vector<int> &eta) {
    const std::int64_t P = static_cast<std::int64_t>(eta.size());
    if (P == 0) throw std::invalid_argument("sigma of an empty profile list");
    std::int64_t sum = 0;
    std::int64_t squares = 0;
    for (int e : eta) {
        sum += e;
        squares += static_cast<std::int64_t>(e) * e;
    }
    return P * squares - sum * sum;
}

double sigma(const std::vector<int> &eta) {
    return std::sqrt(static_cast<double>(scaled_sigma_squared(eta))) / static_cast<double>(eta.size());
}

std::optional<Rational> SweepResult::dof_max() const {
    if (!best) return std::nullopt;
    return rows[*best].dof;
}

std::vector<DeliveryParams> candidate_rows(const NetworkConfig &cfg, int eta_hat) {
    const int alpha = cfg.alpha;
    const int tbar = cfg.tbar;
    std::vector<DeliveryParams> out;
    if (alpha <= eta_hat) {
        out.push_back({eta_hat, tbar + 1, alpha, Strategy::A});
        return out;
    }
    for (int Q = tbar + 1; Q <= tbar + alpha / eta_hat; ++Q) out.push_back({eta_hat, Q, eta_hat, Strategy::A});
    if (alpha % eta_hat != 0) out.push_back({eta_hat, tbar + (alpha + eta_hat - 1) / eta_hat, eta_hat, Strategy::B});
    return out;
}

namespace {

bool better(const SweepRow &candidate, const SweepRow &incumbent) {
    if (*candidate.dof != *incumbent.dof) return *candidate.dof > *incumbent.dof;
    if (candidate.params.Q != incumbent.params.Q) return candidate.params.Q < incumbent.params.Q;
    return candidate.params.eta_hat < incumbent.params.eta_hat;
}

}  // namespace

SweepResult dof_sweep(const NetworkConfig &cfg, const Demands &demands, SweepMode mode) {
    validate_config(cfg);
    SweepResult out;
    for (int eta_hat = 1; eta_hat <= cfg.max_eta(); ++eta_hat) {
        const auto partition = select_served(cfg, eta_hat);
        for (const auto &params : candidate_rows(cfg, eta_hat)) {
            SweepRow row;
            row.params = params;
            row.K_M = partition.K_M;
            row.K_U = partition.K_U;
            try {
                validate(cfg, params);
                row.feasible = true;
            } catch (const ValidationError &) {
                row.feasible = false;
            }
            if (row.feasible && mode == SweepMode::ClosedForm) {
                row.dof = closed_form_dof(cfg, params, partition);
                if (!out.best || better(row, out.rows[*out.best])) out.best = out.rows.size();
            } else if (row.feasible) {
                const auto eval = evaluate(cfg, params, demands);
                if (!eval.verification.pass) {
                    throw std::logic_error("schedule for eta_hat=" + std::to_string(eta_hat) + ", Q=" +
                                           std::to_string(params.Q) + " failed verification:\n" +
                                           eval.verification.summary());
                }
                if (eval.dof.empirical != *eval.dof.closed_form) {
                    throw std::logic_error("empirical DoF " + eval.dof.empirical.to_string() +
                                           " differs from closed form " + eval.dof.closed_form->to_string());
                }
                row.dof = eval.dof.empirical;
                row.T_M = eval.dof.T_M;
                row.T_U = eval.dof.T_U;
                if (!out.best || better(row, out.rows[*out.best])) out.best = out.rows.size();
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

Rational uniform_optimum(const NetworkConfig &cfg, int eta_hat) {
    for (int e : cfg.eta()) {
        if (e != eta_hat) throw std::invalid_argument("uniform_optimum needs every profile to hold eta_hat users");
    }
    if (cfg.alpha <= eta_hat) return Rational(cfg.alpha) * (Rational(cfg.P) * cfg.gamma() + Rational(1));
    return Rational(cfg.K()) * cfg.gamma() + Rational(cfg.alpha);
}

Rational dof_loss_uniform(int alpha, int eta_hat, int eta_avg) {
    if (eta_hat < 1 || eta_avg < 1) throw std::invalid_argument("eta_hat and eta_avg must be positive");
    if (alpha % eta_hat != 0 || alpha % eta_avg != 0) {
        throw std::invalid_argument("alpha must be divisible by eta_hat and eta_avg");
    }
    return Rational(alpha) * (Rational(1) - Rational(eta_avg, eta_hat));
}

Mode choose_mode(const Rational &eta_avg, int tbar, int alpha) {
    return eta_avg * Rational(tbar + 1) >= Rational(alpha) ? Mode::CodedCaching : Mode::Unicast;
}

}  // namespace ccsched
