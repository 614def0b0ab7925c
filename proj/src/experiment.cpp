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

#include "ccsched/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "ccsched/analysis.hpp"

namespace ccsched {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

unsigned worker_count() {
    if (const char *env = std::getenv("CC_SCHED_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception &) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int sigma_bin(const std::vector<int> &eta) {
    const std::int64_t P = static_cast<std::int64_t>(eta.size());
    const std::int64_t scaled = scaled_sigma_squared(eta);  // P^2 sigma^2
    // sigma >= (2k-1)/4  <=>  16 * P^2 sigma^2 >= (2k-1)^2 P^2
    int k = 0;
    while (16 * scaled >= (2 * k + 1) * (2 * k + 1) * P * P) ++k;
    return k;
}

Rational max_dof_for_eta(const std::vector<int> &eta, int tbar, int alpha, int L, int N) {
    NetworkConfig cfg;
    cfg.P = static_cast<int>(eta.size());
    cfg.tbar = tbar;
    cfg.alpha = alpha;
    cfg.L = L;
    cfg.N = N;
    cfg.association = NetworkConfig::association_from_eta(eta);
    const auto best = dof_sweep(cfg, default_demands(cfg), SweepMode::ClosedForm).dof_max();
    if (!best) throw std::logic_error("no feasible delivery row");
    return *best;
}

namespace {

void compositions(int remaining, std::size_t slot, std::vector<int> &current, std::vector<std::vector<int>> &out) {
    if (slot + 1 == current.size()) {
        current[slot] = remaining;
        out.push_back(current);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        current[slot] = v;
        compositions(remaining - v, slot + 1, current, out);
    }
}

// K! / prod(eta_p!) as a product of binomials
double multinomial_weight(const std::vector<int> &eta) {
    double weight = 1.0;
    int placed = 0;
    for (int e : eta) {
        placed += e;
        weight *= static_cast<double>(binomial(placed, e));
    }
    return weight;
}

}  // namespace

SigmaExperimentResult sigma_experiment(const SigmaExperimentOptions &opt) {
    if (opt.P < 2 || opt.K < 1) throw std::invalid_argument("sigma experiment needs P >= 2 and K >= 1");
    if (!opt.exhaustive && opt.samples < 1) throw std::invalid_argument("samples must be positive");

    std::vector<std::vector<int>> draws;
    std::vector<double> weights;
    SigmaExperimentResult result;
    if (opt.exhaustive) {
        std::vector<int> current(static_cast<std::size_t>(opt.P), 0);
        compositions(opt.K, 0, current, draws);
        for (const auto &eta : draws) weights.push_back(multinomial_weight(eta));
        result.protocol = "exhaustive: every composition of K users into P profiles, weighted by its multinomial count";
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> pick(0, opt.P - 1);
        for (int i = 0; i < opt.samples; ++i) {
            std::vector<int> eta(static_cast<std::size_t>(opt.P), 0);
            for (int k = 0; k < opt.K; ++k) ++eta[static_cast<std::size_t>(pick(rng))];
            draws.push_back(std::move(eta));
            weights.push_back(1.0);
        }
        result.protocol = "sampled: each user joins a profile uniformly at random (mt19937_64, seed " +
                          std::to_string(opt.seed) + ", " + std::to_string(opt.samples) + " samples)";
    }

    // DoF depends on the profile lengths only through their multiset.
    std::map<std::vector<int>, std::size_t> index;
    std::vector<std::vector<int>> distinct;
    std::vector<std::size_t> draw_key;
    for (const auto &eta : draws) {
        auto key = eta;
        std::sort(key.begin(), key.end(), std::greater<>());
        auto [it, inserted] = index.emplace(key, distinct.size());
        if (inserted) distinct.push_back(key);
        draw_key.push_back(it->second);
    }
    std::vector<double> best(distinct.size(), 0.0);
    parallel_for(distinct.size(), opt.threads, [&](std::size_t i) {
        best[i] = max_dof_for_eta(distinct[i], opt.tbar, opt.alpha, opt.L, opt.N).to_double();
    });

    std::map<int, std::pair<double, double>> sums;  // bin -> (weighted dof, weight)
    std::map<int, std::size_t> counts;
    for (std::size_t i = 0; i < draws.size(); ++i) {
        const int bin = sigma_bin(draws[i]);
        sums[bin].first += weights[i] * best[draw_key[i]];
        sums[bin].second += weights[i];
        ++counts[bin];
    }
    for (const auto &[bin, acc] : sums) result.bins.push_back({bin, counts[bin], acc.first / acc.second});
    result.distinct_profiles = distinct.size();
    result.unicast_baseline = opt.alpha;
    if (opt.K % opt.P == 0) {
        NetworkConfig uniform;
        uniform.P = opt.P;
        uniform.tbar = opt.tbar;
        uniform.alpha = opt.alpha;
        uniform.L = opt.L;
        uniform.N = opt.N;
        uniform.association = NetworkConfig::association_from_eta(std::vector<int>(static_cast<std::size_t>(opt.P), opt.K / opt.P));
        result.uniform_optimum = uniform_optimum(uniform, opt.K / opt.P);
    }
    return result;
}

}  // namespace ccsched
