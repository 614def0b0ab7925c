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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccsched/core.hpp"
#include "ccsched/rational.hpp"

namespace ccsched {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must be
// written to per-index slots so the output does not depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn);

// Worker count from CC_SCHED_THREADS, else hardware concurrency (at least 1).
unsigned worker_count();

struct SigmaExperimentOptions {
    int P = 6;
    int tbar = 1;
    int alpha = 7;
    int L = 7;
    int N = 30;
    int K = 30;
    int samples = 2000;
    std::uint64_t seed = 1;
    // Enumerate every composition of K into P profile lengths, weighted by the
    // number of user-level associations realizing it, instead of sampling.
    bool exhaustive = false;
    unsigned threads = 1;
};

struct SigmaBin {
    int half_steps = 0;  // bin center = half_steps / 2
    std::size_t n_samples = 0;
    double dof_m = 0.0;

    double center() const { return half_steps / 2.0; }
};

struct SigmaExperimentResult {
    std::vector<SigmaBin> bins;  // ascending sigma
    int unicast_baseline = 0;
    std::optional<Rational> uniform_optimum;
    std::size_t distinct_profiles = 0;
    std::string protocol;
};

// Index of the 0.5-wide sigma bin (nearest multiple of 0.5, ties upward),
// computed exactly from the profile lengths.
int sigma_bin(const std::vector<int> &eta);

// Best sweep DoF for a profile-length vector, users numbered per profile.
Rational max_dof_for_eta(const std::vector<int> &eta, int tbar, int alpha, int L, int N);

SigmaExperimentResult sigma_experiment(const SigmaExperimentOptions &options);

}  // namespace ccsched
