// SPDX-License-Identifier: Apache-2.0
//
// fdrelay - link-level simulator for wirelessly powered full-duplex MIMO relays
// Copyright (C) 2026 The fdrelay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#pragma once

#include "fdrelay/channel.hpp"
#include "fdrelay/precoding.hpp"
#include "fdrelay/scheme.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace fdrelay::simkit
{

// How γ_th follows the time split when α is optimized.
enum class ThresholdMode
{
    Fixed,       // params.gamma_th as given
    RateCoupled, // FD: 2^{R_c/(1-α)} - 1, HD: 2^{2R_c/(1-α)} - 1
};

// Threshold applied to `scheme` under `mode` at params.alpha.
double threshold_for(const SystemParams &params, Scheme scheme, ThresholdMode mode);

struct OutageEstimate
{
    double p_hat = 0.0;
    double std_err = 0.0; // sqrt(p_hat (1 - p_hat) / n_trials)
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
};

struct RunOptions
{
    int threads = 1; // 0 selects std::thread::hardware_concurrency()
    precoding::OptimalSearchSpec search{};
};

// Fraction of trials whose SINR falls below params.gamma_th. Trial n always
// sees the channel drawn from (seed, n), and per-block counts are summed in a
// fixed order, so the estimate does not depend on the thread count.
// Throws InfeasibleSchemeError for unusable (scheme, antennas) pairs.
OutageEstimate estimate_outage(const SystemParams &params, Scheme scheme, std::uint64_t n_trials,
                               std::uint64_t seed, const RunOptions &opts = {});

// One (parameters, scheme) pair evaluated on shared channel draws.
struct OutageJob
{
    SystemParams params;
    Scheme scheme = Scheme::MrcMrt;
};

// Estimates for several jobs from a single set of draws. All jobs must share
// m_r, m_t and sigma2_li (the only parameters the draws depend on); job k's
// result equals estimate_outage(jobs[k].params, jobs[k].scheme, ...).
// Throws DimensionError otherwise.
std::vector<OutageEstimate> estimate_outage_batch(const std::vector<OutageJob> &jobs, std::uint64_t n_trials,
                                                  std::uint64_t seed, const RunOptions &opts = {});

// θ(1 - outage) R_c (1 - α), θ = 1 for FD and 0.5 for HD.
double throughput(const SystemParams &params, Scheme scheme, double outage);

struct ThroughputPoint
{
    double alpha = 0.0;
    double outage = 0.0;
    double throughput = 0.0;
    Scheme scheme = Scheme::MrcMrt;
    double gamma_th = 0.0; // threshold in force at this α
    double std_err = 0.0;  // of the outage estimate, 0 for injected oracles
};

// Outage as a function of the (α-adjusted) parameters.
using OutageOracle = std::function<OutageEstimate(const SystemParams &)>;

struct AlphaSearch
{
    int grid = 33;         // open uniform grid α_i = i/(grid+1), i = 1..grid
    int refine_iters = 20; // golden-section iterations around the best cell
    ThresholdMode mode = ThresholdMode::Fixed;

    // Throws DomainError unless grid >= 8 and refine_iters >= 0.
    void validate() const;
};

// Throughput at one α.
ThroughputPoint evaluate_alpha(const SystemParams &params, Scheme scheme, double alpha, const OutageOracle &oracle,
                               ThresholdMode mode);

// α* = argmax R(α): grid scan then golden-section refinement. Ties go to the
// smaller α.
// When `grid_points` is given it receives the grid evaluations in α order.
ThroughputPoint optimize_alpha(const SystemParams &params, Scheme scheme, const OutageOracle &oracle,
                               const AlphaSearch &search = {}, std::vector<ThroughputPoint> *grid_points = nullptr);

// Monte Carlo form: every α reuses the same seed, so the curve is smooth in α.
ThroughputPoint optimize_alpha(const SystemParams &params, Scheme scheme, std::uint64_t n_trials, int grid,
                               std::uint64_t seed, const RunOptions &opts = {},
                               ThresholdMode mode = ThresholdMode::Fixed, int refine_iters = 20);

// Oracle backed by estimate_outage.
OutageOracle monte_carlo_oracle(Scheme scheme, std::uint64_t n_trials, std::uint64_t seed, RunOptions opts = {});

} // namespace fdrelay::simkit
