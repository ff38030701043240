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


#include "fdrelay/simkit.hpp"

#include "fdrelay/error.hpp"
#include "fdrelay/kernels/batch_sinr.hpp"
#include "fdrelay/sinr.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace fdrelay::simkit
{

namespace
{

constexpr std::uint64_t kBlock = 2048;
constexpr double kGolden = 0.6180339887498948482;

struct Workspace
{
    kernels::ChannelBatch batch;
    std::vector<double> sinr;
};

// Outage counts of every job over trials [begin, end).
void count_block(const std::vector<OutageJob> &jobs, std::uint64_t seed, std::uint64_t begin, std::uint64_t end,
                 const RunOptions &opts, Workspace &ws, std::uint64_t *counts)
{
    const SystemParams &draw = jobs.front().params;
    const std::size_t len = end - begin;
    ws.batch.resize(draw.m_r, draw.m_t, len);
    ws.sinr.resize(len);
    for (std::uint64_t n = begin; n < end; ++n)
        ws.batch.set(n - begin, sample_channel(draw, seed, n));

    for (std::size_t k = 0; k < jobs.size(); ++k)
    {
        const OutageJob &job = jobs[k];
        if (job.scheme == Scheme::Optimal)
        {
            for (std::size_t n = 0; n < len; ++n)
                ws.sinr[n] = sinr::scheme_sinr(job.scheme, ws.batch.get(n), job.params, opts.search);
        }
        else
        {
            kernels::batch_sinr(job.scheme, ws.batch, kernels::SinrCoefficients::from(job.params), ws.sinr);
        }
        std::uint64_t outages = 0;
        for (double g : ws.sinr)
            if (g < job.params.gamma_th)
                ++outages;
        counts[k] = outages;
    }
}

} // namespace

double threshold_for(const SystemParams &params, Scheme scheme, ThresholdMode mode)
{
    if (mode == ThresholdMode::Fixed)
        return params.gamma_th;
    const double slots = is_full_duplex(scheme) ? 1.0 : 2.0;
    return std::exp2(slots * params.r_c / (1.0 - params.alpha)) - 1.0;
}

std::vector<OutageEstimate> estimate_outage_batch(const std::vector<OutageJob> &jobs, std::uint64_t n_trials,
                                                  std::uint64_t seed, const RunOptions &opts)
{
    opts.search.validate();
    if (jobs.empty())
        return {};
    if (n_trials < 1)
        throw DomainError("estimate_outage: n_trials must be >= 1");
    const SystemParams &draw = jobs.front().params;
    for (const OutageJob &job : jobs)
    {
        job.params.validate();
        if (job.params.m_r != draw.m_r || job.params.m_t != draw.m_t || job.params.sigma2_li != draw.sigma2_li)
            throw DimensionError("estimate_outage_batch: jobs must share m_r, m_t and sigma2_li");
        if (!is_feasible(job.scheme, job.params.m_r, job.params.m_t))
            throw InfeasibleSchemeError("estimate_outage: scheme infeasible for these antenna counts");
    }

    const std::size_t n_jobs = jobs.size();
    const std::uint64_t n_blocks = (n_trials + kBlock - 1) / kBlock;
    std::vector<std::uint64_t> counts(n_blocks * n_jobs, 0);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        Workspace ws;
        for (std::uint64_t b = next++; b < n_blocks; b = next++)
        {
            const std::uint64_t begin = b * kBlock, end = std::min(n_trials, begin + kBlock);
            count_block(jobs, seed, begin, end, opts, ws, counts.data() + b * n_jobs);
        }
    };

    unsigned threads = opts.threads > 0 ? static_cast<unsigned>(opts.threads) : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(std::min<std::uint64_t>(n_blocks, 256)));
    if (threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back([&] {
                try
                {
                    worker();
                }
                catch (...)
                {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                    next = n_blocks;
                }
            });
        for (auto &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    std::vector<OutageEstimate> out(n_jobs);
    for (std::size_t k = 0; k < n_jobs; ++k)
    {
        std::uint64_t total = 0;
        for (std::uint64_t b = 0; b < n_blocks; ++b)
            total += counts[b * n_jobs + k];
        OutageEstimate &est = out[k];
        est.n_trials = n_trials;
        est.seed = seed;
        est.p_hat = static_cast<double>(total) / static_cast<double>(n_trials);
        est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n_trials));
    }
    return out;
}

OutageEstimate estimate_outage(const SystemParams &params, Scheme scheme, std::uint64_t n_trials,
                               std::uint64_t seed, const RunOptions &opts)
{
    return estimate_outage_batch({OutageJob{params, scheme}}, n_trials, seed, opts).front();
}

double throughput(const SystemParams &params, Scheme scheme, double outage)
{
    if (!(outage >= 0.0 && outage <= 1.0))
        throw DomainError("throughput: outage must lie in [0, 1]");
    const double theta = is_full_duplex(scheme) ? 1.0 : 0.5;
    return theta * (1.0 - outage) * params.r_c * (1.0 - params.alpha);
}

void AlphaSearch::validate() const
{
    if (grid < 8 || refine_iters < 0)
        throw DomainError("AlphaSearch: grid >= 8 and refine_iters >= 0 required");
}

ThroughputPoint evaluate_alpha(const SystemParams &params, Scheme scheme, double alpha, const OutageOracle &oracle,
                               ThresholdMode mode)
{
    SystemParams p = params;
    p.alpha = alpha;
    p.gamma_th = threshold_for(p, scheme, mode);
    const OutageEstimate est = oracle(p);
    ThroughputPoint pt;
    pt.alpha = alpha;
    pt.outage = est.p_hat;
    pt.std_err = est.std_err;
    pt.throughput = throughput(p, scheme, est.p_hat);
    pt.scheme = scheme;
    pt.gamma_th = p.gamma_th;
    return pt;
}

ThroughputPoint optimize_alpha(const SystemParams &params, Scheme scheme, const OutageOracle &oracle,
                               const AlphaSearch &search, std::vector<ThroughputPoint> *grid_points)
{
    search.validate();
    const int n = search.grid;
    const double step = 1.0 / (n + 1);

    auto better = [](const ThroughputPoint &a, const ThroughputPoint &b) {
        return a.throughput > b.throughput || (a.throughput == b.throughput && a.alpha < b.alpha);
    };

    ThroughputPoint best;
    int best_i = 0;
    for (int i = 1; i <= n; ++i)
    {
        ThroughputPoint pt = evaluate_alpha(params, scheme, i * step, oracle, search.mode);
        if (grid_points != nullptr)
            grid_points->push_back(pt);
        if (i == 1 || better(pt, best))
        {
            best = pt;
            best_i = i;
        }
    }

    double lo = (best_i - 1) * step, hi = (best_i + 1) * step;
    if (search.refine_iters > 0)
    {
        double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
        ThroughputPoint p1 = evaluate_alpha(params, scheme, x1, oracle, search.mode);
        ThroughputPoint p2 = evaluate_alpha(params, scheme, x2, oracle, search.mode);
        for (int it = 0; it < search.refine_iters; ++it)
        {
            if (better(p1, best))
                best = p1;
            if (better(p2, best))
                best = p2;
            if (p1.throughput >= p2.throughput)
            {
                hi = x2;
                x2 = x1;
                p2 = p1;
                x1 = hi - kGolden * (hi - lo);
                p1 = evaluate_alpha(params, scheme, x1, oracle, search.mode);
            }
            else
            {
                lo = x1;
                x1 = x2;
                p1 = p2;
                x2 = lo + kGolden * (hi - lo);
                p2 = evaluate_alpha(params, scheme, x2, oracle, search.mode);
            }
        }
        if (better(p1, best))
            best = p1;
        if (better(p2, best))
            best = p2;
    }
    return best;
}

OutageOracle monte_carlo_oracle(Scheme scheme, std::uint64_t n_trials, std::uint64_t seed, RunOptions opts)
{
    return [=](const SystemParams &p) { return estimate_outage(p, scheme, n_trials, seed, opts); };
}

ThroughputPoint optimize_alpha(const SystemParams &params, Scheme scheme, std::uint64_t n_trials, int grid,
                               std::uint64_t seed, const RunOptions &opts, ThresholdMode mode, int refine_iters)
{
    AlphaSearch search;
    search.grid = grid;
    search.refine_iters = refine_iters;
    search.mode = mode;
    return optimize_alpha(params, scheme, monte_carlo_oracle(scheme, n_trials, seed, opts), search);
}

} // namespace fdrelay::simkit
