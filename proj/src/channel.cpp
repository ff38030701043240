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

#include "fdrelay/channel.hpp"

#include "fdrelay/error.hpp"

#include <cmath>
#include <string>

namespace fdrelay
{

namespace
{

void require(bool ok, const std::string &what)
{
    if (!ok)
        throw DomainError("SystemParams: " + what);
}

cplx draw_cn(RandomStream &rng, double std_per_dim)
{
    const double re = rng.normal();
    const double im = rng.normal();
    return {std_per_dim * re, std_per_dim * im};
}

} // namespace

void SystemParams::validate() const
{
    require(m_r >= 1, "m_r must be >= 1");
    require(m_t >= 1, "m_t must be >= 1");
    require(std::isfinite(p_s) && p_s > 0.0, "p_s must be > 0");
    require(std::isfinite(d1) && d1 > 0.0, "d1 must be > 0");
    require(std::isfinite(d2) && d2 > 0.0, "d2 must be > 0");
    require(std::isfinite(tau) && tau >= 2.0, "tau must be >= 2");
    require(eta > 0.0 && eta <= 1.0, "eta must be in (0, 1]");
    require(alpha > 0.0 && alpha < 1.0, "alpha must be in (0, 1)");
    require(std::isfinite(sigma2_li) && sigma2_li >= 0.0, "sigma2_li must be >= 0");
    require(std::isfinite(gamma_th) && gamma_th > 0.0, "gamma_th must be > 0");
    require(std::isfinite(r_c) && r_c > 0.0, "r_c must be > 0");
}

double SystemParams::path_loss1() const
{
    return std::pow(d1, tau);
}

double SystemParams::path_loss2() const
{
    return std::pow(d2, tau);
}

void ChannelRealization::validate() const
{
    if (h_rr.rows() != h_sr.size() || h_rr.cols() != h_rd.size() || h_sr.size() < 1 || h_rd.size() < 1)
        throw DimensionError("ChannelRealization: h_rr must be M_R x M_T");
    if (!h_sr.allFinite() || !h_rd.allFinite() || !h_rr.allFinite())
        throw DimensionError("ChannelRealization: non-finite entry");
}

ChannelRealization sample_channel(const SystemParams &params, RandomStream &rng)
{
    const double unit = std::sqrt(0.5);
    const double li = std::sqrt(0.5 * params.sigma2_li);

    ChannelRealization ch;
    ch.h_sr.resize(params.m_r);
    ch.h_rd.resize(params.m_t);
    ch.h_rr.resize(params.m_r, params.m_t);
    for (int i = 0; i < params.m_r; ++i)
        ch.h_sr(i) = draw_cn(rng, unit);
    for (int j = 0; j < params.m_t; ++j)
        ch.h_rd(j) = draw_cn(rng, unit);
    for (int i = 0; i < params.m_r; ++i)
        for (int j = 0; j < params.m_t; ++j)
            ch.h_rr(i, j) = draw_cn(rng, li);
    return ch;
}

ChannelRealization sample_channel(const SystemParams &params, std::uint64_t seed, std::uint64_t trial)
{
    RandomStream rng(seed, trial);
    return sample_channel(params, rng);
}

double relay_power(const SystemParams &params, const ChannelRealization &ch)
{
    return params.kappa() * params.p_s * ch.h_sr.squaredNorm() / params.path_loss1();
}

} // namespace fdrelay
