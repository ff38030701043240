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


#include "fdrelay/sinr.hpp"

#include "fdrelay/error.hpp"

#include <algorithm>

namespace fdrelay::sinr
{

SinrBreakdown e2e_sinr(const ChannelRealization &ch, const SystemParams &params,
                       const precoding::BeamformingPair &pair)
{
    if (pair.w_r.size() != ch.h_sr.size() || pair.w_t.size() != ch.h_rd.size() || ch.h_rr.rows() != ch.h_sr.size() ||
        ch.h_rr.cols() != ch.h_rd.size())
        throw DimensionError("e2e_sinr: beamforming pair does not match the channel dimensions");

    const double pl1 = params.path_loss1();
    const double kappa = params.kappa();
    const double n_sr = ch.h_sr.squaredNorm();

    SinrBreakdown out;
    const double signal = std::norm((pair.w_r * ch.h_sr).value());
    const double leak = std::norm((pair.w_r * ch.h_rr * pair.w_t).value());
    out.li_power = kappa * params.p_s * n_sr * leak;
    out.first_hop = params.p_s * signal / (out.li_power + pl1);
    out.second_hop = kappa * params.p_s / (pl1 * params.path_loss2()) * n_sr * std::norm((ch.h_rd * pair.w_t).value());
    out.e2e = std::min(out.first_hop, out.second_hop);
    return out;
}

double hd_snr(const ChannelRealization &ch, const SystemParams &params)
{
    const double c1 = params.p_s / params.path_loss1();
    const double c3 = params.kappa() * params.p_s / (params.path_loss1() * params.path_loss2());
    return ch.h_sr.squaredNorm() * std::min(c1, 2.0 * c3 * ch.h_rd.squaredNorm());
}

double scheme_sinr(Scheme scheme, const ChannelRealization &ch, const SystemParams &params,
                   const precoding::OptimalSearchSpec &spec)
{
    if (scheme == Scheme::HalfDuplex)
        return hd_snr(ch, params);
    return e2e_sinr(ch, params, precoding::compute_pair(scheme, ch, params, spec)).e2e;
}

} // namespace fdrelay::sinr
