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

namespace fdrelay::sinr
{

struct SinrBreakdown
{
    double first_hop = 0.0;  // relay decoding SINR
    double second_hop = 0.0; // destination SNR
    double e2e = 0.0;        // min(first_hop, second_hop)
    double li_power = 0.0;   // κP_S‖h_sr‖²|w_r H_rr w_t|²
};

// End-to-end SINR of the FD relay
//   γ = min( P_S|w_r h_sr|² / (κP_S‖h_sr‖²|w_r H_rr w_t|² + d1^τ),
//            κP_S/(d1^τ d2^τ) ‖h_sr‖² |h_rd w_t|² ).
// Throws DimensionError if the pair does not match the realization.
SinrBreakdown e2e_sinr(const ChannelRealization &ch, const SystemParams &params,
                       const precoding::BeamformingPair &pair);

// Half-duplex SNR ‖h_sr‖² min(c1, 2 c3 ‖h_rd‖²), c1 = P_S/d1^τ,
// c3 = κP_S/(d1^τ d2^τ).
double hd_snr(const ChannelRealization &ch, const SystemParams &params);

// SINR of `scheme` on one realization (HD uses hd_snr).
double scheme_sinr(Scheme scheme, const ChannelRealization &ch, const SystemParams &params,
                   const precoding::OptimalSearchSpec &spec = {});

} // namespace fdrelay::sinr
