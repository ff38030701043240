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
#include "fdrelay/scheme.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fdrelay::kernels
{

enum class Isa
{
    Scalar,
    Avx2,
};

std::string_view to_string(Isa isa);

// True when the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa);

// ISA used by batch_sinr without an explicit Isa argument: the override if
// set, else FDRELAY_ISA=scalar|avx2 from the environment, else the best
// available variant.
Isa active_isa();

// Forces an ISA for the process (nullopt restores automatic selection).
// Throws DomainError if the ISA is unavailable.
void set_isa_override(std::optional<Isa> isa);

// Structure-of-arrays batch of channel realizations. Entry k of trial n sits
// at index k*count + n; H_rr entry (i, j) is k = i*m_t + j.
struct ChannelBatch
{
    int m_r = 1;
    int m_t = 1;
    std::size_t count = 0;
    std::vector<double> sr_re, sr_im; // m_r * count
    std::vector<double> rd_re, rd_im; // m_t * count
    std::vector<double> rr_re, rr_im; // m_r * m_t * count

    void resize(int m_r, int m_t, std::size_t count);
    void set(std::size_t n, const ChannelRealization &ch);
    ChannelRealization get(std::size_t n) const;
};

// Model constants the kernels need; everything else is per trial.
struct SinrCoefficients
{
    double p_s = 1.0;
    double kappa = 1.0;
    double path_loss1 = 1.0;
    double path_loss2 = 1.0;

    static SinrCoefficients from(const SystemParams &params);
};

// End-to-end SINR of every trial in `batch` under a closed-form scheme
// (TZF, RZF, MrcMrt, HalfDuplex). Throws InfeasibleSchemeError for the
// optimal scheme or antenna counts the scheme cannot serve, DimensionError
// if out.size() != batch.count, DomainError if `isa` is unavailable.
void batch_sinr(Isa isa, Scheme scheme, const ChannelBatch &batch, const SinrCoefficients &coeffs,
                std::span<double> out);

inline void batch_sinr(Scheme scheme, const ChannelBatch &batch, const SinrCoefficients &coeffs,
                       std::span<double> out)
{
    batch_sinr(active_isa(), scheme, batch, coeffs, out);
}

} // namespace fdrelay::kernels
