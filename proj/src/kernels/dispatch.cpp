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


#include "batch_sinr_impl.hpp"

#include "fdrelay/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace fdrelay::kernels
{

namespace
{

constexpr int kNoOverride = -1;
std::atomic<int> g_override{kNoOverride};

bool cpu_has_avx2()
{
#if defined(FDRELAY_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return has;
#else
    return false;
#endif
}

Isa environment_choice()
{
    const char *env = std::getenv("FDRELAY_ISA");
    if (env != nullptr)
    {
        const std::string name(env);
        if (name == "scalar")
            return Isa::Scalar;
        if (name == "avx2" && cpu_has_avx2())
            return Isa::Avx2;
    }
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

} // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

Isa active_isa()
{
    const int forced = g_override.load(std::memory_order_relaxed);
    if (forced != kNoOverride)
        return static_cast<Isa>(forced);
    static const Isa chosen = environment_choice();
    return chosen;
}

void set_isa_override(std::optional<Isa> isa)
{
    if (isa && !isa_available(*isa))
        throw DomainError("set_isa_override: ISA not available on this CPU/build");
    g_override.store(isa ? static_cast<int>(*isa) : kNoOverride, std::memory_order_relaxed);
}

void ChannelBatch::resize(int r, int t, std::size_t n)
{
    m_r = r;
    m_t = t;
    count = n;
    const std::size_t nr = static_cast<std::size_t>(r) * n, nt = static_cast<std::size_t>(t) * n;
    sr_re.assign(nr, 0.0);
    sr_im.assign(nr, 0.0);
    rd_re.assign(nt, 0.0);
    rd_im.assign(nt, 0.0);
    rr_re.assign(nr * t, 0.0);
    rr_im.assign(nr * t, 0.0);
}

void ChannelBatch::set(std::size_t n, const ChannelRealization &ch)
{
    if (ch.m_r() != m_r || ch.m_t() != m_t || n >= count)
        throw DimensionError("ChannelBatch::set: realization does not fit the batch");
    for (int i = 0; i < m_r; ++i)
    {
        sr_re[i * count + n] = ch.h_sr(i).real();
        sr_im[i * count + n] = ch.h_sr(i).imag();
    }
    for (int j = 0; j < m_t; ++j)
    {
        rd_re[j * count + n] = ch.h_rd(j).real();
        rd_im[j * count + n] = ch.h_rd(j).imag();
    }
    for (int i = 0; i < m_r; ++i)
        for (int j = 0; j < m_t; ++j)
        {
            const std::size_t k = static_cast<std::size_t>(i * m_t + j) * count + n;
            rr_re[k] = ch.h_rr(i, j).real();
            rr_im[k] = ch.h_rr(i, j).imag();
        }
}

ChannelRealization ChannelBatch::get(std::size_t n) const
{
    if (n >= count)
        throw DimensionError("ChannelBatch::get: index out of range");
    ChannelRealization ch;
    ch.h_sr.resize(m_r);
    ch.h_rd.resize(m_t);
    ch.h_rr.resize(m_r, m_t);
    for (int i = 0; i < m_r; ++i)
        ch.h_sr(i) = {sr_re[i * count + n], sr_im[i * count + n]};
    for (int j = 0; j < m_t; ++j)
        ch.h_rd(j) = {rd_re[j * count + n], rd_im[j * count + n]};
    for (int i = 0; i < m_r; ++i)
        for (int j = 0; j < m_t; ++j)
        {
            const std::size_t k = static_cast<std::size_t>(i * m_t + j) * count + n;
            ch.h_rr(i, j) = {rr_re[k], rr_im[k]};
        }
    return ch;
}

SinrCoefficients SinrCoefficients::from(const SystemParams &params)
{
    return {params.p_s, params.kappa(), params.path_loss1(), params.path_loss2()};
}

void batch_sinr(Isa isa, Scheme scheme, const ChannelBatch &batch, const SinrCoefficients &coeffs,
                std::span<double> out)
{
    if (scheme == Scheme::Optimal)
        throw InfeasibleSchemeError("batch_sinr: the optimal scheme has no closed-form kernel");
    if (!is_feasible(scheme, batch.m_r, batch.m_t))
        throw InfeasibleSchemeError("batch_sinr: scheme infeasible for the batch antenna counts");
    if (out.size() != batch.count)
        throw DimensionError("batch_sinr: output span size differs from batch count");
    if (!isa_available(isa))
        throw DomainError("batch_sinr: requested ISA not available");
#if defined(FDRELAY_BUILD_AVX2)
    if (isa == Isa::Avx2)
    {
        detail::batch_sinr_avx2(scheme, batch, coeffs, out.data());
        return;
    }
#endif
    detail::batch_sinr_scalar(scheme, batch, coeffs, out.data(), 0, batch.count);
}

} // namespace fdrelay::kernels
