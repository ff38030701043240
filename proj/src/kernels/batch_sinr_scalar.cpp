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

#include <algorithm>
#include <complex>
#include <vector>

namespace fdrelay::kernels::detail
{

namespace
{

constexpr double kDegenerate2 = 1e-28; // kDegenerateNorm squared

} // namespace

void batch_sinr_scalar(Scheme scheme, const ChannelBatch &batch, const SinrCoefficients &coeffs, double *out,
                       std::size_t begin, std::size_t end)
{
    const int m_r = batch.m_r, m_t = batch.m_t;
    const std::size_t count = batch.count;
    const double p_s = coeffs.p_s;
    const double li_scale = coeffs.kappa * coeffs.p_s;
    const double c3 = coeffs.kappa * coeffs.p_s / (coeffs.path_loss1 * coeffs.path_loss2);

    std::vector<cplx> h(m_r), g(m_t), hh(static_cast<std::size_t>(m_r) * m_t), a(m_t), p(m_t), u(m_r), q(m_r);

    for (std::size_t n = begin; n < end; ++n)
    {
        double n_sr = 0.0, n_rd = 0.0;
        for (int i = 0; i < m_r; ++i)
        {
            h[i] = {batch.sr_re[i * count + n], batch.sr_im[i * count + n]};
            n_sr += std::norm(h[i]);
        }
        for (int j = 0; j < m_t; ++j)
        {
            g[j] = {batch.rd_re[j * count + n], batch.rd_im[j * count + n]};
            n_rd += std::norm(g[j]);
        }
        for (int k = 0; k < m_r * m_t; ++k)
            hh[k] = {batch.rr_re[k * count + n], batch.rr_im[k * count + n]};

        double signal = n_sr; // |w_r h_sr|²
        double leak = 0.0;    // |w_r H_rr w_t|²
        double tx_gain = n_rd; // |h_rd w_t|²

        switch (scheme)
        {
        case Scheme::HalfDuplex:
            out[n] = n_sr * std::min(p_s / coeffs.path_loss1, 2.0 * c3 * n_rd);
            continue;
        case Scheme::MrcMrt:
        {
            cplx s{};
            for (int i = 0; i < m_r; ++i)
                for (int j = 0; j < m_t; ++j)
                    s += std::conj(h[i]) * hh[i * m_t + j] * std::conj(g[j]);
            leak = std::norm(s) / (n_sr * n_rd);
            break;
        }
        case Scheme::TZF:
        {
            // w_t ∝ p = g† projected off a = H† h.
            double aa = 0.0;
            for (int j = 0; j < m_t; ++j)
            {
                cplx s{};
                for (int i = 0; i < m_r; ++i)
                    s += std::conj(hh[i * m_t + j]) * h[i];
                a[j] = s;
                aa += std::norm(s);
                p[j] = std::conj(g[j]);
            }
            if (aa >= kDegenerate2)
            {
                for (int pass = 0; pass < 2; ++pass)
                {
                    cplx ap{};
                    for (int j = 0; j < m_t; ++j)
                        ap += std::conj(a[j]) * p[j];
                    const cplx c = ap / aa;
                    for (int j = 0; j < m_t; ++j)
                        p[j] -= c * a[j];
                }
            }
            double pp = 0.0;
            cplx gp{}, ap{};
            for (int j = 0; j < m_t; ++j)
            {
                pp += std::norm(p[j]);
                gp += g[j] * p[j];
                ap += std::conj(a[j]) * p[j];
            }
            tx_gain = std::norm(gp) / pp;
            leak = std::norm(ap) / (n_sr * pp);
            break;
        }
        case Scheme::RZF:
        {
            // w_r ∝ q† with q = h projected off u = H g†.
            double uu = 0.0;
            for (int i = 0; i < m_r; ++i)
            {
                cplx s{};
                for (int j = 0; j < m_t; ++j)
                    s += hh[i * m_t + j] * std::conj(g[j]);
                u[i] = s;
                uu += std::norm(s);
                q[i] = h[i];
            }
            if (uu >= kDegenerate2)
            {
                for (int pass = 0; pass < 2; ++pass)
                {
                    cplx uq{};
                    for (int i = 0; i < m_r; ++i)
                        uq += std::conj(u[i]) * q[i];
                    const cplx c = uq / uu;
                    for (int i = 0; i < m_r; ++i)
                        q[i] -= c * u[i];
                }
            }
            double qq = 0.0;
            cplx qh{}, qu{};
            for (int i = 0; i < m_r; ++i)
            {
                qq += std::norm(q[i]);
                qh += std::conj(q[i]) * h[i];
                qu += std::conj(q[i]) * u[i];
            }
            signal = std::norm(qh) / qq;
            leak = std::norm(qu) / (qq * n_rd);
            break;
        }
        default:
            break;
        }

        const double first = p_s * signal / (li_scale * n_sr * leak + coeffs.path_loss1);
        const double second = c3 * n_sr * tx_gain;
        out[n] = std::min(first, second);
    }
}

} // namespace fdrelay::kernels::detail
