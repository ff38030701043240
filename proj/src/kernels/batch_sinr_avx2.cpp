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


// Four trials per __m256d lane; the tail of the batch goes through the
// scalar kernel. Compiled with -mavx2 -mfma and only entered after a runtime
// CPU check.

#include "batch_sinr_impl.hpp"

#include <immintrin.h>

#include <vector>

namespace fdrelay::kernels::detail
{

namespace
{

struct C4
{
    __m256d re, im;
};

inline C4 load(const std::vector<double> &re, const std::vector<double> &im, std::size_t idx)
{
    return {_mm256_loadu_pd(re.data() + idx), _mm256_loadu_pd(im.data() + idx)};
}

inline C4 zero() { return {_mm256_setzero_pd(), _mm256_setzero_pd()}; }

inline C4 conj(C4 a) { return {a.re, _mm256_sub_pd(_mm256_setzero_pd(), a.im)}; }

// acc + a*b
inline C4 fma_mul(C4 acc, C4 a, C4 b)
{
    acc.re = _mm256_fmadd_pd(a.re, b.re, acc.re);
    acc.re = _mm256_fnmadd_pd(a.im, b.im, acc.re);
    acc.im = _mm256_fmadd_pd(a.re, b.im, acc.im);
    acc.im = _mm256_fmadd_pd(a.im, b.re, acc.im);
    return acc;
}

// acc + conj(a)*b
inline C4 fma_cmul(C4 acc, C4 a, C4 b)
{
    acc.re = _mm256_fmadd_pd(a.re, b.re, acc.re);
    acc.re = _mm256_fmadd_pd(a.im, b.im, acc.re);
    acc.im = _mm256_fmadd_pd(a.re, b.im, acc.im);
    acc.im = _mm256_fnmadd_pd(a.im, b.re, acc.im);
    return acc;
}

inline __m256d norm2(C4 a) { return _mm256_fmadd_pd(a.re, a.re, _mm256_mul_pd(a.im, a.im)); }

// v -= c*a for complex c
inline C4 sub_scaled(C4 v, C4 c, C4 a)
{
    v.re = _mm256_fnmadd_pd(c.re, a.re, v.re);
    v.re = _mm256_fmadd_pd(c.im, a.im, v.re);
    v.im = _mm256_fnmadd_pd(c.re, a.im, v.im);
    v.im = _mm256_fnmadd_pd(c.im, a.re, v.im);
    return v;
}

// Removes the component of v along a in place (two passes); lanes whose
// |a|² is below the degenerate threshold keep v unchanged.
void project_out(std::vector<C4> &v, const std::vector<C4> &a, __m256d aa)
{
    const __m256d keep = _mm256_cmp_pd(aa, _mm256_set1_pd(1e-28), _CMP_GE_OQ);
    const __m256d inv = _mm256_and_pd(keep, _mm256_div_pd(_mm256_set1_pd(1.0), aa));
    for (int pass = 0; pass < 2; ++pass)
    {
        C4 dot = zero();
        for (std::size_t k = 0; k < v.size(); ++k)
            dot = fma_cmul(dot, a[k], v[k]);
        const C4 c{_mm256_mul_pd(dot.re, inv), _mm256_mul_pd(dot.im, inv)};
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = sub_scaled(v[k], c, a[k]);
    }
}

} // namespace

void batch_sinr_avx2(Scheme scheme, const ChannelBatch &batch, const SinrCoefficients &coeffs, double *out)
{
    const int m_r = batch.m_r, m_t = batch.m_t;
    const std::size_t count = batch.count;
    const std::size_t vec_end = count - count % 4;

    const __m256d p_s = _mm256_set1_pd(coeffs.p_s);
    const __m256d li_scale = _mm256_set1_pd(coeffs.kappa * coeffs.p_s);
    const __m256d pl1 = _mm256_set1_pd(coeffs.path_loss1);
    const __m256d c3 = _mm256_set1_pd(coeffs.kappa * coeffs.p_s / (coeffs.path_loss1 * coeffs.path_loss2));
    const __m256d c1 = _mm256_set1_pd(coeffs.p_s / coeffs.path_loss1);
    const __m256d two = _mm256_set1_pd(2.0);

    std::vector<C4> h(m_r), g(m_t), hh(static_cast<std::size_t>(m_r) * m_t), a(m_t), p(m_t), u(m_r), q(m_r);

    for (std::size_t n = 0; n < vec_end; n += 4)
    {
        __m256d n_sr = _mm256_setzero_pd(), n_rd = _mm256_setzero_pd();
        for (int i = 0; i < m_r; ++i)
        {
            h[i] = load(batch.sr_re, batch.sr_im, i * count + n);
            n_sr = _mm256_add_pd(n_sr, norm2(h[i]));
        }
        for (int j = 0; j < m_t; ++j)
        {
            g[j] = load(batch.rd_re, batch.rd_im, j * count + n);
            n_rd = _mm256_add_pd(n_rd, norm2(g[j]));
        }

        if (scheme == Scheme::HalfDuplex)
        {
            const __m256d hop2 = _mm256_mul_pd(two, _mm256_mul_pd(c3, n_rd));
            _mm256_storeu_pd(out + n, _mm256_mul_pd(n_sr, _mm256_min_pd(c1, hop2)));
            continue;
        }

        for (int k = 0; k < m_r * m_t; ++k)
            hh[k] = load(batch.rr_re, batch.rr_im, k * count + n);

        __m256d signal = n_sr, leak, tx_gain = n_rd;
        if (scheme == Scheme::MrcMrt)
        {
            C4 s = zero();
            for (int i = 0; i < m_r; ++i)
            {
                C4 row = zero(); // Σ_j H_ij conj(g_j)
                for (int j = 0; j < m_t; ++j)
                    row = fma_mul(row, hh[i * m_t + j], conj(g[j]));
                s = fma_cmul(s, h[i], row);
            }
            leak = _mm256_div_pd(norm2(s), _mm256_mul_pd(n_sr, n_rd));
        }
        else if (scheme == Scheme::TZF)
        {
            __m256d aa = _mm256_setzero_pd();
            for (int j = 0; j < m_t; ++j)
            {
                C4 s = zero();
                for (int i = 0; i < m_r; ++i)
                    s = fma_cmul(s, hh[i * m_t + j], h[i]);
                a[j] = s;
                aa = _mm256_add_pd(aa, norm2(s));
                p[j] = conj(g[j]);
            }
            project_out(p, a, aa);
            __m256d pp = _mm256_setzero_pd();
            C4 gp = zero(), ap = zero();
            for (int j = 0; j < m_t; ++j)
            {
                pp = _mm256_add_pd(pp, norm2(p[j]));
                gp = fma_mul(gp, g[j], p[j]);
                ap = fma_cmul(ap, a[j], p[j]);
            }
            tx_gain = _mm256_div_pd(norm2(gp), pp);
            leak = _mm256_div_pd(norm2(ap), _mm256_mul_pd(n_sr, pp));
        }
        else // RZF
        {
            __m256d uu = _mm256_setzero_pd();
            for (int i = 0; i < m_r; ++i)
            {
                C4 s = zero();
                for (int j = 0; j < m_t; ++j)
                    s = fma_mul(s, hh[i * m_t + j], conj(g[j]));
                u[i] = s;
                uu = _mm256_add_pd(uu, norm2(s));
                q[i] = h[i];
            }
            project_out(q, u, uu);
            __m256d qq = _mm256_setzero_pd();
            C4 qh = zero(), qu = zero();
            for (int i = 0; i < m_r; ++i)
            {
                qq = _mm256_add_pd(qq, norm2(q[i]));
                qh = fma_cmul(qh, q[i], h[i]);
                qu = fma_cmul(qu, q[i], u[i]);
            }
            signal = _mm256_div_pd(norm2(qh), qq);
            leak = _mm256_div_pd(norm2(qu), _mm256_mul_pd(qq, n_rd));
        }

        const __m256d denom = _mm256_fmadd_pd(_mm256_mul_pd(li_scale, n_sr), leak, pl1);
        const __m256d first = _mm256_div_pd(_mm256_mul_pd(p_s, signal), denom);
        const __m256d second = _mm256_mul_pd(c3, _mm256_mul_pd(n_sr, tx_gain));
        _mm256_storeu_pd(out + n, _mm256_min_pd(first, second));
    }

    batch_sinr_scalar(scheme, batch, coeffs, out, vec_end, count);
}

} // namespace fdrelay::kernels::detail
