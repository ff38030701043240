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


#include "oracles/ascent.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace fdrelay::oracles
{

namespace
{

struct Model
{
    double n_sr, k, c1, c3;
    CVector a, v;
    CMatrix C;
};

Model make_model(const ChannelRealization &ch, const SystemParams &p)
{
    Model m;
    m.n_sr = ch.h_sr.squaredNorm();
    const double pl1 = std::pow(p.d1, p.tau), pl2 = std::pow(p.d2, p.tau);
    const double kappa = p.eta * p.alpha / (1.0 - p.alpha);
    m.k = kappa * p.p_s * m.n_sr / pl1;
    m.c1 = p.p_s / pl1;
    m.c3 = kappa * p.p_s / (pl1 * pl2);
    m.a = ch.h_rr.adjoint() * ch.h_sr;
    m.v = ch.h_rd.adjoint();
    m.C = ch.h_rr.adjoint() * ch.h_rr;
    return m;
}

// Hop values and their Wirtinger gradients (w.r.t. conj(w)) for the
// best-combiner first hop c1 (n - k|a†w|²/(1 + k w†Cw)) and the second hop
// c3 n |v†w|².
struct Eval
{
    double f1, f2;
    CVector g1, g2;
};

Eval evaluate(const Model &m, const CVector &w)
{
    Eval e;
    const cplx aw = m.a.dot(w);
    const CVector cw = m.C * w;
    const double q = std::real(w.dot(cw));
    const double den = 1.0 + m.k * q;
    const double t = m.k * std::norm(aw) / den;
    e.f1 = m.c1 * (m.n_sr - t);
    const CVector gt = (m.k / (den * den)) * (m.a * aw * den - m.k * std::norm(aw) * cw);
    e.g1 = -m.c1 * gt;
    const cplx vw = m.v.dot(w);
    e.f2 = m.c3 * m.n_sr * std::norm(vw);
    e.g2 = m.c3 * m.n_sr * m.v * vw;
    return e;
}

CVector tangent(const CVector &w, const CVector &g) { return g - w * std::real(w.dot(g)); }

double value(const Model &m, const CVector &w)
{
    const Eval e = evaluate(m, w);
    return std::min(e.f1, e.f2);
}

// Minimum-norm point of the segment [g1, g2].
CVector min_norm(const CVector &g1, const CVector &g2)
{
    const CVector d = g1 - g2;
    const double dd = d.squaredNorm();
    if (dd == 0.0)
        return g1;
    const double theta = std::clamp(-std::real(d.dot(g2)) / dd, 0.0, 1.0);
    return theta * g1 + (1.0 - theta) * g2;
}

CVector climb(const Model &m, CVector w)
{
    double eps = 1e-2;
    double step = 0.1;
    double j = value(m, w);
    for (int it = 0; it < 2000 && eps > 1e-12; ++it)
    {
        const Eval e = evaluate(m, w);
        const double scale = std::max(std::abs(e.f1), std::abs(e.f2));
        const CVector t1 = tangent(w, e.g1), t2 = tangent(w, e.g2);
        CVector d;
        if (std::abs(e.f1 - e.f2) <= eps * scale)
            d = min_norm(t1, t2);
        else
            d = e.f1 < e.f2 ? t1 : t2;
        const double dn = d.norm();
        if (dn <= 1e-15 * std::max(scale, 1e-300))
        {
            eps *= 0.25;
            continue;
        }
        bool moved = false;
        double s = step / dn;
        for (int ls = 0; ls < 60; ++ls)
        {
            CVector cand = (w + s * d).normalized();
            const double jc = value(m, cand);
            if (jc > j + 1e-6 * s * dn * dn)
            {
                w = cand;
                j = jc;
                moved = true;
                step = std::min(1.0, 2.0 * s * dn);
                break;
            }
            s *= 0.5;
        }
        if (!moved)
        {
            eps *= 0.25;
            step = 0.1;
        }
    }
    return w;
}

} // namespace

double sinr_with_best_combiner(const ChannelRealization &ch, const SystemParams &p, const CVector &w,
                               CRowVector *w_r_out)
{
    const double pl1 = std::pow(p.d1, p.tau), pl2 = std::pow(p.d2, p.tau);
    const double kappa = p.eta * p.alpha / (1.0 - p.alpha);
    const double n_sr = ch.h_sr.squaredNorm();
    const CVector g = ch.h_rr * w;
    // Interference-plus-noise covariance (up to the factor d1^τ).
    CMatrix R = (kappa * p.p_s * n_sr / pl1) * (g * g.adjoint());
    R.diagonal().array() += 1.0;
    const CVector x = R.ldlt().solve(ch.h_sr);
    const CRowVector w_r = x.normalized().adjoint();
    if (w_r_out)
        *w_r_out = w_r;
    const double sig = std::norm((w_r * ch.h_sr).value());
    const double li = std::norm((w_r * g).value());
    const double first = p.p_s * sig / (kappa * p.p_s * n_sr * li + pl1);
    const double second = kappa * p.p_s / (pl1 * pl2) * n_sr * std::norm((ch.h_rd * w).value());
    return std::min(first, second);
}

AscentResult sphere_ascent(const ChannelRealization &ch, const SystemParams &params, int restarts,
                           std::uint64_t seed)
{
    const Model m = make_model(ch, params);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const Eigen::Index n = ch.h_rd.size();

    AscentResult best;
    best.sinr = -1.0;
    for (int r = 0; r < restarts; ++r)
    {
        CVector w(n);
        if (r == 0)
            w = m.v.normalized();
        else
            for (Eigen::Index i = 0; i < n; ++i)
                w(i) = cplx(normal(rng), normal(rng));
        w = climb(m, w.normalized());
        CRowVector w_r;
        const double s = sinr_with_best_combiner(ch, params, w, &w_r);
        if (s > best.sinr)
        {
            best.sinr = s;
            best.w_t = w;
            best.w_r = w_r;
        }
    }
    return best;
}

} // namespace fdrelay::oracles
