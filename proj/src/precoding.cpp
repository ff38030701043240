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

#include "fdrelay/precoding.hpp"

#include "fdrelay/error.hpp"
#include "fdrelay/sinr.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace fdrelay::precoding
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498948482;

CVector normalized(const CVector &v, const char *what)
{
    const double n = v.norm();
    if (!(n >= kDegenerateNorm))
        throw DegenerateChannelError(what);
    return v / n;
}

// v with its component along `a` removed; the second pass cleans up the
// rounding left by the first.
CVector project_out(const CVector &v, const CVector &a)
{
    const double aa = a.squaredNorm();
    CVector p = v - a * (a.dot(v) / aa);
    p -= a * (a.dot(p) / aa);
    return p;
}

double first_hop_gain(const SystemParams &p) { return p.p_s / p.path_loss1(); }
double second_hop_gain(const SystemParams &p) { return p.kappa() * p.p_s / (p.path_loss1() * p.path_loss2()); }
double harvest_gain(const SystemParams &p) { return p.kappa() * p.p_s / p.path_loss1(); }

// ---------------------------------------------------------------------------
// Inner problem in the eigenbasis of M = A - tC - (t/k)I.
//
// With M = U diag(m) U† and b = U† h_rd†, aligning phases reduces the problem
// to   max (sᵀr)²  s.t.  ‖r‖ = 1, Σ m_i r_i² = 0, r >= 0,   s = |b|.
// Its relaxation has dual  min_ν λ_max(s sᵀ + ν diag(m)). For fixed ν the top
// eigenpair of a diagonal-plus-rank-one matrix comes from the secular
// equation Σ s_i² / (λ - ν m_i) = 1, and dλ_max/dν = Σ m_i r_i² is
// non-decreasing, so ν* is found by bisection on its sign.
// ---------------------------------------------------------------------------

struct TopPair
{
    Eigen::VectorXd r;
    double slope = 0.0; // Σ m_i r_i²
};

TopPair top_eigenpair(const Eigen::VectorXd &s, const Eigen::VectorXd &m, double nu)
{
    const Eigen::Index n = s.size();
    const double s_scale = s.norm();
    double d_coupled = -kInf, d_uncoupled = -kInf;
    Eigen::Index j_uncoupled = 0;
    double sum_s2 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const double d = nu * m(i);
        if (s(i) > 1e-15 * s_scale)
        {
            d_coupled = std::max(d_coupled, d);
            sum_s2 += s(i) * s(i);
        }
        else if (d > d_uncoupled)
        {
            d_uncoupled = d;
            j_uncoupled = i;
        }
    }

    TopPair out;
    out.r = Eigen::VectorXd::Zero(n);
    double lambda = -kInf;
    if (sum_s2 > 0.0)
    {
        // Newton from the right of the root is monotone for this convex,
        // decreasing secular function.
        lambda = d_coupled + sum_s2;
        for (int it = 0; it < 200; ++it)
        {
            double g = -1.0, dg = 0.0;
            for (Eigen::Index i = 0; i < n; ++i)
            {
                if (!(s(i) > 1e-15 * s_scale))
                    continue;
                const double inv = 1.0 / (lambda - nu * m(i));
                g += s(i) * s(i) * inv;
                dg -= s(i) * s(i) * inv * inv;
            }
            const double step = g / dg;
            const double next = lambda - step;
            if (!(next > d_coupled) || !std::isfinite(next))
                break;
            if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(next))
            {
                lambda = next;
                break;
            }
            lambda = next;
        }
    }

    if (d_uncoupled > lambda)
    {
        out.r(j_uncoupled) = 1.0;
    }
    else
    {
        for (Eigen::Index i = 0; i < n; ++i)
            if (s(i) > 1e-15 * s_scale)
                out.r(i) = s(i) / (lambda - nu * m(i));
        out.r.normalize();
    }
    out.slope = out.r.dot(m.cwiseProduct(out.r));
    return out;
}

// Point on the segment between two unit vectors whose quadratic form
// rᵀ diag(m) r vanishes; q_lo <= 0 <= q_hi.
Eigen::VectorXd balance(const Eigen::VectorXd &lo, const Eigen::VectorXd &hi, const Eigen::VectorXd &m)
{
    const double a = lo.dot(m.cwiseProduct(lo));
    const double b = lo.dot(m.cwiseProduct(hi));
    const double c = hi.dot(m.cwiseProduct(hi));
    const double qa = a - 2.0 * b + c;
    const double qb = 2.0 * (b - a);
    double beta;
    if (std::abs(qa) <= 1e-14 * (std::abs(a) + std::abs(c)))
    {
        beta = (qb != 0.0) ? -a / qb : 0.5;
    }
    else
    {
        const double disc = std::max(0.0, qb * qb - 4.0 * qa * a);
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (qb + std::copysign(sq, qb));
        double r1 = q / qa;
        double r2 = (q != 0.0) ? a / q : r1;
        beta = (r1 >= 0.0 && r1 <= 1.0) ? r1 : r2;
    }
    beta = std::clamp(beta, 0.0, 1.0);
    Eigen::VectorXd r = (1.0 - beta) * lo + beta * hi;
    return r.normalized();
}

LeakageSolution from_real(const CMatrix &U, const CVector &b, const Eigen::VectorXd &r, const CVector &v)
{
    CVector x(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i)
    {
        const double mag = std::abs(b(i));
        const cplx phase = mag > 0.0 ? b(i) / mag : cplx(1.0, 0.0);
        x(i) = r(i) * phase;
    }
    LeakageSolution sol;
    sol.feasible = true;
    sol.w_t = (U * x).normalized();
    sol.gain = std::norm(v.dot(sol.w_t));
    return sol;
}

} // namespace

void OptimalSearchSpec::validate() const
{
    if (t_grid_points < 2 || refine_iters < 1 || restarts < 1 || !(tol > 0.0))
        throw DomainError("OptimalSearchSpec: grid >= 2, refine_iters >= 1, restarts >= 1, tol > 0 required");
}

BeamformingPair mrc_mrt(const ChannelRealization &ch)
{
    BeamformingPair pair;
    pair.w_r = normalized(ch.h_sr, "mrc_mrt: h_sr is zero").adjoint();
    pair.w_t = normalized(ch.h_rd.adjoint(), "mrc_mrt: h_rd is zero");
    pair.scheme = Scheme::MrcMrt;
    return pair;
}

BeamformingPair tzf(const ChannelRealization &ch)
{
    if (ch.m_t() < 2)
        throw InfeasibleSchemeError("tzf: needs at least two transmit antennas");
    BeamformingPair pair;
    pair.scheme = Scheme::TZF;
    pair.w_r = normalized(ch.h_sr, "tzf: h_sr is zero").adjoint();

    const CVector v = ch.h_rd.adjoint();
    const CVector leak = ch.h_rr.adjoint() * ch.h_sr; // (h_sr† H_rr)†
    if (leak.norm() < kDegenerateNorm)
        pair.w_t = normalized(v, "tzf: h_rd is zero");
    else
        pair.w_t = normalized(project_out(v, leak), "tzf: h_rd lies along the loopback direction");
    return pair;
}

BeamformingPair rzf(const ChannelRealization &ch)
{
    if (ch.m_r() < 2)
        throw InfeasibleSchemeError("rzf: needs at least two receive antennas");
    BeamformingPair pair;
    pair.scheme = Scheme::RZF;
    pair.w_t = normalized(ch.h_rd.adjoint(), "rzf: h_rd is zero");

    const CVector leak = ch.h_rr * ch.h_rd.adjoint(); // H_rr h_rd†
    if (leak.norm() < kDegenerateNorm)
        pair.w_r = normalized(ch.h_sr, "rzf: h_sr is zero").adjoint();
    else
        pair.w_r = normalized(project_out(ch.h_sr, leak), "rzf: h_sr lies along the loopback direction").adjoint();
    return pair;
}

CRowVector optimal_combiner(const ChannelRealization &ch, const SystemParams &params, const CVector &w_t)
{
    const double k = harvest_gain(params) * ch.h_sr.squaredNorm();
    const CVector g = ch.h_rr * w_t;
    // (k g g† + I)^{-1} h_sr by Sherman-Morrison.
    const CVector x = ch.h_sr - g * (k * g.dot(ch.h_sr) / (1.0 + k * g.squaredNorm()));
    return normalized(x, "optimal_combiner: h_sr is zero").adjoint();
}

double leakage_level(const ChannelRealization &ch, const SystemParams &params, const CVector &w_t)
{
    const double k = harvest_gain(params) * ch.h_sr.squaredNorm();
    const CVector g = ch.h_rr * w_t;
    const double aligned = std::norm(ch.h_sr.dot(g));
    return k * aligned / (1.0 + k * g.squaredNorm());
}

LeakageSolution solve_leakage_constrained(const ChannelRealization &ch, const SystemParams &params, double t,
                                          const OptimalSearchSpec &spec)
{
    const double k = harvest_gain(params) * ch.h_sr.squaredNorm();
    if (!(k > 0.0))
        throw DegenerateChannelError("solve_leakage_constrained: no harvested power");
    if (t < 0.0)
        return {};

    const CVector a = ch.h_rr.adjoint() * ch.h_sr;
    const CMatrix C = ch.h_rr.adjoint() * ch.h_rr;
    const Eigen::Index n = a.size();
    CMatrix M = a * a.adjoint() - t * C;
    M.diagonal().array() -= t / k;

    const CVector v = ch.h_rd.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(M);
    const Eigen::VectorXd m = eig.eigenvalues();
    const CMatrix &U = eig.eigenvectors();
    const CVector b = U.adjoint() * v;

    const double m_scale = m.cwiseAbs().maxCoeff();
    if (m_scale == 0.0)
    {
        LeakageSolution sol{true, v.squaredNorm(), v.normalized()};
        return sol;
    }

    // Semidefinite M: the constraint confines w to the (near-)null space of M.
    const double null_tol = 1e-12 * m_scale;
    if (m(0) >= -null_tol || m(n - 1) <= null_tol)
    {
        CVector x = CVector::Zero(n);
        Eigen::Index first_null = -1;
        for (Eigen::Index i = 0; i < n; ++i)
        {
            if (std::abs(m(i)) <= null_tol)
            {
                x(i) = b(i);
                if (first_null < 0)
                    first_null = i;
            }
        }
        if (first_null < 0)
            return {};
        if (x.norm() == 0.0)
            x(first_null) = 1.0;
        LeakageSolution sol;
        sol.feasible = true;
        sol.w_t = (U * x).normalized();
        sol.gain = std::norm(v.dot(sol.w_t));
        return sol;
    }

    const Eigen::VectorXd s = b.cwiseAbs();
    const double s2 = std::max(s.squaredNorm(), std::numeric_limits<double>::min());
    double lo = -s2 / m_scale, hi = s2 / m_scale;
    TopPair p_lo = top_eigenpair(s, m, lo);
    TopPair p_hi = top_eigenpair(s, m, hi);
    for (int it = 0; it < 200 && p_lo.slope > 0.0; ++it)
    {
        hi = lo;
        p_hi = p_lo;
        lo *= 2.0;
        p_lo = top_eigenpair(s, m, lo);
    }
    for (int it = 0; it < 200 && p_hi.slope < 0.0; ++it)
    {
        lo = hi;
        p_lo = p_hi;
        hi *= 2.0;
        p_hi = top_eigenpair(s, m, hi);
    }
    if (p_lo.slope > 0.0 || p_hi.slope < 0.0)
        return {};

    for (int it = 0; it < 200; ++it)
    {
        if (p_lo.slope == 0.0)
        {
            p_hi = p_lo;
            break;
        }
        if (p_hi.slope == 0.0)
        {
            p_lo = p_hi;
            break;
        }
        if (hi - lo <= spec.tol * std::max(std::abs(lo), std::abs(hi)) + std::numeric_limits<double>::min())
            break;
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi))
            break;
        TopPair p_mid = top_eigenpair(s, m, mid);
        if (p_mid.slope < 0.0)
        {
            lo = mid;
            p_lo = std::move(p_mid);
        }
        else
        {
            hi = mid;
            p_hi = std::move(p_mid);
        }
    }

    return from_real(U, b, balance(p_lo.r, p_hi.r, m), v);
}

double leakage_objective(const ChannelRealization &ch, const SystemParams &params, double t,
                         const OptimalSearchSpec &spec)
{
    const LeakageSolution sol = solve_leakage_constrained(ch, params, t, spec);
    if (!sol.feasible)
        return -kInf;
    const double n_sr = ch.h_sr.squaredNorm();
    return std::min(first_hop_gain(params) * (n_sr - t), second_hop_gain(params) * n_sr * sol.gain);
}

BeamformingPair optimal(const ChannelRealization &ch, const SystemParams &params, const OptimalSearchSpec &spec)
{
    ch.validate();
    spec.validate();
    const double n_sr = ch.h_sr.squaredNorm();
    if (std::sqrt(n_sr) < kDegenerateNorm)
        throw DegenerateChannelError("optimal: h_sr is zero");

    BeamformingPair pair;
    pair.scheme = Scheme::Optimal;

    const CVector w_mrt = normalized(ch.h_rd.adjoint(), "optimal: h_rd is zero");
    if (ch.m_t() == 1)
    {
        pair.w_t = w_mrt;
        pair.w_r = optimal_combiner(ch, params, pair.w_t);
        return pair;
    }

    // If beamforming to the destination leaves the second hop as the
    // bottleneck, nothing can beat it: the second hop is already at its
    // unconstrained maximum.
    const double t_mrt = leakage_level(ch, params, w_mrt);
    const double second_max = second_hop_gain(params) * n_sr * ch.h_rd.squaredNorm();
    const double first_at_mrt = first_hop_gain(params) * (n_sr - t_mrt);
    if (first_at_mrt >= second_max || !(t_mrt > 0.0))
    {
        pair.w_t = w_mrt;
        pair.w_r = optimal_combiner(ch, params, pair.w_t);
        return pair;
    }

    // Otherwise the optimum has leakage in [0, t_mrt]. On that interval f(t)
    // is non-decreasing, so the objective (min of a falling line and a rising
    // curve) is unimodal: coarse grid, then golden section.
    auto objective = [&](double t) { return leakage_objective(ch, params, t, spec); };
    const int grid = spec.t_grid_points;
    std::vector<double> ts(grid), js(grid);
    int best = 0;
    for (int i = 0; i < grid; ++i)
    {
        ts[i] = t_mrt * static_cast<double>(i) / (grid - 1);
        js[i] = objective(ts[i]);
        if (js[i] > js[best])
            best = i;
    }

    double t_best = ts[best], j_best = js[best];
    double lo = ts[std::max(best - 1, 0)], hi = ts[std::min(best + 1, grid - 1)];
    double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
    double f1 = objective(x1), f2 = objective(x2);
    for (int it = 0; it < spec.refine_iters; ++it)
    {
        if (f1 < f2)
        {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = objective(x2);
        }
        else
        {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = objective(x1);
        }
    }
    if (f1 > j_best)
    {
        t_best = x1;
        j_best = f1;
    }
    if (f2 > j_best)
    {
        t_best = x2;
        j_best = f2;
    }

    const LeakageSolution sol = solve_leakage_constrained(ch, params, t_best, spec);
    BeamformingPair mrt_pair;
    mrt_pair.scheme = Scheme::Optimal;
    mrt_pair.w_t = w_mrt;
    mrt_pair.w_r = optimal_combiner(ch, params, w_mrt);
    if (!sol.feasible)
    {
        mrt_pair.fallback = true;
        return mrt_pair;
    }

    pair.w_t = sol.w_t;
    pair.w_r = optimal_combiner(ch, params, pair.w_t);
    if (sinr::e2e_sinr(ch, params, mrt_pair).e2e > sinr::e2e_sinr(ch, params, pair).e2e)
        return mrt_pair;
    return pair;
}

BeamformingPair compute_pair(Scheme scheme, const ChannelRealization &ch, const SystemParams &params,
                             const OptimalSearchSpec &spec)
{
    switch (scheme)
    {
    case Scheme::Optimal:
        return optimal(ch, params, spec);
    case Scheme::TZF:
        return tzf(ch);
    case Scheme::RZF:
        return rzf(ch);
    case Scheme::MrcMrt:
        return mrc_mrt(ch);
    case Scheme::HalfDuplex:
    {
        BeamformingPair pair = mrc_mrt(ch);
        pair.scheme = Scheme::HalfDuplex;
        return pair;
    }
    }
    throw InfeasibleSchemeError("compute_pair: unknown scheme");
}

} // namespace fdrelay::precoding
