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


#include "fdrelay/outage_analytic.hpp"

#include "fdrelay/error.hpp"
#include "fdrelay/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fdrelay::outage
{

namespace
{

using specfun::ln_gamma;
using specfun::reg_gamma_p;
using specfun::reg_gamma_q;

// x^{m-1} e^{-x} / Γ(m), in log space so large x cannot overflow.
double gamma_density(double x, int m)
{
    if (x <= 0.0)
        return m == 1 ? 1.0 : 0.0;
    return std::exp((m - 1) * std::log(x) - x - ln_gamma(m));
}

double integrate_from(const specfun::Integrand &f, double lower)
{
    // Structure of these integrands lives on the scale of the lower limit,
    // which is tiny at high SNR.
    const std::array<double, 7> knots{lower * 2.0, lower * 10.0, lower * 100.0, lower * 1000.0, 1.0, 4.0, 16.0};
    return specfun::integrate_semi_infinite(f, lower, kOutageQuadrature, knots).value;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// P(m_r, λ) + (1/Γ(m_r)) ∫_λ^∞ P(n, bλ/x) x^{m_r-1} e^{-x} dx, the complement
// form of 1 - (1/Γ(m_r)) ∫_λ^∞ Q(n, bλ/x) x^{m_r-1} e^{-x} dx.
double product_gamma_cdf(int m_r, int n, double lambda, double b)
{
    const double head = reg_gamma_p(m_r, lambda);
    const double tail = integrate_from(
        [&](double x) { return reg_gamma_p(n, b * lambda / x) * gamma_density(x, m_r); }, lambda);
    return clamp01(head + tail);
}

struct HopGains
{
    double c1, c2, c3;
};

HopGains hop_gains(const SystemParams &p)
{
    const double pl1 = p.path_loss1();
    return {p.p_s / pl1, p.p_s * p.kappa() * p.sigma2_li / pl1, p.p_s * p.kappa() / (pl1 * p.path_loss2())};
}

} // namespace

void OutageQuery::validate() const
{
    params.validate();
    if (!(z > 0.0) || !std::isfinite(z))
        throw DomainError("OutageQuery: z must be positive and finite");
}

double outage_tzf(const OutageQuery &q)
{
    q.validate();
    if (q.params.m_t < 2)
        throw InfeasibleSchemeError("outage_tzf: needs M_T >= 2");
    return product_gamma_cdf(q.params.m_r, q.params.m_t - 1, q.lambda(), q.second_hop_ratio());
}

double outage_hd(const OutageQuery &q)
{
    q.validate();
    return product_gamma_cdf(q.params.m_r, q.params.m_t, q.lambda(), 0.5 * q.second_hop_ratio());
}

double outage_rzf(const OutageQuery &q)
{
    q.validate();
    const int m_r = q.params.m_r, m_t = q.params.m_t;
    if (m_r < 2)
        throw InfeasibleSchemeError("outage_rzf: needs M_R >= 2");
    const double lambda = q.lambda(), b = q.second_hop_ratio();
    // 1 - ∫ (1 - (λ/x)^{M_R-1}) Q(M_T, bλ/x) f_Y(x) dx, written without the
    // leading subtraction.
    const double head = reg_gamma_p(m_r, lambda);
    const double tail = integrate_from(
        [&](double x) {
            const double u = b * lambda / x;
            const double blocked = std::pow(lambda / x, m_r - 1);
            return (reg_gamma_p(m_t, u) + blocked * reg_gamma_q(m_t, u)) * gamma_density(x, m_r);
        },
        lambda);
    return clamp01(head + tail);
}

double outage_mrc_case1(const OutageQuery &q, Case1Exponent exponent)
{
    q.validate();
    const int m_r = q.params.m_r;
    if (q.params.m_t != 1)
        throw WrongCaseError("outage_mrc_case1: needs M_T = 1");
    const auto [c1, c2, c3] = hop_gains(q.params);
    const double z = q.z, lower = z / c1;
    const double c_exp = exponent == Case1Exponent::SecondHop ? c3 : c2;
    // Per y: 1 - F_X1(arg)·e^{-z/(c3 y)} = (1 - e^{-z/(c3 y)}) + S_X1(arg)·e^{-z/(c3 y)}.
    const double tail = integrate_from(
        [&](double y) {
            const double u = z / (c_exp * y);
            const double pass = std::exp(-u);
            double sf = 0.0;
            if (c2 > 0.0)
                sf = specfun::meijer_special_sf(std::max(0.0, (c1 / z - 1.0 / y) / c2), m_r);
            return (-std::expm1(-u) + sf * pass) * gamma_density(y, m_r);
        },
        lower);
    return clamp01(reg_gamma_p(m_r, lower) + tail);
}

double outage_mrc_case2(const OutageQuery &q)
{
    q.validate();
    const int m_t = q.params.m_t;
    if (q.params.m_r != 1)
        throw WrongCaseError("outage_mrc_case2: needs M_R = 1");
    const auto [c1, c2, c3] = hop_gains(q.params);
    const double z = q.z, lower = z / c1;
    const double tail = integrate_from(
        [&](double x) {
            const double u = z / (c3 * x);
            double sf = 0.0; // P(LI pushes the first hop below z)
            if (c2 > 0.0)
                sf = std::exp(-std::max(0.0, c1 * x / z - 1.0) / (c2 * x));
            return (reg_gamma_p(m_t, u) + sf * reg_gamma_q(m_t, u)) * std::exp(-x);
        },
        lower);
    return clamp01(-std::expm1(-lower) + tail);
}

double outage_tzf_asymptotic(const OutageQuery &q)
{
    q.validate();
    const int m_r = q.params.m_r, m_t = q.params.m_t;
    if (m_t < 2)
        throw InfeasibleSchemeError("outage_tzf_asymptotic: needs M_T >= 2");
    const double lambda = q.lambda(), b = q.second_hop_ratio();

    if (m_t > m_r + 1)
    {
        // Σ_k (-1)^{k+1} b^{M_T+k-1} / (k! (k+M_T-1) (M_R-M_T-k+1)); the
        // excluded index k = M_R-M_T+1 is negative in this branch.
        double sum = 0.0;
        double log_b = std::log(b);
        for (int k = 0; k <= 500; ++k)
        {
            const double mag =
                std::exp((m_t + k - 1) * log_b - ln_gamma(k + 1.0)) / ((k + m_t - 1.0) * (m_r - m_t - k + 1.0));
            const double term = (k % 2 == 0) ? -mag : mag;
            sum += term;
            if (k > b && std::abs(term) < 1e-14 * std::abs(sum))
                break;
        }
        const double coeff = std::exp(-ln_gamma(m_r + 1.0)) + sum * std::exp(-ln_gamma(m_t - 1.0) - ln_gamma(m_r));
        return coeff * std::pow(lambda, m_r);
    }
    if (m_t == m_r + 1)
    {
        const double log_term = -std::log(lambda) + specfun::digamma(1.0);
        const double coeff =
            std::exp(-ln_gamma(m_r + 1.0)) * (1.0 + std::exp(-ln_gamma(m_r)) * log_term * std::pow(b, m_r));
        return coeff * std::pow(lambda, m_r);
    }
    const double coeff = std::exp(ln_gamma(m_r - m_t + 1.0) - ln_gamma(m_t) - ln_gamma(m_r));
    return coeff * std::pow(b * lambda, m_t - 1);
}

double outage_rzf_asymptotic(const OutageQuery &q)
{
    q.validate();
    const int m_r = q.params.m_r, m_t = q.params.m_t;
    if (m_r < 2)
        throw InfeasibleSchemeError("outage_rzf_asymptotic: needs M_R >= 2");
    const double lambda = q.lambda(), b = q.second_hop_ratio();
    if (m_r < m_t + 1)
        return std::exp(-ln_gamma(m_r)) * std::pow(lambda, m_r - 1);
    if (m_r == m_t + 1)
        return std::exp(-ln_gamma(m_r)) * (1.0 + std::pow(b, m_t) * std::exp(-ln_gamma(m_t + 1.0))) *
               std::pow(lambda, m_t);
    return std::exp(ln_gamma(m_r - m_t) - ln_gamma(m_r) - ln_gamma(m_t + 1.0)) * std::pow(b * lambda, m_t);
}

int diversity_order(Scheme scheme, int m_r, int m_t)
{
    if (scheme != Scheme::TZF && scheme != Scheme::RZF)
        throw NotCharacterizedError("diversity_order: only TZF and RZF have a characterized diversity order");
    if (!is_feasible(scheme, m_r, m_t))
        throw InfeasibleSchemeError("diversity_order: scheme infeasible for these antenna counts");
    return scheme == Scheme::TZF ? std::min(m_r, m_t - 1) : std::min(m_r - 1, m_t);
}

std::optional<double> analytic_outage(Scheme scheme, const OutageQuery &q)
{
    const int m_r = q.params.m_r, m_t = q.params.m_t;
    switch (scheme)
    {
    case Scheme::TZF:
        return m_t >= 2 ? std::optional(outage_tzf(q)) : std::nullopt;
    case Scheme::RZF:
        return m_r >= 2 ? std::optional(outage_rzf(q)) : std::nullopt;
    case Scheme::MrcMrt:
        if (m_t == 1)
            return outage_mrc_case1(q);
        if (m_r == 1)
            return outage_mrc_case2(q);
        return std::nullopt;
    case Scheme::HalfDuplex:
        return outage_hd(q);
    case Scheme::Optimal:
        break;
    }
    return std::nullopt;
}

std::optional<double> asymptotic_outage(Scheme scheme, const OutageQuery &q)
{
    if (scheme == Scheme::TZF && q.params.m_t >= 2)
        return outage_tzf_asymptotic(q);
    if (scheme == Scheme::RZF && q.params.m_r >= 2)
        return outage_rzf_asymptotic(q);
    return std::nullopt;
}

} // namespace fdrelay::outage
