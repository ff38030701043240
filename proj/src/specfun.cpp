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

#include "fdrelay/specfun.hpp"

#include "fdrelay/error.hpp"
#include "fdrelay/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace fdrelay::specfun
{

namespace
{

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

void require(bool ok, const char *what)
{
    if (!ok)
        throw DomainError(what);
}

// x^a e^{-x} / Γ(a), in log space so large a or x cannot overflow.
double gamma_prefactor(double a, double x)
{
    return std::exp(a * std::log(x) - x - ln_gamma(a));
}

// P(a,x) by its power series; converges for all x but is used for x < a+1.
double lower_series(double a, double x)
{
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < kMaxIter; ++n)
    {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps)
            return sum * gamma_prefactor(a, x);
    }
    throw ConvergenceError("reg_gamma_p: series did not converge", sum * gamma_prefactor(a, x));
}

// Q(a,x) by the modified Lentz continued fraction, used for x >= a+1.
double upper_fraction(double a, double x)
{
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i)
    {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            return gamma_prefactor(a, x) * h;
    }
    throw ConvergenceError("reg_gamma_q: continued fraction did not converge", gamma_prefactor(a, x) * h);
}

void check_gamma_args(double a, double x)
{
    require(std::isfinite(a) && a > 0.0, "incomplete gamma: shape a must be > 0");
    require(!std::isnan(x) && x >= 0.0, "incomplete gamma: argument x must be >= 0");
}

// Bernoulli-number coefficients B_{2k}/(2k) of the digamma asymptotic series.
constexpr std::array<double, 8> kDigammaAsym = {
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0, -3617.0 / 8160.0};

} // namespace

double ln_gamma(double x)
{
    require(std::isfinite(x) && x > 0.0, "ln_gamma: x must be > 0");
    return std::lgamma(x);
}

double reg_gamma_p(double a, double x)
{
    check_gamma_args(a, x);
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    if (x < a + 1.0)
        return lower_series(a, x);
    return 1.0 - upper_fraction(a, x);
}

double reg_gamma_q(double a, double x)
{
    check_gamma_args(a, x);
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;
    if (x < a + 1.0)
        return 1.0 - lower_series(a, x);
    return upper_fraction(a, x);
}

double digamma(double x)
{
    require(std::isfinite(x) && x > 0.0, "digamma: x must be > 0");

    // Shift up with ψ(x) = ψ(x+1) - 1/x until the asymptotic series is accurate.
    double shift = 0.0;
    while (x < 10.0)
    {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double pow2k = inv2;
    double series = 0.0;
    for (double coeff : kDigammaAsym)
    {
        series += coeff * pow2k;
        pow2k *= inv2;
    }
    return shift + std::log(x) - 0.5 / x - series;
}

double meijer_special_sf(double t, int m_r)
{
    require(!std::isnan(t) && t >= 0.0, "meijer_special_cdf: t must be >= 0");
    require(m_r >= 1, "meijer_special_cdf: m_r must be >= 1");
    if (std::isinf(t))
        return 0.0;
    if (m_r == 1)
        return std::exp(-t);

    // In the shifted variable s = u - t the factor (1 - t/u)^{M_R-1} u^{M_R-1}
    // is s^{M_R-1} exactly, and the e^{-t} envelope comes out of the
    // integral. Working in u instead cancels catastrophically once t is large.
    const double m1 = m_r - 1.0;
    const double lg = ln_gamma(static_cast<double>(m_r));
    const Integrand integrand = [=](double s) {
        if (s <= 0.0)
            return 0.0;
        return std::exp(m1 * std::log(s) - s - lg);
    };
    QuadratureSpec spec;
    spec.abs_tol = 1e-300;
    spec.rel_tol = 1e-13;
    const std::array<double, 3> breaks = {1.0, static_cast<double>(m_r), 4.0 * m_r};
    const double inner = integrate_semi_infinite(integrand, 0.0, spec, breaks).value;
    return std::exp(-t) * inner;
}

double meijer_special_cdf(double t, int m_r)
{
    require(!std::isnan(t) && t >= 0.0, "meijer_special_cdf: t must be >= 0");
    require(m_r >= 1, "meijer_special_cdf: m_r must be >= 1");
    if (m_r == 1)
        return -std::expm1(-t);
    const double cdf = 1.0 - meijer_special_sf(t, m_r);
    return cdf < 0.0 ? 0.0 : (cdf > 1.0 ? 1.0 : cdf);
}

} // namespace fdrelay::specfun
