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

#include "fdrelay/quadrature.hpp"

#include "fdrelay/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace fdrelay::specfun
{

namespace
{

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment &other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand &f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j)
    {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1)
            gauss += kWg[j / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    double err = std::abs(kronrod - gauss);
    if (!std::isfinite(kronrod))
        err = std::numeric_limits<double>::infinity();
    return {a, b, kronrod, err};
}

QuadratureResult adaptive(const Integrand &f, const std::vector<double> &knots, const QuadratureSpec &spec)
{
    spec.validate();
    std::priority_queue<Segment> work;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    {
        if (!(knots[i + 1] > knots[i]))
            continue;
        Segment s = gauss_kronrod(f, knots[i], knots[i + 1]);
        total += s.value;
        total_err += s.error;
        work.push(s);
    }

    int splits = 0;
    auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
    while (!work.empty() && total_err > tolerance())
    {
        if (splits >= spec.max_subdivisions)
            throw ConvergenceError("quadrature: max_subdivisions reached", total);
        const Segment worst = work.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw ConvergenceError("quadrature: interval cannot be bisected further", total);
        work.pop();
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        ++splits;
    }

    // Re-sum to shed the drift of the running updates.
    double value = 0.0;
    double err = 0.0;
    while (!work.empty())
    {
        value += work.top().value;
        err += work.top().error;
        work.pop();
    }
    if (!std::isfinite(value))
        throw ConvergenceError("quadrature: non-finite integrand", value);
    return {value, err, splits};
}

} // namespace

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
        throw DomainError("QuadratureSpec: need abs_tol > 0, rel_tol > 0, max_subdivisions >= 1");
}

QuadratureResult integrate_finite(const Integrand &f, double a, double b, const QuadratureSpec &spec)
{
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integrate_finite: limits must be finite");
    if (a == b)
        return {};
    if (a > b)
    {
        QuadratureResult r = integrate_finite(f, b, a, spec);
        r.value = -r.value;
        return r;
    }
    return adaptive(f, {a, b}, spec);
}

QuadratureResult integrate_semi_infinite(const Integrand &f, double lower, const QuadratureSpec &spec,
                                         std::span<const double> breakpoints)
{
    if (!std::isfinite(lower))
        throw DomainError("integrate_semi_infinite: lower limit must be finite");

    const Integrand mapped = [&](double s) {
        const double one_minus = 1.0 - s;
        const double x = lower + s / one_minus;
        const double fx = f(x);
        if (fx == 0.0)
            return 0.0;
        return fx / (one_minus * one_minus);
    };

    std::vector<double> knots = {0.0};
    std::vector<double> sorted(breakpoints.begin(), breakpoints.end());
    std::sort(sorted.begin(), sorted.end());
    for (double x : sorted)
    {
        if (!(x > lower) || !std::isfinite(x))
            continue;
        const double u = x - lower;
        knots.push_back(u / (1.0 + u));
    }
    knots.push_back(1.0);
    return adaptive(mapped, knots, spec);
}

} // namespace fdrelay::specfun
