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


#include "catch_amalgamated.hpp"

#include "fdrelay/error.hpp"
#include "fdrelay/quadrature.hpp"

#include <cmath>

using namespace fdrelay;
using namespace fdrelay::specfun;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("semi-infinite integrals of exponential envelopes", "[quadrature]")
{
    const QuadratureSpec spec;
    CHECK_THAT(integrate_semi_infinite([](double u) { return std::exp(-u); }, 0.0, spec).value,
               WithinAbs(1.0, spec.abs_tol));
    CHECK_THAT(integrate_semi_infinite([](double u) { return u * std::exp(-u); }, 0.0, spec).value,
               WithinAbs(1.0, spec.abs_tol));
    CHECK_THAT(integrate_semi_infinite([](double u) { return u * u * std::exp(-u); }, 1.0, spec).value,
               WithinAbs(5.0 * std::exp(-1.0), spec.abs_tol));
}

TEST_CASE("upper incomplete gamma integrals for integer order", "[quadrature]")
{
    const QuadratureSpec spec;
    for (int a = 1; a <= 5; ++a)
        for (double lower : {0.0, 0.5, 2.0, 6.0})
        {
            // Γ(a, l) = (a-1)! e^{-l} Σ_{k<a} l^k/k!
            double s = 0.0, term = 1.0, fact = 1.0;
            for (int k = 0; k < a; ++k)
            {
                s += term;
                term *= lower / (k + 1);
            }
            for (int k = 2; k < a; ++k)
                fact *= k;
            const double expected = fact * std::exp(-lower) * s;
            const auto r = integrate_semi_infinite(
                [a](double u) { return std::pow(u, a - 1) * std::exp(-u); }, lower, spec);
            CHECK_THAT(r.value, WithinAbs(expected, spec.abs_tol));
            CHECK(r.abs_error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value)));
        }
}

TEST_CASE("breakpoints resolve narrow structure near the lower limit", "[quadrature]")
{
    const QuadratureSpec spec{1e-30, 1e-10, 400};
    const double l = 1e-6;
    const double pts[] = {2e-6, 1e-5, 1e-4};
    // ∫_l^∞ (l/x)² e^{-x} dx ≈ l for small l; compare against the split estimate.
    auto f = [l](double x) { return (l / x) * (l / x) * std::exp(-x); };
    const auto r = integrate_semi_infinite(f, l, spec, pts);
    const double head = integrate_finite(f, l, 1.0, spec).value;
    const double tail = integrate_semi_infinite(f, 1.0, spec).value;
    CHECK_THAT(r.value, WithinRel(head + tail, 1e-9));
}

TEST_CASE("finite integrals", "[quadrature]")
{
    CHECK_THAT(integrate_finite([](double x) { return std::sin(x); }, 0.0, M_PI).value, WithinAbs(2.0, 1e-12));
    CHECK_THAT(integrate_finite([](double x) { return std::sqrt(x); }, 0.0, 1.0).value, WithinAbs(2.0 / 3.0, 1e-9));
}

TEST_CASE("non-convergence carries the best estimate", "[quadrature]")
{
    const QuadratureSpec tight{1e-300, 1e-300, 2};
    try
    {
        integrate_finite([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, tight);
        FAIL("expected ConvergenceError");
    }
    catch (const ConvergenceError &e)
    {
        CHECK(std::isfinite(e.best_estimate()));
    }
}

TEST_CASE("spec validation", "[quadrature]")
{
    CHECK_THROWS_AS((QuadratureSpec{0.0, 1e-8, 10}.validate()), DomainError);
    CHECK_THROWS_AS((QuadratureSpec{1e-10, -1.0, 10}.validate()), DomainError);
    CHECK_THROWS_AS((QuadratureSpec{1e-10, 1e-8, 0}.validate()), DomainError);
    CHECK_NOTHROW(QuadratureSpec{}.validate());
}
