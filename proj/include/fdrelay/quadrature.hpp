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

#include <functional>
#include <span>

namespace fdrelay::specfun
{

struct QuadratureSpec
{
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 200;

    // Throws DomainError unless abs_tol > 0, rel_tol > 0, max_subdivisions >= 1.
    void validate() const;
};

struct QuadratureResult
{
    double value = 0.0;
    double abs_error = 0.0; // Kronrod-Gauss error estimate
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b].
QuadratureResult integrate_finite(const Integrand &f, double a, double b,
                                  const QuadratureSpec &spec = {});

// ∫_lower^∞ f(x) dx via the map x = lower + s/(1-s), s ∈ [0,1), followed by
// adaptive Gauss-Kronrod on [0,1]. Optional breakpoints (x-values > lower)
// seed the initial partition where the caller knows the integrand has
// structure on a small scale. Succeeds when the estimated error is below
// max(abs_tol, rel_tol·|value|); otherwise throws ConvergenceError carrying
// the best estimate.
QuadratureResult integrate_semi_infinite(const Integrand &f, double lower,
                                         const QuadratureSpec &spec = {},
                                         std::span<const double> breakpoints = {});

} // namespace fdrelay::specfun
