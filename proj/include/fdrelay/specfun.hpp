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

// Special functions used by the outage expressions. All functions are pure
// and throw fdrelay::DomainError outside their domain.

namespace fdrelay::specfun
{

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// ln Γ(x), x > 0.
double ln_gamma(double x);

// Regularized lower incomplete gamma P(a,x) = γ(a,x)/Γ(a), a > 0, x >= 0.
double reg_gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a,x) = Γ(a,x)/Γ(a), a > 0, x >= 0.
// Series for x < a+1, Lentz continued fraction otherwise; the function that
// is small in each regime is computed directly so neither loses relative
// accuracy to cancellation.
double reg_gamma_q(double a, double x);

// ψ(x) = d/dx ln Γ(x), x > 0.
double digamma(double x);

// CDF of X = Z·U with Z ~ Beta(1, m_r - 1) and U ~ Gamma(m_r, 1), evaluated as
//   F(t) = 1 - (1/Γ(m_r)) ∫_t^∞ (1 - t/u)^{m_r-1} u^{m_r-1} e^{-u} du.
// For m_r = 1 the Beta factor is the constant 1 and F(t) = 1 - e^{-t}.
double meijer_special_cdf(double t, int m_r);

// Survival function 1 - meijer_special_cdf(t, m_r), computed without the
// subtraction so small tails keep full relative accuracy.
double meijer_special_sf(double t, int m_r);

} // namespace fdrelay::specfun
