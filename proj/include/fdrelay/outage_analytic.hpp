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

#include "fdrelay/channel.hpp"
#include "fdrelay/quadrature.hpp"
#include "fdrelay/scheme.hpp"

#include <optional>

namespace fdrelay::outage
{

// CDF argument z together with the model; λ = d1^τ z / ρ1 is derived on
// demand.
struct OutageQuery
{
    SystemParams params;
    double z = 1.0;

    double lambda() const { return params.path_loss1() * z / params.rho1(); }
    // d2^τ/κ, the second-hop scale that recurs in every closed form.
    double second_hop_ratio() const { return params.path_loss2() / params.kappa(); }

    // Throws DomainError on invalid params or z <= 0.
    void validate() const;
};

// Tolerances used by every CDF below. Tighter than the specfun defaults:
// high-SNR outage values sit far below 1e-10.
inline constexpr specfun::QuadratureSpec kOutageQuadrature{1e-30, 1e-10, 400};

// Transmit ZF: 1 - (1/Γ(M_R)) ∫_λ^∞ Q(M_T-1, (d2^τ/κ) λ/x) x^{M_R-1} e^{-x} dx.
// Throws InfeasibleSchemeError for M_T = 1.
double outage_tzf(const OutageQuery &q);

// High-SNR approximation of outage_tzf; three branches on M_T vs M_R+1.
double outage_tzf_asymptotic(const OutageQuery &q);

// Receive ZF, with X1 ~ Beta(M_R-1, 1) on the first hop and Gamma(M_T) on the
// second. Throws InfeasibleSchemeError for M_R = 1.
double outage_rzf(const OutageQuery &q);

// High-SNR approximation of outage_rzf; three branches on M_R vs M_T+1.
double outage_rzf_asymptotic(const OutageQuery &q);

// Gain in the second-hop survival factor of the M_T = 1 MRC/MRT integral.
// SecondHop (c3) follows from the conditional CDF of |h_rd|²; Interference
// (c2) is kept only so the validation suite can show it does not match
// simulation.
enum class Case1Exponent
{
    SecondHop,
    Interference,
};

// MRC/MRT with M_T = 1:
//   1 - (1/Γ(M_R)) ∫_{z/c1}^∞ F_X1((c1/z - 1/y)/c2) e^{-z/(c3 y)} y^{M_R-1} e^{-y} dy.
// Throws WrongCaseError unless M_T = 1.
double outage_mrc_case1(const OutageQuery &q, Case1Exponent exponent = Case1Exponent::SecondHop);

// MRC/MRT with M_R = 1:
//   1 - ∫_{z/c1}^∞ (1 - e^{-(c1 x/z - 1)/(c2 x)}) Q(M_T, z/(c3 x)) e^{-x} dx.
// Throws WrongCaseError unless M_R = 1.
double outage_mrc_case2(const OutageQuery &q);

// Half-duplex: outage_tzf with M_T-1 replaced by M_T and κ doubled.
double outage_hd(const OutageQuery &q);

// TZF: min(M_R, M_T-1); RZF: min(M_R-1, M_T). Other schemes throw
// NotCharacterizedError; infeasible antenna counts throw InfeasibleSchemeError.
int diversity_order(Scheme scheme, int m_r, int m_t);

// Exact CDF for `scheme` at q.params' antenna counts, or nullopt where no
// closed form exists (optimal scheme, MRC/MRT with M_R, M_T > 1, infeasible
// ZF configurations).
std::optional<double> analytic_outage(Scheme scheme, const OutageQuery &q);

// Asymptotic counterpart; nullopt outside TZF and RZF.
std::optional<double> asymptotic_outage(Scheme scheme, const OutageQuery &q);

} // namespace fdrelay::outage
