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
#include "fdrelay/scheme.hpp"

namespace fdrelay::precoding
{

// Norms below this are treated as a degenerate (all-zero) channel.
inline constexpr double kDegenerateNorm = 1e-14;

// Unit-norm receive combiner (1 x M_R) and transmit beamformer (M_T x 1).
struct BeamformingPair
{
    CRowVector w_r;
    CVector w_t;
    Scheme scheme = Scheme::MrcMrt;
    // Set when the optimal search found no feasible leakage level and the
    // best closed-form candidate was returned instead.
    bool fallback = false;
};

struct OptimalSearchSpec
{
    int t_grid_points = 24; // coarse grid over the leakage level t
    int refine_iters = 40;  // golden-section iterations around the best grid cell
    int restarts = 100;     // random restarts for the sphere-ascent verifier
    double tol = 1e-9;      // relative tolerance of the inner dual bisection

    void validate() const;
};

// w_r = h_sr†/‖h_sr‖, w_t = h_rd†/‖h_rd‖.
BeamformingPair mrc_mrt(const ChannelRealization &ch);

// MRC combiner; w_t is h_rd† projected onto the null space of h_sr† H_rr.
// Throws InfeasibleSchemeError for M_T = 1.
BeamformingPair tzf(const ChannelRealization &ch);

// MRT beamformer; w_r is h_sr projected off H_rr h_rd†, then conjugated.
// Throws InfeasibleSchemeError for M_R = 1.
BeamformingPair rzf(const ChannelRealization &ch);

// Closed-form optimal combiner for a fixed beamformer (generalized Rayleigh
// quotient): w_r ∝ h_sr† (k̃‖h_sr‖² H_rr w_t w_t† H_rr† + I)^{-1}, k̃ = κP_S/d1^τ.
CRowVector optimal_combiner(const ChannelRealization &ch, const SystemParams &params, const CVector &w_t);

// Inner problem of the optimal design at leakage level t:
//   f(t) = max |h_rd w|²  s.t.  ‖w‖ = 1,  w†(A - tC)w = t/(k̃‖h_sr‖²),
// with A = H_rr† h_sr h_sr† H_rr and C = H_rr† H_rr. Solved through its
// semidefinite relaxation; the relaxation is tight and a rank-one maximizer
// is extracted.
struct LeakageSolution
{
    bool feasible = false;
    double gain = 0.0; // f(t)
    CVector w_t;       // unit-norm maximizer when feasible
};
LeakageSolution solve_leakage_constrained(const ChannelRealization &ch, const SystemParams &params, double t,
                                          const OptimalSearchSpec &spec = {});

// The outer one-dimensional objective
//   min( (P_S/d1^τ)(‖h_sr‖² - t),  (κP_S/(d1^τ d2^τ)) ‖h_sr‖² f(t) ),
// or -inf when the leakage level is infeasible.
double leakage_objective(const ChannelRealization &ch, const SystemParams &params, double t,
                         const OptimalSearchSpec &spec = {});

// Leakage level t(w_t) = k̃‖h_sr‖² |h_sr† H_rr w_t|² / (1 + k̃‖h_sr‖² ‖H_rr w_t‖²).
double leakage_level(const ChannelRealization &ch, const SystemParams &params, const CVector &w_t);

// Joint combiner/beamformer maximizing the end-to-end SINR.
BeamformingPair optimal(const ChannelRealization &ch, const SystemParams &params,
                        const OptimalSearchSpec &spec = {});

// Pair used by `scheme`; the half-duplex relay uses MRC/MRT with no loopback.
BeamformingPair compute_pair(Scheme scheme, const ChannelRealization &ch, const SystemParams &params,
                             const OptimalSearchSpec &spec = {});

} // namespace fdrelay::precoding
