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

#include "fdrelay/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace fdrelay
{

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;    // column vector
using CRowVector = Eigen::RowVectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Scalar model of the source -> wirelessly powered FD relay -> destination link.
// Noise at relay and destination has unit power, so the first-hop SNR ρ₁ is P_S.
struct SystemParams
{
    int m_r = 1;            // relay receive antennas M_R
    int m_t = 1;            // relay transmit antennas M_T
    double p_s = 1.0;       // source power P_S (linear)
    double d1 = 1.0;        // S-R distance
    double d2 = 1.0;        // R-D distance
    double tau = 3.0;       // path-loss exponent, >= 2
    double eta = 1.0;       // energy conversion efficiency, (0, 1]
    double alpha = 0.5;     // energy-harvesting time fraction, (0, 1)
    double sigma2_li = 0.0; // variance of each loopback-channel entry
    double gamma_th = 1.0;  // SINR threshold (linear)
    double r_c = 1.0;       // target rate, bit/s/Hz

    // Throws DomainError naming the first violated range constraint.
    void validate() const;

    double kappa() const { return eta * alpha / (1.0 - alpha); }
    double rho1() const { return p_s; }
    double path_loss1() const; // d1^τ
    double path_loss2() const; // d2^τ

    bool operator==(const SystemParams &) const = default;
};

// One joint draw of the three channels. h_rr(i, j) couples transmit antenna j
// into receive antenna i.
struct ChannelRealization
{
    CVector h_sr;    // M_R x 1
    CRowVector h_rd; // 1 x M_T
    CMatrix h_rr;    // M_R x M_T

    int m_r() const { return static_cast<int>(h_sr.size()); }
    int m_t() const { return static_cast<int>(h_rd.size()); }

    // Throws DimensionError unless h_rr is m_r x m_t and every entry is finite.
    void validate() const;
};

// Rayleigh block fading: h_sr, h_rd entries CN(0,1) (real and imaginary parts
// N(0, 1/2)), h_rr entries CN(0, sigma2_li). Draw order is h_sr, h_rd, then
// h_rr in row-major order, real part before imaginary part.
ChannelRealization sample_channel(const SystemParams &params, RandomStream &rng);

// Realization of Monte Carlo trial `trial` under `seed`.
ChannelRealization sample_channel(const SystemParams &params, std::uint64_t seed, std::uint64_t trial);

// Harvested relay transmit power P_r = κ P_S ‖h_sr‖² / d1^τ.
double relay_power(const SystemParams &params, const ChannelRealization &ch);

} // namespace fdrelay
