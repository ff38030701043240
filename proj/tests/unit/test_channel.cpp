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

#include "fdrelay/channel.hpp"
#include "fdrelay/error.hpp"
#include "oracles/stats.hpp"

#include <cmath>

using namespace fdrelay;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("zero loopback variance gives an exactly zero LI channel", "[channel]")
{
    SystemParams p;
    p.m_r = 3;
    p.m_t = 2;
    p.sigma2_li = 0.0;
    for (std::uint64_t t = 0; t < 50; ++t)
        CHECK(sample_channel(p, 7, t).h_rr.isZero(0.0));
}

TEST_CASE("same seed and trial reproduce the realization bit for bit", "[channel]")
{
    SystemParams p;
    p.m_r = 2;
    p.m_t = 3;
    p.sigma2_li = 0.4;
    const auto a = sample_channel(p, 11, 123456);
    const auto b = sample_channel(p, 11, 123456);
    CHECK(a.h_sr == b.h_sr);
    CHECK(a.h_rd == b.h_rd);
    CHECK(a.h_rr == b.h_rr);
    CHECK(sample_channel(p, 11, 123457).h_sr != a.h_sr);
    CHECK(sample_channel(p, 12, 123456).h_sr != a.h_sr);
}

TEST_CASE("mean channel energy is M_R", "[channel]")
{
    SystemParams p;
    p.m_r = 3;
    const int n = 1'000'000;
    double s = 0.0, s2 = 0.0;
    for (int t = 0; t < n; ++t)
    {
        const double e = sample_channel(p, 5, t).h_sr.squaredNorm();
        s += e;
        s2 += e * e;
    }
    const double mean = s / n, se = std::sqrt((s2 / n - mean * mean) / n);
    CHECK(std::abs(mean - 3.0) <= 3.0 * se);
}

TEST_CASE("channel energy fits Gamma(M_R, 1)", "[channel]")
{
    for (int m_r : {1, 2, 4})
    {
        SystemParams p;
        p.m_r = m_r;
        const std::size_t n = 100'000;
        std::vector<double> x(n);
        for (std::size_t t = 0; t < n; ++t)
            x[t] = sample_channel(p, 9, t).h_sr.squaredNorm();
        const double d = oracles::ks_statistic(x, [&](double v) { return oracles::gamma_cdf(m_r, v); });
        CHECK(d < oracles::ks_critical_1pct(n));
    }
}

TEST_CASE("loopback entries carry the configured variance", "[channel]")
{
    SystemParams p;
    p.m_r = 2;
    p.m_t = 2;
    p.sigma2_li = 0.3;
    const int n = 200'000;
    double s = 0.0;
    for (int t = 0; t < n; ++t)
        s += sample_channel(p, 3, t).h_rr.squaredNorm();
    CHECK_THAT(s / (4.0 * n), WithinRel(0.3, 0.01));
}

TEST_CASE("relay power", "[channel]")
{
    ChannelRealization ch;
    ch.h_sr = CVector::Zero(2);
    ch.h_sr(0) = std::sqrt(2.0);
    ch.h_rd = CRowVector::Ones(1);
    ch.h_rr = CMatrix::Zero(2, 1);

    SystemParams p;
    p.m_r = 2;
    p.eta = 1.0;
    p.alpha = 0.5;
    p.p_s = 10.0;
    CHECK_THAT(relay_power(p, ch), WithinRel(20.0, 1e-15));

    SystemParams q = p;
    q.p_s = 20.0;
    CHECK(relay_power(q, ch) == 2.0 * relay_power(p, ch));
    ChannelRealization ch2 = ch;
    ch2.h_sr *= std::sqrt(2.0);
    CHECK_THAT(relay_power(p, ch2), WithinRel(2.0 * relay_power(p, ch), 1e-15));

    ch.h_sr.setZero();
    CHECK(relay_power(p, ch) == 0.0);

    ChannelRealization one;
    one.h_sr = CVector::Ones(1);
    one.h_rd = CRowVector::Ones(1);
    one.h_rr = CMatrix::Zero(1, 1);
    SystemParams r;
    r.alpha = 0.75;
    r.p_s = 1.0;
    CHECK_THAT(relay_power(r, one), WithinRel(3.0, 1e-14));
}

TEST_CASE("parameter and realization validation", "[channel]")
{
    SystemParams p;
    CHECK_NOTHROW(p.validate());
    auto bad = [](auto mutate) {
        SystemParams q;
        mutate(q);
        return q;
    };
    CHECK_THROWS_AS(bad([](SystemParams &q) { q.m_r = 0; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](SystemParams &q) { q.tau = 1.5; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](SystemParams &q) { q.eta = 0.0; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](SystemParams &q) { q.eta = 1.1; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](SystemParams &q) { q.alpha = 1.0; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](SystemParams &q) { q.sigma2_li = -1.0; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](SystemParams &q) { q.gamma_th = 0.0; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](SystemParams &q) { q.d2 = 0.0; }).validate(), DomainError);
    CHECK_THAT(bad([](SystemParams &q) { q.alpha = 0.6; q.eta = 0.5; }).kappa(), WithinRel(0.75, 1e-15));

    ChannelRealization ch;
    ch.h_sr = CVector::Ones(2);
    ch.h_rd = CRowVector::Ones(3);
    ch.h_rr = CMatrix::Zero(3, 2);
    CHECK_THROWS_AS(ch.validate(), DimensionError);
    ch.h_rr = CMatrix::Zero(2, 3);
    CHECK_NOTHROW(ch.validate());
    ch.h_sr(0) = std::nan("");
    CHECK_THROWS_AS(ch.validate(), DimensionError);
}
