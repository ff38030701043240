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
#include <vector>

namespace fdrelay::oracles
{

// One-sample Kolmogorov-Smirnov statistic D_n = sup |F_n - F|.
double ks_statistic(std::vector<double> samples, const std::function<double(double)> &cdf);

// Asymptotic critical value of D_n at the 1% level, 1.6276/sqrt(n).
double ks_critical_1pct(std::size_t n);

// Reference distribution CDFs backed by Boost.Math.
double gamma_cdf(double shape, double x);
double beta_cdf(double a, double b, double x);

} // namespace fdrelay::oracles
