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

#include "fdrelay/expcli/config.hpp"
#include "fdrelay/expcli/table.hpp"

#include <string>
#include <vector>

namespace fdrelay::expcli
{

// Rows ordered by scheme, then sweep point, then output kind. Columns:
// scheme, output, rho1_db, gamma_th, alpha, m_r, m_t, p_out, std_err,
// analytic, asymptotic, status. status is `ok`, `infeasible` (scheme cannot
// serve the antenna counts) or `not_applicable` (no closed form). The
// analytic and asymptotic columns are filled on every row that has one.
Table run_outage_sweep(const ExperimentConfig &cfg);

// Needs an Alpha sweep. Per scheme (HD appended when absent): one `grid` row
// per α point, then one `summary` row with (α*, R(α*)). Columns: scheme,
// kind, alpha, gamma_th, p_out, std_err, throughput, status.
Table run_throughput_sweep(const ExperimentConfig &cfg);

// Passes when |measured - expected| <= bound, unless the check states a
// different rule in `detail`.
struct Check
{
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::string detail;
};

struct ValidationReport
{
    std::vector<Check> checks;

    bool all_passed() const;
    Table to_table() const;
};

// End-to-end invariant suite around cfg.params (antenna counts, SNR and α
// are set per check): Monte Carlo versus every closed-form CDF over
// M_R, M_T in 1..3 and ρ1 in {0, 10, 20, 30} dB; exact versus asymptotic
// outage at 40 dB; diversity slopes between 35 and 45 dB; the exponent
// resolution of the M_T = 1 MRC/MRT integral (`eq23_exponent_resolution`);
// ZF residuals; the MRC/MRT floor and low-SNR ordering.
ValidationReport run_validation(const ExperimentConfig &cfg);

// Header block shared by every output table.
void stamp(Table &table, const ExperimentConfig &cfg, const std::string &command);

std::string tool_version();

} // namespace fdrelay::expcli
