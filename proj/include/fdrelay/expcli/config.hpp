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
#include "fdrelay/precoding.hpp"
#include "fdrelay/scheme.hpp"
#include "fdrelay/simkit.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fdrelay::expcli
{

enum class OutputKind
{
    MonteCarlo,
    Analytic,
    Asymptotic,
};

std::string_view to_string(OutputKind kind);

enum class SweepKind
{
    SnrDb,       // ρ1 in dB; p_s follows
    Alpha,       // open uniform α grid
    ThresholdDb, // γ_th in dB
};

std::string_view to_string(SweepKind kind);

struct Sweep
{
    SweepKind kind = SweepKind::SnrDb;
    std::vector<double> values; // SnrDb / ThresholdDb points
    int alpha_grid = 33;        // Alpha: α_i = i/(alpha_grid+1)
    int alpha_refine = 20;      // Alpha: golden-section iterations for α*

    // Points of the sweep in order (the α grid for Alpha).
    std::vector<double> points() const;

    bool operator==(const Sweep &) const = default;
};

struct ExperimentConfig
{
    SystemParams params;
    std::vector<Scheme> schemes;
    Sweep sweep;
    std::uint64_t n_trials = 100000;
    std::uint64_t n_trials_optimal = 10000; // each optimal-scheme trial runs an inner search
    std::uint64_t seed = 1;
    int threads = 1;
    std::vector<OutputKind> outputs{OutputKind::MonteCarlo};
    std::string output_path = "fdrelay_out.csv";
    bool json_mirror = false; // also write <output_path stem>.json
    simkit::ThresholdMode threshold_mode = simkit::ThresholdMode::Fixed;
    precoding::OptimalSearchSpec search{};

    // Throws ConfigError on an empty scheme/output list, empty sweep or
    // invalid parameters.
    void validate() const;

    std::uint64_t trials_for(Scheme s) const { return s == Scheme::Optimal ? n_trials_optimal : n_trials; }

    bool operator==(const ExperimentConfig &) const;
};

// JSON config. Physical quantities may be given in dB through `_db`-suffixed
// keys (p_s_db, gamma_th_db); the plain keys are linear. Unknown keys are
// rejected. Throws ConfigError with the offending key in the message.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path &path);

// Canonical form (linear units, every field present); parse_config inverts it.
std::string serialize_config(const ExperimentConfig &cfg);

// FNV-1a of the canonical form, as 16 hex digits. Output path, JSON mirror
// and thread count are left out: they do not change any result.
std::string config_hash(const ExperimentConfig &cfg);

double db_to_linear(double db);
double linear_to_db(double linear);

} // namespace fdrelay::expcli
