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

#include <array>
#include <optional>
#include <string_view>

namespace fdrelay
{

enum class Scheme
{
    Optimal,
    TZF,
    RZF,
    MrcMrt,
    HalfDuplex,
};

inline constexpr std::array<Scheme, 5> all_schemes = {
    Scheme::Optimal, Scheme::TZF, Scheme::RZF, Scheme::MrcMrt, Scheme::HalfDuplex};

// Config/CSV spelling: optimal, tzf, rzf, mrc_mrt, hd.
std::string_view to_string(Scheme s);
std::optional<Scheme> scheme_from_string(std::string_view name);

// Antenna preconditions: TZF needs M_T > 1, RZF needs M_R > 1.
bool is_feasible(Scheme s, int m_r, int m_t);

inline bool is_full_duplex(Scheme s) { return s != Scheme::HalfDuplex; }

} // namespace fdrelay
