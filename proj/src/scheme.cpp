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

#include "fdrelay/scheme.hpp"

namespace fdrelay
{

std::string_view to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::Optimal:
        return "optimal";
    case Scheme::TZF:
        return "tzf";
    case Scheme::RZF:
        return "rzf";
    case Scheme::MrcMrt:
        return "mrc_mrt";
    case Scheme::HalfDuplex:
        return "hd";
    }
    return "unknown";
}

std::optional<Scheme> scheme_from_string(std::string_view name)
{
    for (Scheme s : all_schemes)
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

bool is_feasible(Scheme s, int m_r, int m_t)
{
    if (m_r < 1 || m_t < 1)
        return false;
    switch (s)
    {
    case Scheme::TZF:
        return m_t > 1;
    case Scheme::RZF:
        return m_r > 1;
    default:
        return true;
    }
}

} // namespace fdrelay
