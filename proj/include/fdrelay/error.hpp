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

#include <stdexcept>
#include <string>

namespace fdrelay
{

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Iterative method gave up; the best estimate obtained so far is attached.
class ConvergenceError : public std::runtime_error
{
public:
    ConvergenceError(const std::string &what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

// Scheme cannot be formed with the given antenna configuration (e.g. TZF with M_T = 1).
class InfeasibleSchemeError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A channel vector needed for normalization has (numerically) zero norm.
class DegenerateChannelError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Closed-form case used outside the antenna configuration it was derived for.
class WrongCaseError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// No analytical characterization exists for the requested scheme.
class NotCharacterizedError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace fdrelay
