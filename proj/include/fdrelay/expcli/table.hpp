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

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fdrelay::expcli
{

// Empty, numeric or text cell.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table
{
    std::vector<std::pair<std::string, std::string>> meta; // `# key: value` header lines
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row); // throws DimensionError on a width mismatch
};

// Numbers are written with 12 significant digits so reruns are byte-identical.
std::string format_cell(const Cell &cell);

std::string to_csv(const Table &table);
std::string to_json(const Table &table);

void write_text(const std::filesystem::path &path, const std::string &text);

} // namespace fdrelay::expcli
