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


#include "fdrelay/expcli/table.hpp"

#include "fdrelay/error.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

namespace fdrelay::expcli
{

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw DimensionError("Table::add_row: row width differs from the column count");
    rows.push_back(std::move(row));
}

std::string format_cell(const Cell &cell)
{
    if (const double *v = std::get_if<double>(&cell))
    {
        if (std::isnan(*v))
            return "nan";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", *v);
        return buf;
    }
    if (const std::string *s = std::get_if<std::string>(&cell))
        return *s;
    return "";
}

namespace
{

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const Table &table)
{
    std::string out;
    for (const auto &[key, value] : table.meta)
        out += "# " + key + ": " + value + "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out += (i ? "," : "") + csv_field(table.columns[i]);
    out += "\n";
    for (const auto &row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ",";
            out += csv_field(format_cell(row[i]));
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Table &table)
{
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto &[key, value] : table.meta)
        meta[key] = value;
    j["meta"] = meta;
    j["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows)
    {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Cell &c : row)
        {
            if (const double *v = std::get_if<double>(&c))
                r.push_back(std::isfinite(*v) ? nlohmann::ordered_json(*v) : nlohmann::ordered_json());
            else if (const std::string *s = std::get_if<std::string>(&c))
                r.push_back(*s);
            else
                r.push_back(nullptr);
        }
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

void write_text(const std::filesystem::path &path, const std::string &text)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ConfigError("cannot write '" + path.string() + "'");
    out << text;
    if (!out)
        throw ConfigError("write failed for '" + path.string() + "'");
}

} // namespace fdrelay::expcli
