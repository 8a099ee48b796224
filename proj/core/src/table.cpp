// SPDX-License-Identifier: Apache-2.0
//
// risplan - RIS coverage planning and link-budget toolkit for mobile networks
// Copyright (C) 2026 The risplan authors
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

#include "risplan/table.hpp"
#include "risplan/errors.hpp"

#include <cstdio>
#include <fstream>

namespace risplan
{

std::string format_number(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string to_csv(const Table &table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
    {
        if (i)
            out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto &row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const Table &table, const std::filesystem::path &path)
{
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open for writing: " + path.string());
    out << to_csv(table);
    if (!out)
        throw io_error("failed writing: " + path.string());
}

} // namespace risplan
