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

#include "risplan/report.hpp"
#include "risplan/errors.hpp"
#include "risplan/table.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>

namespace risplan
{

std::string label_name(int label)
{
    if (label == kLabelUncovered)
        return "uncovered";
    if (label == kLabelBsLos)
        return "bs_los";
    return "ris_" + std::to_string(label - kLabelBsLos);
}

int label_gray(int label)
{
    if (label == kLabelUncovered)
        return 0;
    if (label == kLabelBsLos)
        return 255;
    const int k = label - kLabelBsLos; // 1-based RIS ordinal
    return 220 - 30 * ((k - 1) % 6);
}

std::string coverage_to_csv(const CoverageGrid &coverage)
{
    std::string out = "x,y,label\n";
    for (int i = 0; i < coverage.grid.size(); ++i)
    {
        const Point3 p = coverage.grid.point(i);
        out += format_number(p.x);
        out += ',';
        out += format_number(p.y);
        out += ',';
        out += label_name(coverage.labels[static_cast<std::size_t>(i)]);
        out += '\n';
    }
    return out;
}

std::string coverage_to_pgm(const CoverageGrid &coverage)
{
    const int nx = coverage.grid.nx();
    const int ny = coverage.grid.ny();

    std::set<int> present(coverage.labels.begin(), coverage.labels.end());
    std::string out = "P2\n";
    out += "# coverage map; gray value per label:\n";
    for (const int label : present)
        out += "#   " + std::to_string(label_gray(label)) + " = " + label_name(label) + "\n";
    out += std::to_string(nx) + " " + std::to_string(ny) + "\n255\n";

    // Image convention: first raster row is the northernmost (ymax) row.
    for (int iy = ny - 1; iy >= 0; --iy)
    {
        for (int ix = 0; ix < nx; ++ix)
        {
            if (ix)
                out += ' ';
            out += std::to_string(
                label_gray(coverage.labels[static_cast<std::size_t>(iy * nx + ix)]));
        }
        out += '\n';
    }
    return out;
}

std::string plan_to_json(const PlacementPlan &plan)
{
    nlohmann::json doc;
    doc["requested_count"] = plan.requested_count;
    doc["truncated"] = plan.truncated;
    doc["placements"] = nlohmann::json::array();
    for (const RisPlacement &p : plan.placements)
    {
        nlohmann::json entry;
        entry["candidate_index"] = p.candidate_index;
        entry["position"] = {{"x", p.position.x}, {"y", p.position.y}, {"z", p.position.z}};
        entry["orientation_deg"] = p.orientation_deg;
        entry["newly_covered_count"] = p.newly_covered_count;
        entry["raw_visible_count"] = p.raw_visible_count;
        doc["placements"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string summary_text(const PlacementPlan &plan, const CoverageSummary &summary)
{
    const auto fraction = [&](int count) {
        return summary.total_points > 0
                   ? format_number(static_cast<double>(count) / summary.total_points)
                   : std::string("0");
    };

    std::string out;
    out += "grid points: " + std::to_string(summary.total_points) + "\n";
    out += "bs covered: " + std::to_string(summary.bs_covered) + " (" +
           fraction(summary.bs_covered) + ")\n";
    for (std::size_t k = 0; k < plan.placements.size(); ++k)
    {
        const RisPlacement &p = plan.placements[k];
        out += "ris " + std::to_string(k + 1) + ": candidate " +
               std::to_string(p.candidate_index) + ", orientation " +
               format_number(p.orientation_deg) + " deg, newly covered " +
               std::to_string(summary.ris_newly_covered[k]) + " (los-visible " +
               std::to_string(p.raw_visible_count) + ")\n";
    }
    out += "uncovered: " + std::to_string(summary.uncovered) + " (" +
           fraction(summary.uncovered) + ")\n";
    return out;
}

void write_text_file(const std::string &content, const std::filesystem::path &path)
{
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open for writing: " + path.string());
    out << content;
    if (!out)
        throw io_error("failed writing: " + path.string());
}

void write_coverage_csv(const CoverageGrid &coverage, const std::filesystem::path &path)
{
    write_text_file(coverage_to_csv(coverage), path);
}

void write_coverage_pgm(const CoverageGrid &coverage, const std::filesystem::path &path)
{
    write_text_file(coverage_to_pgm(coverage), path);
}

void write_plan_json(const PlacementPlan &plan, const std::filesystem::path &path)
{
    write_text_file(plan_to_json(plan), path);
}

void write_summary_text(const PlacementPlan &plan, const CoverageSummary &summary,
                        const std::filesystem::path &path)
{
    write_text_file(summary_text(plan, summary), path);
}

} // namespace risplan
