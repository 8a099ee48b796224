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

#pragma once

#include "risplan/placement.hpp"

#include <filesystem>
#include <string>

namespace risplan
{

/// Stable text name of a coverage label ("uncovered", "bs_los", "ris_<k>").
std::string label_name(int label);

/// Gray level of a coverage label in the PGM heatmap.
int label_gray(int label);

/// CSV with columns x, y, label; one row per grid sample.
std::string coverage_to_csv(const CoverageGrid &coverage);
void write_coverage_csv(const CoverageGrid &coverage, const std::filesystem::path &path);

/// Plain P2 (ASCII PGM) heatmap; the label-to-gray mapping is listed in the
/// header comments. Rows run from ymax down to ymin.
std::string coverage_to_pgm(const CoverageGrid &coverage);
void write_coverage_pgm(const CoverageGrid &coverage, const std::filesystem::path &path);

/// JSON document with one entry per placement (candidate_index, position,
/// orientation_deg, newly_covered_count, raw_visible_count).
std::string plan_to_json(const PlacementPlan &plan);
void write_plan_json(const PlacementPlan &plan, const std::filesystem::path &path);

/// Human-readable coverage summary.
std::string summary_text(const PlacementPlan &plan, const CoverageSummary &summary);
void write_summary_text(const PlacementPlan &plan, const CoverageSummary &summary,
                        const std::filesystem::path &path);

/// Write text to a file, throwing io_error on failure.
void write_text_file(const std::string &content, const std::filesystem::path &path);

} // namespace risplan
