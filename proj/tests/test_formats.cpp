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

#include "risplan/errors.hpp"
#include "risplan/report.hpp"
#include "risplan/table.hpp"

#include "support/test_scenes.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace risplan;

namespace
{

// Minimal reference P2 reader: tokens with '#' comment lines skipped.
struct Pgm
{
    int width = 0;
    int height = 0;
    int maxval = 0;
    std::vector<int> values;
};

Pgm parse_pgm(const std::string &text)
{
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line))
    {
        if (!line.empty() && line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
    }
    REQUIRE(tokens.size() >= 4);
    REQUIRE(tokens[0] == "P2");
    Pgm pgm;
    pgm.width = std::stoi(tokens[1]);
    pgm.height = std::stoi(tokens[2]);
    pgm.maxval = std::stoi(tokens[3]);
    for (std::size_t i = 4; i < tokens.size(); ++i)
        pgm.values.push_back(std::stoi(tokens[i]));
    return pgm;
}

std::string slurp(const std::filesystem::path &path)
{
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("number formatting is fixed at six significant digits")
{
    CHECK(format_number(88.004563) == "88.0046");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1234567.0) == "1.23457e+06");
    CHECK(format_number(-0.25313109) == "-0.253131");
}

TEST_CASE("csv serialization")
{
    Table table;
    table.columns = {"distance_m", "pl_los_db"};
    table.rows = {{10.0, 68.0045678}, {20.0, 74.02}};
    const std::string csv = to_csv(table);
    CHECK(csv == "distance_m,pl_los_db\n10,68.0046\n20,74.02\n");

    const auto path = std::filesystem::temp_directory_path() / "risplan_table_test.csv";
    write_csv(table, path);
    CHECK(slurp(path) == csv);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(write_csv(table, "/nonexistent-dir/x.csv"), io_error);
}

TEST_CASE("coverage outputs")
{
    std::mt19937 rng(6401);
    const Scene scene = risplan_test::random_scene(rng, {.max_buildings = 6, .candidates = 2});
    const PlacementPlan plan = greedy_place(scene, 2);
    const CoverageReport report = coverage_report(scene, plan);

    SECTION("csv has one labelled row per sample")
    {
        const std::string csv = coverage_to_csv(report.grid);
        std::istringstream in(csv);
        std::string line;
        REQUIRE(std::getline(in, line));
        CHECK(line == "x,y,label");
        int rows = 0, bs_rows = 0;
        while (std::getline(in, line))
        {
            ++rows;
            if (line.find("bs_los") != std::string::npos)
                ++bs_rows;
        }
        CHECK(rows == scene.grid.size());
        CHECK(bs_rows == report.summary.bs_covered);
    }

    SECTION("pgm parses with a reference reader")
    {
        const Pgm pgm = parse_pgm(coverage_to_pgm(report.grid));
        CHECK(pgm.width == scene.grid.nx());
        CHECK(pgm.height == scene.grid.ny());
        CHECK(pgm.maxval == 255);
        REQUIRE(static_cast<int>(pgm.values.size()) == scene.grid.size());

        // Top raster row is the ymax grid row.
        const int nx = scene.grid.nx();
        const int ny = scene.grid.ny();
        for (int ix = 0; ix < nx; ++ix)
            CHECK(pgm.values[static_cast<std::size_t>(ix)] ==
                  label_gray(report.grid.labels[static_cast<std::size_t>((ny - 1) * nx + ix)]));

        for (const int v : pgm.values)
            CHECK((v == 0 || v == 255 || (v >= 70 && v <= 220)));
    }

    SECTION("plan json carries every placement field")
    {
        const std::string json = plan_to_json(plan);
        CHECK(json.find("\"candidate_index\"") != std::string::npos);
        CHECK(json.find("\"orientation_deg\"") != std::string::npos);
        CHECK(json.find("\"newly_covered_count\"") != std::string::npos);
        CHECK(json.find("\"raw_visible_count\"") != std::string::npos);
        CHECK(json.find("\"position\"") != std::string::npos);
        CHECK(json.back() == '\n');
    }

    SECTION("summary text tallies the report")
    {
        const std::string text = summary_text(plan, report.summary);
        CHECK(text.find("grid points: " + std::to_string(scene.grid.size())) !=
              std::string::npos);
        CHECK(text.find("bs covered: " + std::to_string(report.summary.bs_covered)) !=
              std::string::npos);
        CHECK(text.find("uncovered: " + std::to_string(report.summary.uncovered)) !=
              std::string::npos);
    }

    SECTION("serialization is reproducible")
    {
        const PlacementPlan again = greedy_place(scene, 2);
        CHECK(plan_to_json(plan) == plan_to_json(again));
        CHECK(coverage_to_csv(report.grid) ==
              coverage_to_csv(coverage_report(scene, again).grid));
        CHECK(coverage_to_pgm(report.grid) ==
              coverage_to_pgm(coverage_report(scene, again).grid));
    }
}

TEST_CASE("label names and grays")
{
    CHECK(label_name(kLabelUncovered) == "uncovered");
    CHECK(label_name(kLabelBsLos) == "bs_los");
    CHECK(label_name(label_for_ris(1)) == "ris_1");
    CHECK(label_name(label_for_ris(3)) == "ris_3");
    CHECK(label_gray(kLabelUncovered) == 0);
    CHECK(label_gray(kLabelBsLos) == 255);
    CHECK(label_gray(label_for_ris(1)) == 220);
    CHECK(label_gray(label_for_ris(2)) == 190);
}
