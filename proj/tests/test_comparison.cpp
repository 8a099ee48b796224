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

#include "risplan/comparison.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace risplan;

namespace
{

ComparisonSetup setup_at(double frequency_hz)
{
    ComparisonSetup setup;
    setup.params = LinkModelParams::for_frequency(frequency_hz);
    return setup;
}

} // namespace

TEST_CASE("node geometry")
{
    const ComparisonSetup setup = setup_at(6.0e9);
    CHECK(node_geometry(setup, 80.0).d_node_ue_m == Catch::Approx(10.0).epsilon(1e-14));
    CHECK(node_geometry(setup, 1e-9).d_bs_ue_m == Catch::Approx(10.0).epsilon(1e-6));
    const NodeGeometry g = node_geometry(setup, 40.0);
    CHECK(g.d_bs_ue_m == Catch::Approx(std::sqrt(40.0 * 40.0 + 100.0)).epsilon(1e-14));
    CHECK(g.d_node_ue_m == Catch::Approx(std::sqrt(40.0 * 40.0 + 100.0)).epsilon(1e-14));
    CHECK_THROWS_AS(node_geometry(setup, 0.0), std::domain_error);
}

TEST_CASE("siso minimum power")
{
    ComparisonSetup setup = setup_at(6.0e9);

    // Direct evaluation of (2^R - 1) sigma^2 / beta_d at d1 = 80 is the
    // oracle; the literal is frozen from it.
    const double d = std::hypot(80.0, 10.0);
    const double pl = 22.4 + 35.3 * std::log10(d) + 21.3 * std::log10(6.0);
    const double beta = std::pow(10.0, -pl / 10.0);
    const double sigma2 = 1e-3 * std::pow(10.0, -94.0 / 10.0);
    const double oracle = 15.0 * sigma2 / beta;
    CHECK(min_power_siso_w(setup, 80.0) == Catch::Approx(oracle).epsilon(1e-12));
    CHECK(min_power_siso_w(setup, 80.0) == Catch::Approx(0.253131094436).epsilon(1e-9));

    // Vanishing rate needs vanishing power.
    setup.params.rate_bps_per_hz = 1e-9;
    CHECK(min_power_siso_w(setup, 80.0) < 1e-9);
    setup.params.rate_bps_per_hz = 4.0;

    // Strictly increasing over the sweep.
    double prev = 0.0;
    for (double d1 = 20.0; d1 <= 100.0; d1 += 1.0)
    {
        const double p = min_power_siso_w(setup, d1);
        CHECK(p > prev);
        prev = p;
    }
}

TEST_CASE("ris minimum power")
{
    const ComparisonSetup setup = setup_at(6.0e9);

    // Zero elements degenerate to SISO.
    for (const double d1 : {20.0, 55.0, 80.0, 120.0})
        CHECK(min_power_ris_w(setup, d1, 0) ==
              Catch::Approx(min_power_siso_w(setup, d1)).epsilon(1e-14));

    // Pointwise ordering and monotonicity in the element count.
    for (double d1 = 20.0; d1 <= 120.0; d1 += 1.0)
    {
        const double siso = min_power_siso_w(setup, d1);
        const double ris25 = min_power_ris_w(setup, d1, 25);
        const double ris250 = min_power_ris_w(setup, d1, 250);
        CHECK(ris250 < ris25);
        CHECK(ris25 < siso);
    }

    // Non-increasing in the element count.
    for (const double d1 : {25.0, 80.0, 110.0})
    {
        double prev = min_power_ris_w(setup, d1, 0);
        for (const std::int64_t n : {1, 5, 25, 100, 250, 1000, 5000})
        {
            const double p = min_power_ris_w(setup, d1, n);
            CHECK(p <= prev);
            prev = p;
        }
    }

    // Continuous in d1: small steps move the power by a small factor.
    for (double d1 = 20.0; d1 < 120.0; d1 += 0.5)
    {
        const double a = min_power_ris_w(setup, d1, 250);
        const double b = min_power_ris_w(setup, d1 + 1e-6, 250);
        CHECK(std::abs(b - a) < 1e-3 * a);
    }

    // The RIS pays off most with the UE near the surface: the power
    // advantage over SISO peaks within a few meters of the RIS abscissa.
    double best_gain = 0.0;
    double best_d1 = 0.0;
    for (double d1 = 20.0; d1 <= 120.0; d1 += 1.0)
    {
        const double advantage = min_power_siso_w(setup, d1) / min_power_ris_w(setup, d1, 250);
        if (advantage > best_gain)
        {
            best_gain = advantage;
            best_d1 = d1;
        }
    }
    CHECK(std::abs(best_d1 - setup.bs_node_distance_m) <= 5.0);
    CHECK(best_gain > 1.0);

    CHECK_THROWS_AS(min_power_ris_w(setup, 40.0, -1), std::domain_error);
}

TEST_CASE("relay minimum power")
{
    const ComparisonSetup setup = setup_at(6.0e9);

    // Near the BS the direct NLOS channel already beats the first hop, so
    // the second phase needs no power.
    {
        const NodeGeometry g = node_geometry(setup, 20.0);
        const double beta_d = umi_path_gain(6.0e9, g.d_bs_ue_m, false);
        const double beta_t = umi_path_gain(6.0e9, 80.0, true);
        const double snr = std::exp2(8.0) - 1.0;
        const double sigma2 = noise_power_w(setup.params);
        const double p1 = snr * sigma2 / beta_t;
        REQUIRE(p1 * beta_d > snr * sigma2); // direct path carries hop two
        CHECK(min_power_relay_w(setup, 20.0) == Catch::Approx(0.5 * p1).epsilon(1e-12));
    }

    // Flatter than SISO over the sweep.
    double relay_min = 1e30, relay_max = 0.0, siso_min = 1e30, siso_max = 0.0;
    for (double d1 = 20.0; d1 <= 120.0; d1 += 1.0)
    {
        const double r = min_power_relay_w(setup, d1);
        const double s = min_power_siso_w(setup, d1);
        relay_min = std::min(relay_min, r);
        relay_max = std::max(relay_max, r);
        siso_min = std::min(siso_min, s);
        siso_max = std::max(siso_max, s);
    }
    CHECK(relay_max / relay_min < siso_max / siso_min);
}

TEST_CASE("relay undercuts the large RIS at 27 GHz over most of the sweep")
{
    const ComparisonSetup setup = setup_at(27.0e9);
    int relay_wins = 0, total = 0;
    for (double d1 = 20.0; d1 <= 120.0; d1 += 1.0)
    {
        ++total;
        if (min_power_relay_w(setup, d1) < min_power_ris_w(setup, d1, 250))
            ++relay_wins;
    }
    CHECK(static_cast<double>(relay_wins) / total >= 0.5);
}

TEST_CASE("every model reproduces its target rate")
{
    for (const double f : {6.0e9, 27.0e9})
    {
        const ComparisonSetup setup = setup_at(f);
        const double sigma2 = noise_power_w(setup.params);
        for (double d1 = 20.0; d1 <= 120.0; d1 += 10.0)
        {
            const NodeGeometry g = node_geometry(setup, d1);
            const double beta_d = umi_path_gain(f, g.d_bs_ue_m, false);
            const double beta_t = umi_path_gain(f, setup.bs_node_distance_m, true);
            const double beta_r = umi_path_gain(f, g.d_node_ue_m, true);

            const double r_siso =
                std::log2(1.0 + min_power_siso_w(setup, d1) * beta_d / sigma2);
            CHECK(r_siso == Catch::Approx(4.0).epsilon(1e-9));

            const double amp = std::sqrt(beta_d) + 250.0 * std::sqrt(beta_t * beta_r);
            const double r_ris =
                std::log2(1.0 + min_power_ris_w(setup, d1, 250) * amp * amp / sigma2);
            CHECK(r_ris == Catch::Approx(4.0).epsilon(1e-9));

            const double total = 2.0 * min_power_relay_w(setup, d1);
            const double snr_target = std::exp2(8.0) - 1.0;
            const double p1 = snr_target * sigma2 / beta_t;
            const double p2 = total - p1;
            const double hop2 = std::min(p1 * beta_t, p1 * beta_d + p2 * beta_r);
            const double r_relay = 0.5 * std::log2(1.0 + hop2 / sigma2);
            CHECK(r_relay == Catch::Approx(4.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("powers scale linearly in the noise level")
{
    ComparisonSetup loud = setup_at(6.0e9);
    loud.params.noise_figure_db += 10.0 * std::log10(2.0); // double sigma^2
    const ComparisonSetup quiet = setup_at(6.0e9);
    for (const double d1 : {25.0, 60.0, 95.0})
    {
        CHECK(min_power_siso_w(loud, d1) ==
              Catch::Approx(2.0 * min_power_siso_w(quiet, d1)).epsilon(1e-12));
        CHECK(min_power_ris_w(loud, d1, 250) ==
              Catch::Approx(2.0 * min_power_ris_w(quiet, d1, 250)).epsilon(1e-12));
        CHECK(min_power_relay_w(loud, d1) ==
              Catch::Approx(2.0 * min_power_relay_w(quiet, d1)).epsilon(1e-12));
    }
}

TEST_CASE("energy efficiency")
{
    CHECK(energy_efficiency(4.0, 10.0e6, 1.0, 0.0) == Catch::Approx(4.0e7).epsilon(1e-14));
    CHECK(energy_efficiency(4.0, 10.0e6, 0.5, 0.0) ==
          Catch::Approx(2.0 * energy_efficiency(4.0, 10.0e6, 1.0, 0.0)).epsilon(1e-14));
    // Ordering reverses the power ordering.
    CHECK(energy_efficiency(4.0, 10.0e6, 0.2, 0.1) > energy_efficiency(4.0, 10.0e6, 0.5, 0.1));
    CHECK_THROWS_AS(energy_efficiency(4.0, 10.0e6, 0.0, 0.0), std::domain_error);
}

TEST_CASE("power sweep tables")
{
    ComparisonSetup setup = setup_at(6.0e9);
    setup.d1_range = {20.0, 120.0, 5.0};

    const Table table = power_sweep(setup, {25, 250});
    CHECK(table.columns == std::vector<std::string>{"d1_m", "p_siso_w", "p_relay_w",
                                                    "p_ris_n25_w", "p_ris_n250_w"});
    REQUIRE(table.rows.size() == 21);

    // Row-wise dominance of the 27 GHz sweep.
    ComparisonSetup high = setup_at(27.0e9);
    high.d1_range = setup.d1_range;
    const Table table27 = power_sweep(high, {25, 250});
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        for (std::size_t c = 1; c < table.columns.size(); ++c)
            CHECK(table27.rows[r][c] > table.rows[r][c]);

    // Energy-efficiency columns mirror the power columns.
    const Table with_ee = power_sweep(setup, {25}, true, 0.0);
    CHECK(with_ee.columns.size() == 7);
    CHECK(with_ee.columns[4] == "ee_siso_bpj");
    for (const auto &row : with_ee.rows)
        CHECK(row[4] == Catch::Approx(4.0 * 10.0e6 / row[1]).epsilon(1e-12));

    // Empty sweep: header only.
    ComparisonSetup empty = setup_at(6.0e9);
    empty.d1_range = {20.0, 10.0, 1.0};
    CHECK(power_sweep(empty, {25}).rows.empty());
    CHECK(power_sweep(empty, {}).columns.size() == 3);
}
