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

#include <cmath>
#include <stdexcept>

namespace risplan
{

NodeGeometry node_geometry(const ComparisonSetup &setup, double d1_m)
{
    if (!(d1_m > 0.0))
        throw std::domain_error("node_geometry: d1 must be positive");
    NodeGeometry g;
    g.d_bs_ue_m = std::hypot(d1_m, setup.lateral_offset_m);
    g.d_node_ue_m = std::hypot(d1_m - setup.bs_node_distance_m, setup.lateral_offset_m);
    return g;
}

double noise_power_w(const LinkModelParams &params)
{
    return dbm_to_watts(noise_power_dbm(params.bandwidth_hz, params.noise_figure_db));
}

double min_power_siso_w(const ComparisonSetup &setup, double d1_m)
{
    const NodeGeometry g = node_geometry(setup, d1_m);
    const double beta_d = umi_path_gain(setup.params.frequency_hz, g.d_bs_ue_m, false);
    const double snr = std::exp2(setup.params.rate_bps_per_hz) - 1.0;
    return snr * noise_power_w(setup.params) / beta_d;
}

double min_power_ris_w(const ComparisonSetup &setup, double d1_m, std::int64_t n_elements)
{
    if (n_elements < 0)
        throw std::domain_error("min_power_ris_w: element count must be >= 0");
    const NodeGeometry g = node_geometry(setup, d1_m);
    const double f = setup.params.frequency_hz;
    const double beta_d = umi_path_gain(f, g.d_bs_ue_m, false);
    const double beta_t = umi_path_gain(f, setup.bs_node_distance_m, true);
    const double beta_r = umi_path_gain(f, g.d_node_ue_m, true);

    // Ideal phase configuration: amplitudes add coherently.
    const double amplitude = std::sqrt(beta_d) + static_cast<double>(n_elements) *
                                                     setup.params.ris_amplitude *
                                                     std::sqrt(beta_t * beta_r);
    const double snr = std::exp2(setup.params.rate_bps_per_hz) - 1.0;
    return snr * noise_power_w(setup.params) / (amplitude * amplitude);
}

double min_power_relay_w(const ComparisonSetup &setup, double d1_m)
{
    const NodeGeometry g = node_geometry(setup, d1_m);
    const double f = setup.params.frequency_hz;
    const double beta_d = umi_path_gain(f, g.d_bs_ue_m, false);
    const double beta_t = umi_path_gain(f, setup.bs_node_distance_m, true);
    const double beta_r = umi_path_gain(f, g.d_node_ue_m, true);

    // Two equal-length phases; each must carry twice the spectral efficiency.
    const double snr = std::exp2(2.0 * setup.params.rate_bps_per_hz) - 1.0;
    const double sigma2 = noise_power_w(setup.params);

    const double p1 = snr * sigma2 / beta_t;
    const double p2 = std::max(0.0, snr * sigma2 - p1 * beta_d) / beta_r;
    return 0.5 * (p1 + p2);
}

double energy_efficiency(double rate_bps_per_hz, double bandwidth_hz, double p_watts,
                         double p_overhead_watts)
{
    const double total = p_watts + p_overhead_watts;
    if (!(total > 0.0))
        throw std::domain_error("energy_efficiency: total power must be positive");
    return rate_bps_per_hz * bandwidth_hz / total;
}

Table power_sweep(const ComparisonSetup &setup, const std::vector<std::int64_t> &n_list,
                  bool with_energy_efficiency, double overhead_w)
{
    setup.params.validate();

    Table table;
    table.columns = {"d1_m", "p_siso_w", "p_relay_w"};
    for (const std::int64_t n : n_list)
        table.columns.push_back("p_ris_n" + std::to_string(n) + "_w");
    if (with_energy_efficiency)
    {
        table.columns.push_back("ee_siso_bpj");
        table.columns.push_back("ee_relay_bpj");
        for (const std::int64_t n : n_list)
            table.columns.push_back("ee_ris_n" + std::to_string(n) + "_bpj");
    }

    const double rate = setup.params.rate_bps_per_hz;
    const double bw = setup.params.bandwidth_hz;
    for (const double d1 : setup.d1_range.values())
    {
        std::vector<double> row{d1, min_power_siso_w(setup, d1), min_power_relay_w(setup, d1)};
        for (const std::int64_t n : n_list)
            row.push_back(min_power_ris_w(setup, d1, n));
        if (with_energy_efficiency)
        {
            row.push_back(energy_efficiency(rate, bw, row[1], overhead_w));
            row.push_back(energy_efficiency(rate, bw, row[2], overhead_w));
            for (std::size_t i = 0; i < n_list.size(); ++i)
                row.push_back(energy_efficiency(rate, bw, row[3 + i], overhead_w));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace risplan
