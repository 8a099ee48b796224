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

#include "risplan/propagation.hpp"

#include <complex>
#include <stdexcept>

namespace risplan
{

LinkModelParams LinkModelParams::for_frequency(double frequency_hz)
{
    if (frequency_hz < kMinFrequencyHz || frequency_hz > kMaxFrequencyHz)
        throw std::domain_error("frequency outside [0.5, 100] GHz");
    LinkModelParams p;
    p.frequency_hz = frequency_hz;
    p.wavelength_m = kSpeedOfLight / frequency_hz;
    p.element_size_m = p.wavelength_m / 2.0;
    return p;
}

void LinkModelParams::validate() const
{
    if (frequency_hz < kMinFrequencyHz || frequency_hz > kMaxFrequencyHz)
        throw std::domain_error("frequency outside [0.5, 100] GHz");
    if (!(wavelength_m > 0.0))
        throw std::domain_error("wavelength must be positive");
    if (!(bandwidth_hz > 0.0))
        throw std::domain_error("bandwidth must be positive");
    if (!(rate_bps_per_hz > 0.0))
        throw std::domain_error("rate must be positive");
    if (ris_elements < 1)
        throw std::domain_error("element count must be >= 1");
    if (!(element_size_m > 0.0))
        throw std::domain_error("element size must be positive");
    if (!(ris_amplitude > 0.0) || ris_amplitude > 1.0)
        throw std::domain_error("unit-cell amplitude must lie in (0, 1]");
    if (blockage_db < 0.0)
        throw std::domain_error("blockage must be >= 0 dB");
}

double fspl_gain(double wavelength_m, double distance_m)
{
    if (!(wavelength_m > 0.0))
        throw std::domain_error("fspl_gain: wavelength must be positive");
    if (!(distance_m > 0.0))
        throw std::domain_error("fspl_gain: distance must be positive");
    const double a = wavelength_m / (4.0 * M_PI * distance_m);
    return a * a;
}

double umi_path_gain(double frequency_hz, double distance_m, bool line_of_sight)
{
    if (frequency_hz < kMinFrequencyHz || frequency_hz > kMaxFrequencyHz)
        throw std::domain_error("umi_path_gain: frequency outside [0.5, 100] GHz");
    if (distance_m < 10.0)
        throw std::domain_error("umi_path_gain: model is valid for d >= 10 m");

    const double f_ghz = frequency_hz / 1.0e9;
    const double pl_los = 32.4 + 21.0 * std::log10(distance_m) + 20.0 * std::log10(f_ghz);
    double pl = pl_los;
    if (!line_of_sight)
    {
        const double pl_nlos =
            22.4 + 35.3 * std::log10(distance_m) + 21.3 * std::log10(f_ghz);
        pl = std::max(pl_los, pl_nlos);
    }
    return std::pow(10.0, -pl / 10.0);
}

double two_ray_gain(double wavelength_m, double ground_distance_m, double h_tx_m,
                    double h_rx_m, double reflection_coeff)
{
    if (!(wavelength_m > 0.0))
        throw std::domain_error("two_ray_gain: wavelength must be positive");
    if (!(ground_distance_m > 0.0))
        throw std::domain_error("two_ray_gain: distance must be positive");
    if (!(h_tx_m > 0.0) || !(h_rx_m > 0.0))
        throw std::domain_error("two_ray_gain: antenna heights must be positive");

    const double dh = h_tx_m - h_rx_m;
    const double sh = h_tx_m + h_rx_m;
    const double d_los = std::sqrt(ground_distance_m * ground_distance_m + dh * dh);
    const double d_ref = std::sqrt(ground_distance_m * ground_distance_m + sh * sh);
    const double k = 2.0 * M_PI / wavelength_m;

    const std::complex<double> j(0.0, 1.0);
    const std::complex<double> field = std::exp(-j * (k * d_los)) / d_los +
                                       reflection_coeff * std::exp(-j * (k * d_ref)) / d_ref;
    const double scale = wavelength_m / (4.0 * M_PI);
    return scale * scale * std::norm(field);
}

double fresnel_v(double wavelength_m, double d1_m, double d2_m, double edge_height_m)
{
    if (!(wavelength_m > 0.0))
        throw std::domain_error("fresnel_v: wavelength must be positive");
    if (!(d1_m > 0.0) || !(d2_m > 0.0))
        throw std::domain_error("fresnel_v: distances must be positive");
    return edge_height_m * std::sqrt(2.0 * (d1_m + d2_m) / (wavelength_m * d1_m * d2_m));
}

double knife_edge_loss_from_v_db(double v)
{
    if (v <= -0.78)
        return 0.0;
    const double t = std::sqrt((v - 0.1) * (v - 0.1) + 1.0) + v - 0.1;
    return 6.9 + 20.0 * std::log10(t);
}

double knife_edge_loss_db(double wavelength_m, double d1_m, double d2_m,
                          double edge_height_m)
{
    return knife_edge_loss_from_v_db(fresnel_v(wavelength_m, d1_m, d2_m, edge_height_m));
}

double ris_path_gain(const LinkModelParams &params, const PathGeometry &geom,
                     double theta_in_deg, double theta_out_deg)
{
    params.validate();
    if (!(geom.tx_ris_m > 0.0) || !(geom.ris_rx_m > 0.0))
        throw std::domain_error("ris_path_gain: hop distances must be positive");
    if (std::abs(theta_in_deg) >= 90.0 || std::abs(theta_out_deg) >= 90.0)
        throw std::domain_error("ris_path_gain: incidence angles must satisfy |theta| < 90");

    const double area =
        static_cast<double>(params.ris_elements) * params.element_size_m * params.element_size_m;
    const double deg = M_PI / 180.0;
    const double effective_area =
        area * std::cos(theta_in_deg * deg) * std::cos(theta_out_deg * deg);
    const double a = effective_area / (4.0 * M_PI * geom.tx_ris_m * geom.ris_rx_m);
    return params.ris_amplitude * params.ris_amplitude * a * a;
}

double link_budget_chain_dbm(double tx_power_dbm, double tx_gain_db,
                             const PathGeometry &geom, const LinkModelParams &params,
                             double theta_in_deg, double theta_out_deg)
{
    const double gain = ris_path_gain(params, geom, theta_in_deg, theta_out_deg);
    return tx_power_dbm + tx_gain_db + gain_to_db(gain);
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db)
{
    if (!(bandwidth_hz > 0.0))
        throw std::domain_error("noise_power_dbm: bandwidth must be positive");
    return kNoiseFloorDbmPerHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

} // namespace risplan
