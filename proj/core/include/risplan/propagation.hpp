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

#include <cmath>
#include <cstdint>

namespace risplan
{

// Model constant; kept exact so that half-wavelength element sizing yields
// L = 0.267857... m for a 50x50 array at 28 GHz.
inline constexpr double kSpeedOfLight = 3.0e8; // m/s

inline constexpr double kNoiseFloorDbmPerHz = -174.0;

inline constexpr double kMinFrequencyHz = 0.5e9;
inline constexpr double kMaxFrequencyHz = 100.0e9;

/// Symbols shared by the link-budget, dimensioning, and comparison models.
///
/// frequency must lie in [0.5, 100] GHz, the element count must be >= 1 and
/// the unit-cell reflection magnitude in (0, 1].
struct LinkModelParams
{
    double frequency_hz = 6.0e9;
    double wavelength_m = kSpeedOfLight / 6.0e9; // derived c/f
    double bandwidth_hz = 10.0e6;
    double noise_figure_db = 10.0;
    double rate_bps_per_hz = 4.0;
    std::int64_t ris_elements = 1;
    double element_size_m = kSpeedOfLight / 6.0e9 / 2.0; // half wavelength
    double ris_amplitude = 1.0;                          // unit-cell |reflection|
    double blockage_db = 20.0; // extra attenuation on a blocked direct path

    /// Defaults for a given carrier: wavelength c/f, half-wavelength elements.
    static LinkModelParams for_frequency(double frequency_hz);

    /// Throws std::domain_error if any field is outside its allowed range.
    void validate() const;
};

/// Hop distances of a RIS-assisted link. Values are independent; no triangle
/// relation is enforced (parametric sweeps vary them separately).
struct PathGeometry
{
    double direct_m = 1.0; // transmitter -> receiver
    double tx_ris_m = 1.0; // transmitter -> RIS
    double ris_rx_m = 1.0; // RIS -> receiver
};

/// Free-space gain (wavelength / 4 pi d)^2.
double fspl_gain(double wavelength_m, double distance_m);

/// 3GPP urban-micro street-canyon path gain, linear. Valid for d >= 10 m and
/// f in [0.5, 100] GHz; the NLOS branch is clamped to be no better than LOS.
double umi_path_gain(double frequency_hz, double distance_m, bool line_of_sight);

/// Coherent two-path ground-reflection gain: direct ray plus one ray bounced
/// off flat ground with reflection coefficient `reflection_coeff`.
double two_ray_gain(double wavelength_m, double ground_distance_m, double h_tx_m,
                    double h_rx_m, double reflection_coeff);

/// Fresnel parameter v for a single edge of height h above the direct line,
/// at distances d1/d2 from the endpoints.
double fresnel_v(double wavelength_m, double d1_m, double d2_m, double edge_height_m);

/// Single knife-edge diffraction loss, dB >= 0 (0 below v = -0.78).
double knife_edge_loss_from_v_db(double v);
double knife_edge_loss_db(double wavelength_m, double d1_m, double d2_m,
                          double edge_height_m);

/// Aperture-projection gain of the RIS-assisted hop:
///   A_eff = N * s^2 * cos(theta_in) * cos(theta_out)
///   gain  = amplitude^2 * (A_eff / (4 pi tx_ris ris_rx))^2
/// At broadside with A = wavelength*tx_ris*ris_rx/direct this equals the
/// free-space gain over the direct distance.
double ris_path_gain(const LinkModelParams &params, const PathGeometry &geom,
                     double theta_in_deg, double theta_out_deg);

/// Received power over the RIS path: Tx power + Tx gain + RIS path gain, dBm.
double link_budget_chain_dbm(double tx_power_dbm, double tx_gain_db,
                             const PathGeometry &geom, const LinkModelParams &params,
                             double theta_in_deg, double theta_out_deg);

/// Thermal noise power -174 dBm/Hz + 10 log10(B) + NF.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

inline double dbm_to_watts(double dbm)
{
    return 1.0e-3 * std::pow(10.0, dbm / 10.0);
}

inline double watts_to_dbm(double watts)
{
    return 10.0 * std::log10(watts * 1.0e3);
}

inline double gain_to_db(double gain)
{
    return 10.0 * std::log10(gain);
}

/// Path loss in dB of a linear power gain.
inline double gain_to_loss_db(double gain)
{
    return -gain_to_db(gain);
}

} // namespace risplan
