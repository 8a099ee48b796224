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

#include "risplan/dimensioning.hpp" // DistanceRange
#include "risplan/propagation.hpp"
#include "risplan/table.hpp"

#include <cstdint>
#include <vector>

namespace risplan
{

/// Geometry of the transmit-power study: BS at the origin, the assisting node
/// (RIS or relay) on the x axis, the UE on a parallel track with a fixed
/// lateral offset. The UE abscissa d1 is swept.
struct ComparisonSetup
{
    LinkModelParams params;
    double bs_node_distance_m = 80.0;
    double lateral_offset_m = 10.0;
    DistanceRange d1_range{20.0, 120.0, 1.0};
};

struct NodeGeometry
{
    double d_bs_ue_m = 0.0;
    double d_node_ue_m = 0.0;
};

NodeGeometry node_geometry(const ComparisonSetup &setup, double d1_m);

/// Noise power sigma^2 in watts from the setup's bandwidth and noise figure.
double noise_power_w(const LinkModelParams &params);

/// Minimum transmit power (W) for rate R over the NLOS direct channel:
/// P = (2^R - 1) sigma^2 / beta_d.
double min_power_siso_w(const ComparisonSetup &setup, double d1_m);

/// Minimum transmit power (W) with an n-element RIS under ideal phase
/// alignment: P = (2^R - 1) sigma^2 / (sqrt(beta_d) + n a sqrt(beta_t beta_r))^2.
/// n = 0 degenerates to the SISO case.
double min_power_ris_w(const ComparisonSetup &setup, double d1_m,
                       std::int64_t n_elements);

/// Minimum time-averaged transmit power (W) for a half-duplex decode-and-
/// forward relay with direct-path combining on the second hop. The per-hop
/// SNR target is 2^(2R) - 1.
double min_power_relay_w(const ComparisonSetup &setup, double d1_m);

/// Bits per joule: R * B / (P + overhead).
double energy_efficiency(double rate_bps_per_hz, double bandwidth_hz, double p_watts,
                         double p_overhead_watts);

/// Columns: d1_m, p_siso_w, p_relay_w, one p_ris_n<k>_w per element count,
/// and matching ee_* columns when requested.
Table power_sweep(const ComparisonSetup &setup, const std::vector<std::int64_t> &n_list,
                  bool with_energy_efficiency = false, double overhead_w = 0.0);

} // namespace risplan
