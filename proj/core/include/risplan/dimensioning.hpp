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

#include "risplan/propagation.hpp"
#include "risplan/table.hpp"

#include <cstdint>
#include <vector>

namespace risplan
{

/// How the swept distance maps to hop lengths.
enum class GeometryMode
{
    kFixedTxRis, // tx->RIS fixed, the sweep varies RIS->rx
    kSymmetric,  // tx->RIS = RIS->rx = swept distance
};

/// How the direct tx->rx distance derives from the two hops.
enum class RhoDRule
{
    kRightAngle, // hypot(tx_ris, ris_rx); right angle at the RIS
    kCollinear,  // tx_ris + ris_rx
};

struct DimensioningQuery
{
    LinkModelParams params;
    GeometryMode mode = GeometryMode::kSymmetric;
    double fixed_tx_ris_m = 20.0; // used by kFixedTxRis
    RhoDRule rho_d_rule = RhoDRule::kRightAngle;
};

/// Inclusive sweep start..stop in the given step.
struct DistanceRange
{
    double start_m = 10.0;
    double stop_m = 150.0;
    double step_m = 1.0;

    std::vector<double> values() const;
};

/// RIS area (and square side) at which the RIS-assisted free-space loss
/// equals the unblocked direct free-space loss.
struct RequiredSize
{
    double area_m2 = 0.0;
    double side_m = 0.0;
};

RequiredSize required_area(double wavelength_m, double tx_ris_m, double ris_rx_m,
                           double direct_m);

/// Ceiling of the element count equivalent to required_area with
/// half-wavelength elements.
std::int64_t required_elements(double wavelength_m, double tx_ris_m, double ris_rx_m,
                               double direct_m);

/// Side length of a square array of n half-wavelength elements.
/// n must be a perfect square.
double ris_size_from_elements(std::int64_t n, double wavelength_m);

/// Hop distances for the swept abscissa under the query's mode and rho_d rule.
PathGeometry resolve_geometry(const DimensioningQuery &query, double distance_m);

/// Columns: distance_m, pl_los_db, pl_blocked_db, then one pl_ris_N<k>_db per
/// requested element count (broadside incidence, unit amplitude).
Table pathloss_curve(const DimensioningQuery &query,
                     const std::vector<std::int64_t> &n_values,
                     const DistanceRange &range);

/// Columns: distance_m, n_req, l_req_m.
Table dimensioning_curve(const DimensioningQuery &query, const DistanceRange &range);

} // namespace risplan
