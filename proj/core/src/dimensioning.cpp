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

#include "risplan/dimensioning.hpp"

#include <cmath>
#include <stdexcept>

namespace risplan
{

namespace
{

void check_distances(double wavelength_m, double tx_ris_m, double ris_rx_m,
                     double direct_m)
{
    if (!(wavelength_m > 0.0))
        throw std::domain_error("wavelength must be positive");
    if (!(tx_ris_m > 0.0) || !(ris_rx_m > 0.0) || !(direct_m > 0.0))
        throw std::domain_error("distances must be positive");
}

} // namespace

std::vector<double> DistanceRange::values() const
{
    if (!(step_m > 0.0))
        throw std::domain_error("distance range: step must be positive");
    if (stop_m < start_m)
        return {};
    const int n = static_cast<int>(std::floor((stop_m - start_m) / step_m + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(start_m + i * step_m);
    return out;
}

RequiredSize required_area(double wavelength_m, double tx_ris_m, double ris_rx_m,
                           double direct_m)
{
    check_distances(wavelength_m, tx_ris_m, ris_rx_m, direct_m);
    const double area = wavelength_m * tx_ris_m * ris_rx_m / direct_m;
    return {area, std::sqrt(area)};
}

std::int64_t required_elements(double wavelength_m, double tx_ris_m, double ris_rx_m,
                               double direct_m)
{
    check_distances(wavelength_m, tx_ris_m, ris_rx_m, direct_m);
    const double n = 4.0 * tx_ris_m * ris_rx_m / (wavelength_m * direct_m);
    // Shave one part in 1e12 so exact integers survive rounding noise.
    return static_cast<std::int64_t>(std::ceil(n * (1.0 - 1e-12)));
}

double ris_size_from_elements(std::int64_t n, double wavelength_m)
{
    if (n < 1)
        throw std::invalid_argument("ris_size_from_elements: element count must be >= 1");
    if (!(wavelength_m > 0.0))
        throw std::domain_error("ris_size_from_elements: wavelength must be positive");
    const auto side = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (side * side != n)
        throw std::invalid_argument(
            "ris_size_from_elements: element count is not a perfect square");
    return static_cast<double>(side) * wavelength_m / 2.0;
}

PathGeometry resolve_geometry(const DimensioningQuery &query, double distance_m)
{
    if (!(distance_m > 0.0))
        throw std::domain_error("resolve_geometry: distance must be positive");
    PathGeometry geom;
    if (query.mode == GeometryMode::kSymmetric)
    {
        geom.tx_ris_m = distance_m;
        geom.ris_rx_m = distance_m;
    }
    else
    {
        if (!(query.fixed_tx_ris_m > 0.0))
            throw std::domain_error("resolve_geometry: fixed tx-RIS distance must be positive");
        geom.tx_ris_m = query.fixed_tx_ris_m;
        geom.ris_rx_m = distance_m;
    }
    geom.direct_m = query.rho_d_rule == RhoDRule::kRightAngle
                        ? std::hypot(geom.tx_ris_m, geom.ris_rx_m)
                        : geom.tx_ris_m + geom.ris_rx_m;
    return geom;
}

Table pathloss_curve(const DimensioningQuery &query,
                     const std::vector<std::int64_t> &n_values,
                     const DistanceRange &range)
{
    query.params.validate();

    Table table;
    table.columns = {"distance_m", "pl_los_db", "pl_blocked_db"};
    for (const std::int64_t n : n_values)
        table.columns.push_back("pl_ris_N" + std::to_string(n) + "_db");

    // Broadside incidence and unit amplitude throughout.
    LinkModelParams ris_params = query.params;
    ris_params.ris_amplitude = 1.0;

    for (const double d : range.values())
    {
        const PathGeometry geom = resolve_geometry(query, d);
        const double pl_los = gain_to_loss_db(fspl_gain(query.params.wavelength_m, geom.direct_m));
        std::vector<double> row{d, pl_los, pl_los + query.params.blockage_db};
        for (const std::int64_t n : n_values)
        {
            ris_params.ris_elements = n;
            row.push_back(gain_to_loss_db(ris_path_gain(ris_params, geom, 0.0, 0.0)));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table dimensioning_curve(const DimensioningQuery &query, const DistanceRange &range)
{
    query.params.validate();

    Table table;
    table.columns = {"distance_m", "n_req", "l_req_m"};
    for (const double d : range.values())
    {
        const PathGeometry geom = resolve_geometry(query, d);
        const double lambda = query.params.wavelength_m;
        const auto n_req = required_elements(lambda, geom.tx_ris_m, geom.ris_rx_m, geom.direct_m);
        const RequiredSize size =
            required_area(lambda, geom.tx_ris_m, geom.ris_rx_m, geom.direct_m);
        table.rows.push_back({d, static_cast<double>(n_req), size.side_m});
    }
    return table;
}

} // namespace risplan
