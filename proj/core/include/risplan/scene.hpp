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

#include "risplan/geometry.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace risplan
{

// Tolerance for edge-crossing and boundary tests, meters.
inline constexpr double kGeomTolerance = 1e-9;

/// Extruded 2.5D building: a simple polygon footprint raised to `height_m`
/// above flat ground (z = 0). Vertices are (x, y) pairs, non-repeating.
struct Building
{
    std::vector<std::array<double, 2>> footprint;
    double height_m = 0.0;
};

/// Regular sampling of the area of interest at UE height. Samples run from
/// (xmin, ymin) in steps of `step_m`; the last sample may fall short of
/// xmax/ymax when the extent is not a multiple of the step.
struct GridSpec
{
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;
    double step_m = 1.0;
    double ue_height_m = 1.5;

    int nx() const;
    int ny() const;
    int size() const { return nx() * ny(); }

    double x_at(int ix) const { return xmin + ix * step_m; }
    double y_at(int iy) const { return ymin + iy * step_m; }

    /// Sample point for a flat index (row-major in y, then x).
    Point3 point(int index) const;
};

/// Geometric world: buildings, the base station, RIS candidate positions and
/// the UE sample grid. Immutable after load; all queries are const.
struct Scene
{
    std::vector<Building> buildings;
    Point3 bs;
    std::vector<Point3> candidates;
    GridSpec grid;
    double fov_half_angle_deg = 60.0;
};

/// Parse and validate a scene file (JSON, see README for the schema).
/// Throws io_error when the file cannot be read and validation_error when it
/// does not parse or violates a scene invariant.
Scene load_scene(const std::filesystem::path &path);

/// Same as load_scene but from an in-memory JSON document.
Scene scene_from_json_text(std::string_view text);

/// Throws validation_error naming the first violated invariant. Checks grid
/// and FoV ranges, footprint simplicity, and that every candidate has line of
/// sight to the base station.
void validate_scene(const Scene &scene);

/// True iff the open segment p->q does not pass through any building volume.
/// Endpoints touching a face are not blocked; only interior penetration of
/// positive length counts.
bool segment_los(const Scene &scene, const Point3 &p, const Point3 &q);

/// Per-grid-sample visibility from `source` (1 = LOS). A sample coincident
/// with the source is visible.
std::vector<std::uint8_t> los_grid(const Scene &scene, const Point3 &source);

} // namespace risplan
