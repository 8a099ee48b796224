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

#include "risplan/scene.hpp"

#include <optional>
#include <vector>

namespace risplan
{

// Inclusive FoV boundary tolerance, degrees.
inline constexpr double kAngleToleranceDeg = 1e-9;

/// Circular arc of azimuths {phi : angdist(phi, center) <= half_width}.
/// Arcs produced by the FoV constraint always span less than 180 degrees;
/// intersections may degenerate to half_width 0 (a single azimuth).
struct AngularInterval
{
    double center_deg = 0.0;     // in [0, 360)
    double half_width_deg = 0.0; // in [0, 90)

    bool contains(double deg) const
    {
        return angular_distance_deg(deg, center_deg) <=
               half_width_deg + kAngleToleranceDeg;
    }
};

/// Arc of broadside azimuths from which `target` is within theta_max of the
/// surface normal. Throws std::invalid_argument when target and ris share the
/// same horizontal position.
AngularInterval target_arc(const Point3 &ris_pos, const Point3 &target,
                           double theta_max_deg);

/// Common sub-arc of two arcs shorter than a half circle, or nullopt when
/// they are disjoint.
std::optional<AngularInterval> intersect_arcs(const AngularInterval &a,
                                              const AngularInterval &b);

/// Result of the orientation sweep for one candidate.
struct OrientationChoice
{
    double orientation_deg = 0.0; // broadside azimuth
    std::vector<int> covered;     // grid indices served at this orientation
    int visible_count = 0;        // targets with plain RIS LOS, before the FoV cut
};

/// Best broadside azimuth for a candidate against all grid points that lack
/// BS line of sight. The orientation must keep the BS inside the FoV; among
/// orientations with maximal coverage, the numerically smallest azimuth in
/// [0, 360) wins, and with no coverable target the BS-arc center is returned.
OrientationChoice best_orientation(const Scene &scene, int candidate_index);

/// Same sweep restricted to an explicit target set (ascending grid indices).
OrientationChoice best_orientation_over(const Scene &scene, int candidate_index,
                                        const std::vector<int> &target_indices);

struct RisPlacement
{
    int candidate_index = -1;
    Point3 position;
    double orientation_deg = 0.0;
    std::vector<int> covered; // newly covered grid indices
    int newly_covered_count = 0;
    int raw_visible_count = 0; // LOS-only count, ignoring orientation
};

struct PlacementPlan
{
    std::vector<RisPlacement> placements;
    int requested_count = 0;
    bool truncated = false; // requested more RIS than candidates
};

/// Greedy multi-RIS selection: each round picks the unused candidate whose
/// best orientation covers the most residual points (ties: lowest candidate
/// index). A plan longer than the candidate list is truncated.
PlacementPlan greedy_place(const Scene &scene, int ris_count);

// Coverage labels: 0 uncovered, 1 BS line of sight, 1 + k for the k-th RIS of
// the plan (1-based). BS coverage takes precedence.
inline constexpr int kLabelUncovered = 0;
inline constexpr int kLabelBsLos = 1;

inline constexpr int label_for_ris(int placement_ordinal)
{
    return kLabelBsLos + placement_ordinal;
}

struct CoverageGrid
{
    GridSpec grid;
    std::vector<int> labels;
};

struct CoverageSummary
{
    int total_points = 0;
    int bs_covered = 0;
    std::vector<int> ris_newly_covered; // one entry per placement
    int uncovered = 0;
};

struct CoverageReport
{
    CoverageGrid grid;
    CoverageSummary summary;
};

/// Label every grid point for a plan and tally the counts.
CoverageReport coverage_report(const Scene &scene, const PlacementPlan &plan);

} // namespace risplan
