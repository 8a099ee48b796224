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

#include "risplan/placement.hpp"
#include "risplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risplan
{

AngularInterval target_arc(const Point3 &ris_pos, const Point3 &target,
                           double theta_max_deg)
{
    if (!(theta_max_deg > 0.0) || theta_max_deg >= 90.0)
        throw std::invalid_argument("target_arc: theta_max must lie in (0, 90)");
    const double dx = target.x - ris_pos.x;
    const double dy = target.y - ris_pos.y;
    if (std::hypot(dx, dy) <= kGeomTolerance)
        throw std::invalid_argument("target_arc: target is horizontally coincident");
    return {azimuth_deg(dx, dy), theta_max_deg};
}

std::optional<AngularInterval> intersect_arcs(const AngularInterval &a,
                                              const AngularInterval &b)
{
    // Both arcs span < 180 deg, so the overlap is a single arc and plain
    // interval arithmetic applies after recentring on `a`.
    const double d = signed_delta_deg(a.center_deg, b.center_deg);
    const double lo = std::max(-a.half_width_deg, d - b.half_width_deg);
    const double hi = std::min(a.half_width_deg, d + b.half_width_deg);
    if (lo > hi + kAngleToleranceDeg)
        return std::nullopt;
    const double width = std::max(0.0, hi - lo);
    return AngularInterval{normalize_deg(a.center_deg + 0.5 * (lo + hi)), 0.5 * width};
}

namespace
{

struct SweepInterval
{
    double lo = 0.0; // offsets from the BS-arc start, degrees
    double hi = 0.0;
    int target = -1;
};

struct SweepEvent
{
    double u = 0.0;
    bool is_start = false;
};

// Smallest azimuth in [0, 360) inside the arc segment that starts at
// start_deg and spans [u_lo, u_hi] offsets.
double smallest_azimuth_in(double start_deg, double u_lo, double u_hi)
{
    const double a = normalize_deg(start_deg + u_lo);
    const double b = normalize_deg(start_deg + u_hi);
    if (a <= b + kAngleToleranceDeg)
        return a; // no wrap
    return 0.0;   // segment wraps through 0
}

} // namespace

OrientationChoice best_orientation_over(const Scene &scene, int candidate_index,
                                        const std::vector<int> &target_indices)
{
    if (candidate_index < 0 ||
        candidate_index >= static_cast<int>(scene.candidates.size()))
        throw std::invalid_argument("best_orientation: candidate index out of range");
    const Point3 &ris = scene.candidates[static_cast<std::size_t>(candidate_index)];
    const double fov = scene.fov_half_angle_deg;
    const AngularInterval bs_arc = target_arc(ris, scene.bs, fov);
    const double arc_start = bs_arc.center_deg - bs_arc.half_width_deg; // unnormalized
    const double arc_span = 2.0 * bs_arc.half_width_deg;

    std::vector<SweepInterval> intervals;
    std::vector<int> visible_targets;
    intervals.reserve(target_indices.size());
    for (const int idx : target_indices)
    {
        const Point3 p = scene.grid.point(idx);
        if (horizontal_distance(ris, p) <= kGeomTolerance)
            continue; // azimuth undefined straight below the candidate
        if (distance(ris, p) <= kGeomTolerance || !segment_los(scene, ris, p))
            continue;
        visible_targets.push_back(idx);
        const AngularInterval serve = target_arc(ris, p, fov);
        const auto clipped = intersect_arcs(bs_arc, serve);
        if (!clipped)
            continue;
        // Offsets of the clipped arc within the BS arc, widened by half the
        // inclusive-membership tolerance so a region start stays strictly
        // inside contains() at the full tolerance.
        const double mid = normalize_deg(clipped->center_deg - arc_start);
        double lo = mid - clipped->half_width_deg - 0.5 * kAngleToleranceDeg;
        double hi = mid + clipped->half_width_deg + 0.5 * kAngleToleranceDeg;
        lo = std::max(0.0, lo);
        hi = std::min(arc_span, hi);
        if (lo > hi)
            continue;
        intervals.push_back({lo, hi, idx});
    }

    OrientationChoice choice;
    choice.visible_count = static_cast<int>(visible_targets.size());

    if (intervals.empty())
    {
        choice.orientation_deg = bs_arc.center_deg;
        return choice;
    }

    std::vector<SweepEvent> events;
    events.reserve(intervals.size() * 2);
    for (const SweepInterval &iv : intervals)
    {
        events.push_back({iv.lo, true});
        events.push_back({iv.hi, false});
    }
    std::sort(events.begin(), events.end(), [](const SweepEvent &a, const SweepEvent &b) {
        if (a.u != b.u)
            return a.u < b.u;
        return a.is_start && !b.is_start; // starts first: closed intervals
    });

    // Pass 1: maximum simultaneous coverage.
    int best_count = 0;
    int running = 0;
    for (const SweepEvent &e : events)
    {
        running += e.is_start ? 1 : -1;
        best_count = std::max(best_count, running);
    }

    // Pass 2: regions where the count stays maximal.
    double region_start = 0.0;
    bool in_region = false;
    double best_phi = 360.0;
    running = 0;
    for (const SweepEvent &e : events)
    {
        running += e.is_start ? 1 : -1;
        if (!in_region && running == best_count)
        {
            region_start = e.u;
            in_region = true;
        }
        else if (in_region && running < best_count)
        {
            best_phi = std::min(best_phi, smallest_azimuth_in(arc_start, region_start, e.u));
            in_region = false;
        }
    }

    choice.orientation_deg = best_phi;
    for (const int idx : visible_targets)
    {
        const Point3 p = scene.grid.point(idx);
        if (target_arc(ris, p, fov).contains(best_phi) && bs_arc.contains(best_phi))
            choice.covered.push_back(idx);
    }
    return choice;
}

OrientationChoice best_orientation(const Scene &scene, int candidate_index)
{
    const std::vector<std::uint8_t> bs_visible = los_grid(scene, scene.bs);
    std::vector<int> targets;
    for (int i = 0; i < scene.grid.size(); ++i)
        if (!bs_visible[static_cast<std::size_t>(i)])
            targets.push_back(i);
    return best_orientation_over(scene, candidate_index, targets);
}

PlacementPlan greedy_place(const Scene &scene, int ris_count)
{
    if (ris_count < 1)
        throw std::invalid_argument("greedy_place: requested RIS count must be >= 1");
    if (scene.candidates.empty())
        throw validation_error("greedy_place: scene has no candidate positions");

    const std::vector<std::uint8_t> bs_visible = los_grid(scene, scene.bs);
    std::vector<int> residual;
    for (int i = 0; i < scene.grid.size(); ++i)
        if (!bs_visible[static_cast<std::size_t>(i)])
            residual.push_back(i);

    PlacementPlan plan;
    plan.requested_count = ris_count;
    const int n_candidates = static_cast<int>(scene.candidates.size());
    plan.truncated = ris_count > n_candidates;
    const int rounds = std::min(ris_count, n_candidates);

    std::vector<bool> used(static_cast<std::size_t>(n_candidates), false);
    for (int round = 0; round < rounds; ++round)
    {
        int best_candidate = -1;
        OrientationChoice best_choice;
        for (int c = 0; c < n_candidates; ++c)
        {
            if (used[static_cast<std::size_t>(c)])
                continue;
            OrientationChoice choice = best_orientation_over(scene, c, residual);
            if (best_candidate < 0 ||
                static_cast<int>(choice.covered.size()) >
                    static_cast<int>(best_choice.covered.size()))
            {
                best_candidate = c;
                best_choice = std::move(choice);
            }
        }

        used[static_cast<std::size_t>(best_candidate)] = true;
        RisPlacement placement;
        placement.candidate_index = best_candidate;
        placement.position = scene.candidates[static_cast<std::size_t>(best_candidate)];
        placement.orientation_deg = best_choice.orientation_deg;
        placement.covered = best_choice.covered;
        placement.newly_covered_count = static_cast<int>(best_choice.covered.size());
        placement.raw_visible_count = best_choice.visible_count;
        plan.placements.push_back(std::move(placement));

        std::vector<int> next;
        next.reserve(residual.size());
        std::set_difference(residual.begin(), residual.end(),
                            plan.placements.back().covered.begin(),
                            plan.placements.back().covered.end(),
                            std::back_inserter(next));
        residual = std::move(next);
    }
    return plan;
}

CoverageReport coverage_report(const Scene &scene, const PlacementPlan &plan)
{
    CoverageReport report;
    report.grid.grid = scene.grid;
    report.grid.labels.assign(static_cast<std::size_t>(scene.grid.size()), kLabelUncovered);

    const std::vector<std::uint8_t> bs_visible = los_grid(scene, scene.bs);
    for (std::size_t i = 0; i < bs_visible.size(); ++i)
        if (bs_visible[i])
            report.grid.labels[i] = kLabelBsLos;

    report.summary.total_points = scene.grid.size();
    for (std::size_t k = 0; k < plan.placements.size(); ++k)
    {
        int newly = 0;
        const int label = label_for_ris(static_cast<int>(k) + 1);
        for (const int idx : plan.placements[k].covered)
        {
            auto &slot = report.grid.labels[static_cast<std::size_t>(idx)];
            if (slot == kLabelUncovered)
            {
                slot = label;
                ++newly;
            }
        }
        report.summary.ris_newly_covered.push_back(newly);
    }

    for (const int label : report.grid.labels)
    {
        if (label == kLabelBsLos)
            ++report.summary.bs_covered;
        else if (label == kLabelUncovered)
            ++report.summary.uncovered;
    }
    return report;
}

} // namespace risplan
