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

namespace risplan
{

/// Point in a local Cartesian frame, meters, z up.
struct Point3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Point3 operator+(const Point3 &a, const Point3 &b)
{
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Point3 operator-(const Point3 &a, const Point3 &b)
{
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline double distance(const Point3 &a, const Point3 &b)
{
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline double horizontal_distance(const Point3 &a, const Point3 &b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Map an angle to [0, 360).
inline double normalize_deg(double deg)
{
    double r = std::fmod(deg, 360.0);
    if (r < 0.0)
        r += 360.0;
    if (r >= 360.0)
        r = 0.0;
    return r;
}

/// Signed shortest rotation from one azimuth to another, in (-180, 180].
inline double signed_delta_deg(double from_deg, double to_deg)
{
    double d = normalize_deg(to_deg - from_deg);
    if (d > 180.0)
        d -= 360.0;
    return d;
}

/// Shortest circular distance between two azimuths, in [0, 180].
inline double angular_distance_deg(double a_deg, double b_deg)
{
    return std::abs(signed_delta_deg(a_deg, b_deg));
}

/// Azimuth of the direction (dx, dy), counterclockwise from the +x axis, in [0, 360).
inline double azimuth_deg(double dx, double dy)
{
    return normalize_deg(std::atan2(dy, dx) * 180.0 / M_PI);
}

} // namespace risplan
