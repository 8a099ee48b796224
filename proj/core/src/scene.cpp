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

#include "risplan/scene.hpp"
#include "risplan/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace risplan
{

namespace
{

struct Vec2
{
    double x = 0.0;
    double y = 0.0;
};

Vec2 operator-(const Vec2 &a, const Vec2 &b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator+(const Vec2 &a, const Vec2 &b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator*(double s, const Vec2 &a) { return {s * a.x, s * a.y}; }

double cross(const Vec2 &a, const Vec2 &b) { return a.x * b.y - a.y * b.x; }
double dot(const Vec2 &a, const Vec2 &b) { return a.x * b.x + a.y * b.y; }
double length(const Vec2 &a) { return std::hypot(a.x, a.y); }

double point_segment_distance(const Vec2 &p, const Vec2 &a, const Vec2 &b)
{
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0)
        return length(p - a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return length(p - (a + t * ab));
}

// Strict interior test; points within kGeomTolerance of the boundary count
// as outside.
bool polygon_contains_strict(const std::vector<std::array<double, 2>> &poly,
                             const Vec2 &p)
{
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i)
    {
        const Vec2 a{poly[i][0], poly[i][1]};
        const Vec2 b{poly[(i + 1) % n][0], poly[(i + 1) % n][1]};
        if (point_segment_distance(p, a, b) <= kGeomTolerance)
            return false;
    }
    bool inside = false;
    for (int i = 0; i < n; ++i)
    {
        const Vec2 a{poly[i][0], poly[i][1]};
        const Vec2 b{poly[(i + 1) % n][0], poly[(i + 1) % n][1]};
        if ((a.y > p.y) != (b.y > p.y))
        {
            const double x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (x_int > p.x)
                inside = !inside;
        }
    }
    return inside;
}

// Parameters t in [0, 1] where the 2D segment p + t*(q - p) meets the edge
// [a, b], including collinear-overlap endpoints. Appends to `out`.
void collect_edge_crossings(const Vec2 &p, const Vec2 &q, const Vec2 &a, const Vec2 &b,
                            std::vector<double> &out)
{
    const Vec2 d = q - p;
    const Vec2 e = b - a;
    const double seg_len = length(d);
    const double edge_len = length(e);
    if (seg_len <= 0.0 || edge_len <= 0.0)
        return;

    const double denom = cross(d, e);
    const Vec2 diff = a - p;
    const double t_tol = kGeomTolerance / seg_len;

    if (std::abs(denom) > 1e-12 * seg_len * edge_len)
    {
        const double t = cross(diff, e) / denom;
        const double s = cross(diff, d) / denom;
        const double s_tol = kGeomTolerance / edge_len;
        if (s >= -s_tol && s <= 1.0 + s_tol && t >= -t_tol && t <= 1.0 + t_tol)
            out.push_back(std::clamp(t, 0.0, 1.0));
        return;
    }

    // Parallel. Collinear only if the edge start lies on the segment's line.
    if (std::abs(cross(d, diff)) > kGeomTolerance * seg_len)
        return;
    const double inv = 1.0 / dot(d, d);
    for (const Vec2 &v : {a, b})
    {
        const double t = dot(v - p, d) * inv;
        if (t >= -t_tol && t <= 1.0 + t_tol)
            out.push_back(std::clamp(t, 0.0, 1.0));
    }
}

// True when the open segment penetrates the building's interior over a
// positive length.
bool building_blocks(const Building &bld, const Point3 &p, const Point3 &q)
{
    const Vec2 p2{p.x, p.y};
    const Vec2 q2{q.x, q.y};
    const double len2d = length(q2 - p2);
    const double h = bld.height_m;

    if (len2d <= kGeomTolerance)
    {
        // Vertical segment: blocked iff its horizontal position is interior
        // and some positive part lies below the roof.
        if (!polygon_contains_strict(bld.footprint, p2))
            return false;
        return std::min(p.z, q.z) < h - kGeomTolerance;
    }

    std::vector<double> ts;
    ts.reserve(8);
    ts.push_back(0.0);
    ts.push_back(1.0);
    const int n = static_cast<int>(bld.footprint.size());
    for (int i = 0; i < n; ++i)
    {
        const Vec2 a{bld.footprint[i][0], bld.footprint[i][1]};
        const Vec2 b{bld.footprint[(i + 1) % n][0], bld.footprint[(i + 1) % n][1]};
        collect_edge_crossings(p2, q2, a, b, ts);
    }
    std::sort(ts.begin(), ts.end());

    const double t_tol = kGeomTolerance / len2d;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    {
        const double ta = ts[i];
        const double tb = ts[i + 1];
        if (tb - ta <= t_tol)
            continue;
        const double tm = 0.5 * (ta + tb);
        const Vec2 mid = p2 + tm * (q2 - p2);
        if (!polygon_contains_strict(bld.footprint, mid))
            continue;
        const double za = p.z + ta * (q.z - p.z);
        const double zb = p.z + tb * (q.z - p.z);
        if (std::min(za, zb) < h - kGeomTolerance)
            return true;
    }
    return false;
}

void check_footprint(const Building &bld, int index)
{
    const auto &fp = bld.footprint;
    const int n = static_cast<int>(fp.size());
    const std::string where = "building " + std::to_string(index);

    if (n < 3)
        throw validation_error(where + ": footprint needs at least 3 vertices");
    if (!(bld.height_m > 0.0))
        throw validation_error(where + ": height must be positive");
    for (const auto &v : fp)
        if (!std::isfinite(v[0]) || !std::isfinite(v[1]))
            throw validation_error(where + ": footprint coordinates must be finite");

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
        {
            const double d = std::hypot(fp[i][0] - fp[j][0], fp[i][1] - fp[j][1]);
            if (d <= kGeomTolerance)
                throw validation_error(where + ": repeated footprint vertex");
        }

    // Simplicity: non-adjacent edges may not touch.
    for (int i = 0; i < n; ++i)
    {
        const Vec2 a1{fp[i][0], fp[i][1]};
        const Vec2 b1{fp[(i + 1) % n][0], fp[(i + 1) % n][1]};
        for (int j = i + 1; j < n; ++j)
        {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            const Vec2 a2{fp[j][0], fp[j][1]};
            const Vec2 b2{fp[(j + 1) % n][0], fp[(j + 1) % n][1]};

            const Vec2 d1 = b1 - a1;
            const Vec2 d2 = b2 - a2;
            const double denom = cross(d1, d2);
            bool touch = false;
            if (std::abs(denom) > 1e-12 * length(d1) * length(d2))
            {
                const Vec2 diff = a2 - a1;
                const double t = cross(diff, d2) / denom;
                const double s = cross(diff, d1) / denom;
                touch = t > -1e-12 && t < 1.0 + 1e-12 && s > -1e-12 && s < 1.0 + 1e-12;
            }
            else
            {
                touch = point_segment_distance(a2, a1, b1) <= kGeomTolerance ||
                        point_segment_distance(b2, a1, b1) <= kGeomTolerance ||
                        point_segment_distance(a1, a2, b2) <= kGeomTolerance;
            }
            if (touch)
                throw validation_error(where + ": footprint is self-intersecting");
        }
    }
}

} // namespace

int GridSpec::nx() const
{
    return static_cast<int>(std::floor((xmax - xmin) / step_m + 1e-9)) + 1;
}

int GridSpec::ny() const
{
    return static_cast<int>(std::floor((ymax - ymin) / step_m + 1e-9)) + 1;
}

Point3 GridSpec::point(int index) const
{
    const int cols = nx();
    const int ix = index % cols;
    const int iy = index / cols;
    return {x_at(ix), y_at(iy), ue_height_m};
}

bool segment_los(const Scene &scene, const Point3 &p, const Point3 &q)
{
    if (distance(p, q) <= kGeomTolerance)
        throw std::invalid_argument("segment_los: endpoints coincide");
    for (const Building &bld : scene.buildings)
        if (building_blocks(bld, p, q))
            return false;
    return true;
}

std::vector<std::uint8_t> los_grid(const Scene &scene, const Point3 &source)
{
    const int n = scene.grid.size();
    std::vector<std::uint8_t> visible(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
    {
        const Point3 sample = scene.grid.point(i);
        if (distance(source, sample) <= kGeomTolerance)
            visible[static_cast<std::size_t>(i)] = 1;
        else
            visible[static_cast<std::size_t>(i)] = segment_los(scene, source, sample) ? 1 : 0;
    }
    return visible;
}

void validate_scene(const Scene &scene)
{
    if (!(scene.grid.step_m > 0.0))
        throw validation_error("grid: step must be positive");
    if (scene.grid.xmax < scene.grid.xmin || scene.grid.ymax < scene.grid.ymin)
        throw validation_error("grid: max bound below min bound");
    if (!(scene.fov_half_angle_deg > 0.0) || scene.fov_half_angle_deg >= 90.0)
        throw validation_error("fov_half_angle_deg must lie in (0, 90)");
    for (const double v : {scene.bs.x, scene.bs.y, scene.bs.z})
        if (!std::isfinite(v))
            throw validation_error("bs coordinates must be finite");

    for (std::size_t i = 0; i < scene.buildings.size(); ++i)
        check_footprint(scene.buildings[i], static_cast<int>(i));

    for (std::size_t i = 0; i < scene.candidates.size(); ++i)
    {
        const Point3 &c = scene.candidates[i];
        for (const double v : {c.x, c.y, c.z})
            if (!std::isfinite(v))
                throw validation_error("candidate " + std::to_string(i) +
                                       ": coordinates must be finite");
        if (distance(c, scene.bs) <= kGeomTolerance)
            throw validation_error("candidate " + std::to_string(i) +
                                   " coincides with the base station");
        if (!segment_los(scene, c, scene.bs))
            throw validation_error("candidate " + std::to_string(i) +
                                   " has no line of sight to the base station");
    }
}

namespace
{

using nlohmann::json;

void expect_keys(const json &obj, std::initializer_list<const char *> allowed,
                 const std::string &where)
{
    for (const auto &item : obj.items())
    {
        bool known = false;
        for (const char *k : allowed)
            if (item.key() == k)
            {
                known = true;
                break;
            }
        if (!known)
            throw validation_error("unknown key \"" + item.key() + "\" in " + where);
    }
}

double number_at(const json &obj, const char *key, const std::string &where)
{
    if (!obj.contains(key))
        throw validation_error("missing key \"" + std::string(key) + "\" in " + where);
    const json &v = obj.at(key);
    if (!v.is_number())
        throw validation_error("key \"" + std::string(key) + "\" in " + where +
                               " must be a number");
    return v.get<double>();
}

Point3 point_at(const json &obj, const std::string &where)
{
    if (!obj.is_object())
        throw validation_error(where + " must be an object with x, y, z");
    expect_keys(obj, {"x", "y", "z"}, where);
    return {number_at(obj, "x", where), number_at(obj, "y", where),
            number_at(obj, "z", where)};
}

} // namespace

Scene scene_from_json_text(std::string_view text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::exception &e)
    {
        throw validation_error(std::string("scene parse error: ") + e.what());
    }
    if (!doc.is_object())
        throw validation_error("scene file must contain a JSON object");

    expect_keys(doc, {"buildings", "bs", "candidates", "grid", "fov_half_angle_deg"},
                "scene");
    for (const char *key : {"buildings", "bs", "candidates", "grid", "fov_half_angle_deg"})
        if (!doc.contains(key))
            throw validation_error("missing key \"" + std::string(key) + "\" in scene");

    Scene scene;
    const json &buildings = doc.at("buildings");
    if (!buildings.is_array())
        throw validation_error("\"buildings\" must be an array");
    for (std::size_t i = 0; i < buildings.size(); ++i)
    {
        const json &b = buildings[i];
        const std::string where = "building " + std::to_string(i);
        if (!b.is_object())
            throw validation_error(where + " must be an object");
        expect_keys(b, {"footprint", "height"}, where);
        if (!b.contains("footprint") || !b.at("footprint").is_array())
            throw validation_error(where + ": \"footprint\" must be an array");
        Building bld;
        for (const json &v : b.at("footprint"))
        {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw validation_error(where + ": footprint vertices must be [x, y] pairs");
            bld.footprint.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        bld.height_m = number_at(b, "height", where);
        scene.buildings.push_back(std::move(bld));
    }

    scene.bs = point_at(doc.at("bs"), "bs");

    const json &candidates = doc.at("candidates");
    if (!candidates.is_array())
        throw validation_error("\"candidates\" must be an array");
    for (std::size_t i = 0; i < candidates.size(); ++i)
        scene.candidates.push_back(point_at(candidates[i], "candidate " + std::to_string(i)));

    const json &grid = doc.at("grid");
    if (!grid.is_object())
        throw validation_error("\"grid\" must be an object");
    expect_keys(grid, {"xmin", "xmax", "ymin", "ymax", "step", "ue_height"}, "grid");
    scene.grid.xmin = number_at(grid, "xmin", "grid");
    scene.grid.xmax = number_at(grid, "xmax", "grid");
    scene.grid.ymin = number_at(grid, "ymin", "grid");
    scene.grid.ymax = number_at(grid, "ymax", "grid");
    scene.grid.step_m = number_at(grid, "step", "grid");
    scene.grid.ue_height_m = number_at(grid, "ue_height", "grid");

    scene.fov_half_angle_deg = number_at(doc, "fov_half_angle_deg", "scene");

    validate_scene(scene);
    return scene;
}

Scene load_scene(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open scene file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw io_error("failed reading scene file: " + path.string());
    return scene_from_json_text(buffer.str());
}

} // namespace risplan
