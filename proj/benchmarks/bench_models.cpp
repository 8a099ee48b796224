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

#include "risplan/comparison.hpp"
#include "risplan/dimensioning.hpp"
#include "risplan/placement.hpp"
#include "risplan/scene.hpp"

#include <benchmark/benchmark.h>

namespace
{

using namespace risplan;

Building block(double x0, double y0, double x1, double y1, double h)
{
    return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, h};
}

// Street grid of 6x6 blocks over a 300 m square.
Scene city_scene()
{
    Scene scene;
    scene.grid = {0.0, 300.0, 0.0, 300.0, 10.0, 1.5};
    scene.fov_half_angle_deg = 60.0;
    scene.bs = {5.0, 150.0, 45.0};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
        {
            const double x0 = 15.0 + 48.0 * i;
            const double y0 = 15.0 + 48.0 * j;
            scene.buildings.push_back(
                block(x0, y0, x0 + 32.0, y0 + 32.0, 12.0 + 3.0 * ((i + j) % 4)));
        }
    scene.candidates = {{150.0, 150.0, 30.0}, {250.0, 60.0, 30.0},  {60.0, 250.0, 30.0},
                        {250.0, 250.0, 30.0}, {150.0, 290.0, 30.0}};
    return scene;
}

void BM_SegmentLos(benchmark::State &state)
{
    const Scene scene = city_scene();
    const Point3 p{2.0, 2.0, 1.5};
    const Point3 q{298.0, 298.0, 1.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(segment_los(scene, p, q));
}
BENCHMARK(BM_SegmentLos);

void BM_LosGrid(benchmark::State &state)
{
    const Scene scene = city_scene();
    for (auto _ : state)
        benchmark::DoNotOptimize(los_grid(scene, scene.bs));
}
BENCHMARK(BM_LosGrid);

void BM_BestOrientation(benchmark::State &state)
{
    const Scene scene = city_scene();
    for (auto _ : state)
        benchmark::DoNotOptimize(best_orientation(scene, 0));
}
BENCHMARK(BM_BestOrientation);

void BM_GreedyPlace(benchmark::State &state)
{
    const Scene scene = city_scene();
    for (auto _ : state)
        benchmark::DoNotOptimize(greedy_place(scene, 2));
}
BENCHMARK(BM_GreedyPlace);

void BM_PathlossCurve(benchmark::State &state)
{
    DimensioningQuery query;
    query.params = LinkModelParams::for_frequency(6.0e9);
    for (auto _ : state)
        benchmark::DoNotOptimize(pathloss_curve(query, {121, 484}, {10.0, 150.0, 0.5}));
}
BENCHMARK(BM_PathlossCurve);

void BM_PowerSweep(benchmark::State &state)
{
    ComparisonSetup setup;
    setup.params = LinkModelParams::for_frequency(6.0e9);
    for (auto _ : state)
        benchmark::DoNotOptimize(power_sweep(setup, {25, 250}));
}
BENCHMARK(BM_PowerSweep);

} // namespace

BENCHMARK_MAIN();
