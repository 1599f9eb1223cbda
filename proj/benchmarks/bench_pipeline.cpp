// Copyright (c) 2026 The geopose authors.
//
// This software is licensed under the Apache License, Version 2.0 (the "License").
// You may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geopose/augment.hpp"
#include "geopose/rectify.hpp"
#include "geopose/scale_solver.hpp"
#include "geopose/synth.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace geopose;

// Full-size processing tile with mixed ground and building cover.
GeocentricPose make_tile_pose(int n)
{
    std::mt19937_64 rng(3);
    Raster heights(n, n, 1);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const bool building = ((x / 64) + (y / 64)) % 3 == 0;
            heights.at(x, y) =
                building ? 5.0 + 55.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) : 0.0;
        }
    }
    return GeocentricPose{0.9, 0.5, std::move(heights)};
}

void BM_RectifyTile(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const GeocentricPose pose = make_tile_pose(n);
    std::mt19937_64 rng(4);
    Raster image(n, n, 1);
    for (double& v : image.data()) {
        v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    for (auto _ : state) {
        RectifiedBundle bundle = rectify_to_ground(image, pose);
        benchmark::DoNotOptimize(bundle.rectified.data().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_RectifyTile)->Arg(512)->Arg(1024)->Arg(2048);

void BM_SolveScaleTile(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const GeocentricPose pose = make_tile_pose(n);
    const FlowField flow = flow_field(pose);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_scale(pose.heights, flow.magnitudes));
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SolveScaleTile)->Arg(1024)->Arg(2048);

void BM_SolveScaleGradientTile(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const GeocentricPose pose = make_tile_pose(n);
    const FlowField flow = flow_field(pose);
    for (auto _ : state) {
        ScaleGradient grad = solve_scale_gradient(pose.heights, flow.magnitudes);
        benchmark::DoNotOptimize(grad.ds_dh.data().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SolveScaleGradientTile)->Arg(1024)->Arg(2048);

void BM_RenderScene(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    SceneSpec spec;
    spec.width = n;
    spec.height = n;
    spec.n_boxes = 24;
    const SyntheticScene scene = generate_scene(9, spec);
    for (auto _ : state) {
        RenderBundle bundle = render(scene, 0.8, 0.6);
        benchmark::DoNotOptimize(bundle.heights.data().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_RenderScene)->Arg(256)->Arg(512)->Arg(1024);

void BM_HeightAugment(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    SceneSpec spec;
    spec.width = n;
    spec.height = n;
    spec.n_boxes = 24;
    const RenderBundle bundle = render(generate_scene(9, spec), 0.8, 0.6);
    const AugmentedSample sample = make_sample(bundle.image, bundle.pose);
    for (auto _ : state) {
        AugmentedSample out = height_augment(sample, 2.3);
        benchmark::DoNotOptimize(out.pose.heights.data().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_HeightAugment)->Arg(256)->Arg(512)->Arg(1024);

} // namespace

int main(int argc, char** argv)
{
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
