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

#include "geopose/threading.hpp"
#include "geopose/warp.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

namespace {

using namespace geopose;

Raster make_raster(int n, int channels)
{
    std::mt19937_64 rng(7);
    Raster r(n, n, channels);
    for (double& v : r.data()) {
        v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    return r;
}

void BM_RemapInverseBilinear(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Raster src = make_raster(n, 1);
    const double c = std::cos(0.3);
    const double s = std::sin(0.3);
    const double mid = (n - 1) / 2.0;
    const InverseMap rotate = [=](int x, int y) -> std::array<double, 2> {
        const double dx = x - mid;
        const double dy = y - mid;
        return {mid + c * dx - s * dy, mid + s * dx + c * dy};
    };
    for (auto _ : state) {
        Raster out = remap_inverse(src, rotate, Interp::kBilinear);
        benchmark::DoNotOptimize(out.data().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_RemapInverseBilinear)->Arg(512)->Arg(1024)->Arg(2048);

void BM_SplatForward(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Raster src = make_raster(n, 1);
    const Raster priority = make_raster(n, 1);
    const ForwardMap scatter = [](int x, int y) -> std::array<double, 2> {
        return {x + 0.31 * y, y - 0.17 * x};
    };
    for (auto _ : state) {
        SplatResult out = splat_forward(src, scatter, priority);
        benchmark::DoNotOptimize(out.raster.data().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SplatForward)->Arg(512)->Arg(1024)->Arg(2048);

void BM_RemapThreads(benchmark::State& state)
{
    const int n = 1024;
    const Raster src = make_raster(n, 1);
    const InverseMap shift = [](int x, int y) -> std::array<double, 2> {
        return {x + 0.37, y + 0.21};
    };
    set_max_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Raster out = remap_inverse(src, shift, Interp::kBilinear);
        benchmark::DoNotOptimize(out.data().data());
    }
    set_max_threads(1);
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_RemapThreads)->Arg(1)->Arg(2)->Arg(4);

} // namespace
