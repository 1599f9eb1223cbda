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

#include "geopose/synth.hpp"

#include "geopose/errors.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace geopose {

namespace {

    // mt19937_64 is pinned by the standard; the value derivations below avoid
    // std::uniform_*_distribution, whose algorithm is implementation-defined,
    // so scenes are reproducible across standard libraries.
    double next_unit(std::mt19937_64& rng)
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

    double next_real(std::mt19937_64& rng, double lo, double hi)
    {
        return lo + (hi - lo) * next_unit(rng);
    }

    int next_int(std::mt19937_64& rng, int lo, int hi) // inclusive range
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(rng() % span);
    }

} // namespace

void SyntheticScene::sample_ground(int x, int y, double& height_out, int& id_out) const
{
    height_out = 0.0;
    id_out = 0;
    for (const Box& box : boxes) {
        if (x >= box.x0 && x < box.x1 && y >= box.y0 && y < box.y1 && box.height >= height_out &&
            box.height > 0.0) {
            height_out = box.height;
            id_out = box.id;
        }
    }
}

SyntheticScene generate_scene(std::uint64_t seed, const SceneSpec& spec)
{
    if (spec.width < 32 || spec.height < 32) {
        throw InvalidArgumentError("generate_scene: extent must be at least 32x32");
    }
    if (spec.n_boxes < 0) {
        throw InvalidArgumentError("generate_scene: n_boxes must be >= 0");
    }
    if (spec.min_size < 1 || spec.min_size > spec.max_size) {
        throw InvalidArgumentError("generate_scene: size range is empty");
    }
    if (spec.min_size > spec.width || spec.min_size > spec.height) {
        throw InvalidArgumentError("generate_scene: min box size exceeds extent");
    }
    if (!(spec.min_height >= 0.0) || spec.min_height > spec.max_height) {
        throw InvalidArgumentError("generate_scene: height range is empty or negative");
    }

    SyntheticScene scene;
    scene.width = spec.width;
    scene.height = spec.height;
    scene.boxes.reserve(static_cast<std::size_t>(spec.n_boxes));

    std::mt19937_64 rng(seed);
    for (int i = 0; i < spec.n_boxes; ++i) {
        Box box;
        box.id = i + 1;
        const int w = next_int(rng, spec.min_size, std::min(spec.max_size, spec.width));
        const int h = next_int(rng, spec.min_size, std::min(spec.max_size, spec.height));
        box.x0 = next_int(rng, 0, spec.width - w);
        box.y0 = next_int(rng, 0, spec.height - h);
        box.x1 = box.x0 + w;
        box.y1 = box.y0 + h;
        box.height = next_real(rng, spec.min_height, spec.max_height);
        scene.boxes.push_back(box);
    }
    return scene;
}

RenderBundle render(const SyntheticScene& scene, double s, double theta)
{
    if (!(s >= 0.0) || !std::isfinite(s) || !std::isfinite(theta)) {
        throw InvalidArgumentError("render: scale must be finite and >= 0, angle finite");
    }
    const int w = scene.width;
    const int h = scene.height;
    if (w <= 0 || h <= 0) {
        throw InvalidArgumentError("render: scene extent is empty");
    }

    // Ground-truth ground grid: tallest cover per cell.
    Raster ground_heights(w, h, 1, 0.0);
    Raster footprints(w, h, 1, 0.0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double cell_height = 0.0;
            int cell_id = 0;
            scene.sample_ground(x, y, cell_height, cell_id);
            ground_heights.at(x, y) = cell_height;
            footprints.at(x, y) = static_cast<double>(cell_id);
        }
    }

    const double ux = std::cos(theta);
    const double uy = std::sin(theta);

    RenderBundle bundle;
    bundle.footprints = footprints;
    bundle.heights = Raster::all_invalid(w, h, 1);
    bundle.instances = Raster::all_invalid(w, h, 1);
    bundle.image = Raster::all_invalid(w, h, 1);
    bundle.occluded_ground = OcclusionMap{Raster(w, h, 1, 0.0)};

    // Forward splat of the top surface, taller wins, ties to the lowest
    // row-major ground cell. Serial scan keeps the tie-break exact.
    std::vector<double> best_height(static_cast<std::size_t>(w) * h,
                                    -std::numeric_limits<double>::infinity());
    std::vector<std::int64_t> best_cell(static_cast<std::size_t>(w) * h, -1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double cell_height = ground_heights.at(x, y);
            const long ix = std::lround(x + s * cell_height * ux);
            const long iy = std::lround(y + s * cell_height * uy);
            if (ix < 0 || ix >= w || iy < 0 || iy >= h) {
                continue;
            }
            const std::size_t cell = static_cast<std::size_t>(iy) * w + ix;
            if (best_cell[cell] < 0 || cell_height > best_height[cell]) {
                best_height[cell] = cell_height;
                best_cell[cell] = static_cast<std::int64_t>(y) * w + x;
            }
        }
    }

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::int64_t src = best_cell[static_cast<std::size_t>(y) * w + x];
            if (src < 0) {
                continue;
            }
            const int sx = static_cast<int>(src % w);
            const int sy = static_cast<int>(src / w);
            const double height = ground_heights.at(sx, sy);
            const int id = static_cast<int>(footprints.at(sx, sy));
            bundle.heights.at(x, y) = height;
            bundle.instances.at(x, y) = static_cast<double>(id);
            // Shade: open ground mid-gray, boxes banded by id and height.
            bundle.image.at(x, y) =
                id == 0 ? 0.25 : 0.5 + 0.04 * (id % 8) + 0.002 * height;
        }
    }

    // A ground cell is occluded iff its own splat did not win (or left the
    // frame): its feature cannot be recovered from this view.
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double cell_height = ground_heights.at(x, y);
            const long ix = std::lround(x + s * cell_height * ux);
            const long iy = std::lround(y + s * cell_height * uy);
            bool visible = false;
            if (ix >= 0 && ix < w && iy >= 0 && iy < h) {
                visible = best_cell[static_cast<std::size_t>(iy) * w + ix] ==
                          static_cast<std::int64_t>(y) * w + x;
            }
            bundle.occluded_ground.occluded.at(x, y) = visible ? 0.0 : 1.0;
        }
    }

    bundle.pose = GeocentricPose{s, wrap_angle(theta), bundle.heights};
    bundle.flow = flow_field(bundle.pose);
    return bundle;
}

} // namespace geopose
