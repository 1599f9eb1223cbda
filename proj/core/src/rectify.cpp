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

#include "geopose/rectify.hpp"

#include "geopose/errors.hpp"
#include "geopose/threading.hpp"
#include "geopose/warp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace geopose {

RectifiedBundle rectify_to_ground(const Raster& raster, const GeocentricPose& pose, RectifyMode)
{
    const Raster& heights = pose.heights;
    if (heights.width() != raster.width() || heights.height() != raster.height() ||
        heights.channels() != 1) {
        throw InvalidArgumentError("rectify_to_ground: pose heights must be a congruent 1-channel raster");
    }
    if (!(pose.scale >= 0.0) || !std::isfinite(pose.scale) || !std::isfinite(pose.angle)) {
        throw InvalidArgumentError("rectify_to_ground: pose scale/angle invalid");
    }

    const double dx = -pose.scale * std::cos(pose.angle);
    const double dy = -pose.scale * std::sin(pose.angle);

    // Joint validity: a pixel moves only when both the value and its height
    // are known.
    Raster source = raster;
    for (int y = 0; y < source.height(); ++y) {
        for (int x = 0; x < source.width(); ++x) {
            if (source.valid(x, y) && !heights.valid(x, y)) {
                source.set_invalid(x, y);
            }
        }
    }

    const ForwardMap dest = [&](int x, int y) -> std::array<double, 2> {
        const double h = heights.at(x, y);
        return {x + dx * h, y + dy * h};
    };
    SplatResult splat = splat_forward(source, dest, heights);

    RectifiedBundle bundle;
    bundle.occlusion.occluded = Raster(raster.width(), raster.height(), 1, 0.0);
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) {
            if (splat.hit_mask.at(x, y) == 0.0) {
                bundle.occlusion.occluded.at(x, y) = 1.0;
            }
        }
    }
    bundle.rectified = std::move(splat.raster);
    bundle.hit_mask = std::move(splat.hit_mask);
    return bundle;
}

RectifiedBundle rectify_labels(const Raster& mask, const GeocentricPose& pose)
{
    return rectify_to_ground(mask, pose, RectifyMode::kCategorical);
}

Raster median_filter_heights(const Raster& heights, int width)
{
    if (width < 1 || width % 2 == 0) {
        throw InvalidArgumentError("median_filter_heights: width must be a positive odd number");
    }
    if (heights.channels() != 1) {
        throw InvalidArgumentError("median_filter_heights: heights must be 1-channel");
    }
    if (width == 1) {
        return heights;
    }
    const int r = width / 2;
    Raster out = Raster::all_invalid(heights.width(), heights.height(), 1);
    parallel_chunks(0, heights.height(), [&](int row_begin, int row_end) {
        std::vector<double> window;
        window.reserve(static_cast<std::size_t>(width) * width);
        for (int y = row_begin; y < row_end; ++y) {
            for (int x = 0; x < heights.width(); ++x) {
                if (!heights.valid(x, y)) {
                    continue;
                }
                window.clear();
                for (int wy = y - r; wy <= y + r; ++wy) {
                    for (int wx = x - r; wx <= x + r; ++wx) {
                        if (heights.in_bounds(wx, wy) && heights.valid(wx, wy)) {
                            window.push_back(heights.at(wx, wy));
                        }
                    }
                }
                const std::size_t mid = window.size() / 2;
                std::nth_element(window.begin(), window.begin() + mid, window.end());
                out.at(x, y) = window[mid];
            }
        }
    });
    return out;
}

} // namespace geopose
