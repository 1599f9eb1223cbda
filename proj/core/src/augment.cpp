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

#include "geopose/errors.hpp"

#include <cmath>
#include <utility>

namespace geopose {

namespace {

    void require_sample(const AugmentedSample& sample, const char* what)
    {
        require_congruent(sample.image, sample.pose.heights, what);
    }

} // namespace

AugmentedSample make_sample(Raster image, GeocentricPose pose)
{
    if (image.width() != pose.heights.width() || image.height() != pose.heights.height()) {
        throw InvalidArgumentError("make_sample: image and heights extents differ");
    }
    AugmentedSample sample;
    sample.flow = flow_field(pose);
    sample.image = std::move(image);
    sample.pose = std::move(pose);
    return sample;
}

AugmentedSample rotate_augment(const AugmentedSample& sample, double rotate_rad, Interp interp)
{
    if (!std::isfinite(rotate_rad)) {
        throw InvalidArgumentError("rotate_augment: angle must be finite");
    }
    const int w = sample.image.width();
    const int h = sample.image.height();
    const double cx = (w - 1) / 2.0;
    const double cy = (h - 1) / 2.0;
    const double c = std::cos(rotate_rad);
    const double s = std::sin(rotate_rad);

    // Forward map is the rotation matrix [[cos,sin],[-sin,cos]] about the
    // raster center; sampling needs its inverse (the transpose).
    const InverseMap inverse = [=](int x, int y) -> std::array<double, 2> {
        const double dx = x - cx;
        const double dy = y - cy;
        return {cx + c * dx - s * dy, cy + s * dx + c * dy};
    };

    AugmentedSample out;
    out.image = remap_inverse(sample.image, inverse, interp);
    GeocentricPose pose;
    pose.scale = sample.pose.scale;
    pose.angle = wrap_angle(sample.pose.angle - rotate_rad);
    pose.heights = remap_inverse(sample.pose.heights, inverse, interp);
    out.flow = flow_field(pose);
    out.pose = std::move(pose);
    out.provenance = sample.provenance;
    out.provenance.rotate_rad += rotate_rad;
    return out;
}

AugmentedSample scale_augment(const AugmentedSample& sample, double scale_ratio, Interp interp)
{
    if (!(scale_ratio > 0.0) || !std::isfinite(scale_ratio)) {
        throw InvalidArgumentError("scale_augment: ratio must be positive and finite");
    }
    const int out_w = static_cast<int>(std::max(1L, std::lround(sample.image.width() * scale_ratio)));
    const int out_h = static_cast<int>(std::max(1L, std::lround(sample.image.height() * scale_ratio)));

    const InverseMap inverse = [=](int x, int y) -> std::array<double, 2> {
        return {x / scale_ratio, y / scale_ratio};
    };

    AugmentedSample out;
    out.image = remap_inverse(sample.image, inverse, interp, out_w, out_h);
    GeocentricPose pose;
    pose.scale = sample.pose.scale * scale_ratio;
    pose.angle = sample.pose.angle;
    // Heights are meters: values unchanged, grid resampled.
    pose.heights = remap_inverse(sample.pose.heights, inverse, interp, out_w, out_h);
    out.flow = flow_field(pose);
    out.pose = std::move(pose);
    out.provenance = sample.provenance;
    out.provenance.scale_ratio *= scale_ratio;
    return out;
}

AugmentedSample height_augment(const AugmentedSample& sample, double height_factor)
{
    if (!(height_factor >= 0.0) || !std::isfinite(height_factor)) {
        throw InvalidArgumentError("height_augment: factor must be >= 0 and finite");
    }
    require_sample(sample, "height_augment");
    const Raster& heights = sample.pose.heights;
    const int w = heights.width();
    const int h = heights.height();
    const double s = sample.pose.scale;
    const double ux = std::cos(sample.pose.angle);
    const double uy = std::sin(sample.pose.angle);
    const double shift = s * (height_factor - 1.0);

    // One splat over image channels + heights so every cell's winner is the
    // same source pixel across rasters. A pixel counts only if both the image
    // and the height are valid.
    const int image_channels = sample.image.channels();
    Raster stacked = Raster::all_invalid(w, h, image_channels + 1);
    Raster priority(w, h, 1, 0.0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!heights.valid(x, y) || !sample.image.valid(x, y)) {
                continue;
            }
            const double height = heights.at(x, y);
            for (int c = 0; c < image_channels; ++c) {
                stacked.at(x, y, c) = sample.image.at(x, y, c);
            }
            stacked.at(x, y, image_channels) = height_factor * height;
            priority.at(x, y) = height_factor * height;
        }
    }

    const ForwardMap dest = [&](int x, int y) -> std::array<double, 2> {
        const double height = heights.at(x, y);
        return {x + shift * height * ux, y + shift * height * uy};
    };
    SplatResult splat = splat_forward(stacked, dest, priority);

    AugmentedSample out;
    out.image = Raster::all_invalid(w, h, image_channels);
    GeocentricPose pose;
    pose.scale = s;
    pose.angle = sample.pose.angle;
    pose.heights = Raster::all_invalid(w, h, 1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!splat.raster.valid(x, y)) {
                continue;
            }
            for (int c = 0; c < image_channels; ++c) {
                out.image.at(x, y, c) = splat.raster.at(x, y, c);
            }
            pose.heights.at(x, y) = splat.raster.at(x, y, image_channels);
        }
    }
    out.flow = flow_field(pose);
    out.pose = std::move(pose);
    out.provenance = sample.provenance;
    out.provenance.height_factor *= height_factor;
    return out;
}

} // namespace geopose
