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

#include "geopose/geometry.hpp"

#include "geopose/errors.hpp"
#include "geopose/threading.hpp"

#include <cmath>
#include <numbers>

namespace geopose {

double wrap_angle(double radians)
{
    const double two_pi = 2.0 * std::numbers::pi;
    double wrapped = std::fmod(radians + std::numbers::pi, two_pi);
    if (wrapped < 0.0) {
        wrapped += two_pi;
    }
    return wrapped - std::numbers::pi;
}

AffineCamera AffineCamera::from_rows(const std::array<double, 3>& row_x,
                                     const std::array<double, 3>& row_y)
{
    AffineCamera camera;
    camera.a = {row_x[0], row_x[1], row_x[2], row_y[0], row_y[1], row_y[2]};
    for (double v : camera.a) {
        if (!std::isfinite(v)) {
            throw InvalidArgumentError("affine camera entries must be finite");
        }
    }
    return camera;
}

std::array<double, 2> project(const AffineCamera& camera, const std::array<double, 3>& world)
{
    for (double v : world) {
        if (!std::isfinite(v)) {
            throw InvalidArgumentError("project: world point must be finite");
        }
    }
    for (double v : camera.a) {
        if (!std::isfinite(v)) {
            throw InvalidArgumentError("project: camera entries must be finite");
        }
    }
    const auto& a = camera.a;
    return {a[0] * world[0] + a[1] * world[1] + a[2] * world[2],
            a[3] * world[0] + a[4] * world[1] + a[5] * world[2]};
}

PoseFromPairResult pose_from_pair(const PointPair& pair)
{
    if (!(pair.height > 0.0) || !std::isfinite(pair.height)) {
        throw InvalidArgumentError("pose_from_pair: height must be positive and finite");
    }
    const double dx = pair.surface[0] - pair.ground[0];
    const double dy = pair.surface[1] - pair.ground[1];
    if (!std::isfinite(dx) || !std::isfinite(dy)) {
        throw InvalidArgumentError("pose_from_pair: points must be finite");
    }

    PoseFromPairResult result;
    result.magnitude = std::hypot(dx, dy);
    if (result.magnitude < kDegenerateMagnitude) {
        result.degenerate = true;
        return result; // angle 0, scale 0
    }
    result.angle = wrap_angle(std::atan2(dy, dx));
    result.scale = result.magnitude / pair.height;
    return result;
}

FlowField flow_field(const GeocentricPose& pose)
{
    if (!(pose.scale >= 0.0) || !std::isfinite(pose.scale) || !std::isfinite(pose.angle)) {
        throw InvalidArgumentError("flow_field: pose scale must be finite and >= 0, angle finite");
    }
    const Raster& h = pose.heights;
    if (h.channels() != 1) {
        throw InvalidArgumentError("flow_field: heights must be a 1-channel raster");
    }
    const double ux = std::cos(pose.angle);
    const double uy = std::sin(pose.angle);

    FlowField flow{Raster::all_invalid(h.width(), h.height(), 2),
                   Raster::all_invalid(h.width(), h.height(), 1)};
    parallel_chunks(0, h.height(), [&](int row_begin, int row_end) {
        for (int y = row_begin; y < row_end; ++y) {
            for (int x = 0; x < h.width(); ++x) {
                if (!h.valid(x, y)) {
                    continue;
                }
                const double height = h.at(x, y);
                if (!(height >= 0.0) || !std::isfinite(height)) {
                    throw InvalidArgumentError("flow_field: valid heights must be finite and >= 0");
                }
                const double magnitude = pose.scale * height;
                flow.vectors.at(x, y, 0) = magnitude * ux;
                flow.vectors.at(x, y, 1) = magnitude * uy;
                flow.magnitudes.at(x, y) = magnitude;
            }
        }
    });
    return flow;
}

} // namespace geopose
