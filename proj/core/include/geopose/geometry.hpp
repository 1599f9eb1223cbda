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

#pragma once

#include "geopose/raster.hpp"

#include <array>

namespace geopose {

// Image coordinate frame throughout the library: x is the column index
// increasing right, y is the row index increasing down, and angles are
// measured in that frame. The stored pose angle points from a pixel's ground
// location toward its raised surface location; applying a vector to map a
// surface pixel back to ground therefore negates it.

/// Magnitudes below this (pixels) are treated as nadir: scale 0, angle 0.
inline constexpr double kDegenerateMagnitude = 1e-9;

/// Wraps an angle into [-pi, pi).
double wrap_angle(double radians);

/// 2x3 affine projection: rows map world (X,Y,Z) in meters to (x,y) pixels.
struct AffineCamera {
    // Row-major: a[0..2] is the x row, a[3..5] the y row.
    std::array<double, 6> a{1, 0, 0, 0, 1, 0};

    static AffineCamera from_rows(const std::array<double, 3>& row_x,
                                  const std::array<double, 3>& row_y);

    double det2x2() const { return a[0] * a[4] - a[1] * a[3]; }
    std::array<double, 2> col3() const { return {a[2], a[5]}; }
};

/// Exact matrix-vector product; no rounding to integer pixels.
/// Throws InvalidArgumentError on non-finite input.
std::array<double, 2> project(const AffineCamera& camera, const std::array<double, 3>& world);

/// A ground pixel, the surface pixel vertically above it, and their height
/// separation in meters. height must be positive for pose extraction.
struct PointPair {
    std::array<double, 2> ground;
    std::array<double, 2> surface;
    double height = 0.0;
};

struct PoseFromPairResult {
    double angle = 0.0;     ///< radians in [-pi, pi), ground toward surface
    double magnitude = 0.0; ///< pixels
    double scale = 0.0;     ///< pixels/meter
    bool degenerate = false;
};

/// Extracts (angle, magnitude, scale) from one vertical correspondence.
/// Nadir pairs (magnitude < kDegenerateMagnitude) return scale 0 and angle 0
/// with the degenerate flag set rather than an error, since zero scale is a
/// legitimate viewing geometry. Throws InvalidArgumentError if height <= 0.
PoseFromPairResult pose_from_pair(const PointPair& pair);

/// Image-level scale and angle plus the per-pixel AGL height raster.
struct GeocentricPose {
    double scale = 0.0; ///< pixels/meter, >= 0 (0 at nadir)
    double angle = 0.0; ///< radians in [-pi, pi)
    Raster heights;     ///< meters above ground, >= 0 where valid
};

/// Per-pixel vector s*h*(cos angle, sin angle) and magnitude s*h. Pixels with
/// invalid height produce invalid flow. Throws InvalidArgumentError if the
/// pose violates its invariants (negative scale, negative or non-finite
/// valid heights).
FlowField flow_field(const GeocentricPose& pose);

} // namespace geopose
