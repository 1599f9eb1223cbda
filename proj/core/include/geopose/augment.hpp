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

#include "geopose/geometry.hpp"
#include "geopose/raster.hpp"
#include "geopose/warp.hpp"

namespace geopose {

/// What was applied to produce an augmented sample.
struct AugmentProvenance {
    double rotate_rad = 0.0;
    double scale_ratio = 1.0;
    double height_factor = 1.0;
};

/// An image with its geocentric pose and the matching flow field. flow is
/// always recomputed from the pose, so it satisfies the vector-field relation
/// exactly on valid pixels.
struct AugmentedSample {
    Raster image;
    GeocentricPose pose;
    FlowField flow;
    AugmentProvenance provenance;
};

/// Bundles an image and pose, deriving the flow field.
AugmentedSample make_sample(Raster image, GeocentricPose pose);

/// Rotates image and heights about the raster center; label angle becomes
/// wrap(angle - rotate_rad), scale is unchanged. Pixels whose source falls
/// outside the frame are invalid.
AugmentedSample rotate_augment(const AugmentedSample& sample, double rotate_rad, Interp interp);

/// Resamples by scale_ratio about the origin; output extent scales to match.
/// Label scale becomes scale_ratio * scale; heights keep their metric values.
/// Throws InvalidArgumentError if scale_ratio <= 0.
AugmentedSample scale_augment(const AugmentedSample& sample, double scale_ratio, Interp interp);

/// Multiplies building heights by height_factor by forward-splatting every
/// above-ground pixel along its pose direction to where the taller feature
/// would appear, with a height z-buffer (new height wins). Heights become
/// factor*h; newly revealed regions are invalid; shadows are not adjusted.
/// Scale and angle are unchanged. Throws InvalidArgumentError if
/// height_factor < 0.
AugmentedSample height_augment(const AugmentedSample& sample, double height_factor);

} // namespace geopose
