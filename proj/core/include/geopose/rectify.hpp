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

namespace geopose {

/// Both modes splat whole source values to the nearest destination cell (no
/// blending), keeping categorical labels crisp; the enum documents caller
/// intent at the call site.
enum class RectifyMode {
    kContinuous,
    kCategorical,
};

struct RectifiedBundle {
    Raster rectified;
    OcclusionMap occlusion; ///< cells that received no splat
    Raster hit_mask;        ///< 1-channel 0/1
};

/// Splats every valid pixel down its pose vector to ground level:
/// p -> p - s*h*(cos angle, sin angle), z-buffer priority = height (taller
/// wins, so structures overwrite the ground strip they cover). Occlusion
/// marks cells no source pixel reached: ground that was hidden behind
/// above-ground features in the source view. pose.heights must be congruent
/// with the input raster; a pixel moves only if both are valid there.
RectifiedBundle rectify_to_ground(const Raster& raster, const GeocentricPose& pose,
                                  RectifyMode mode = RectifyMode::kContinuous);

/// rectify_to_ground in categorical mode, for segmentation/instance masks.
RectifiedBundle rectify_labels(const Raster& mask, const GeocentricPose& pose);

/// Odd-width median pre-filter for reference heights, to suppress tall,
/// narrowly occluding features before rectification. Invalid pixels stay
/// invalid and do not enter neighbors' medians. width == 1 is the identity.
/// Throws InvalidArgumentError for even or non-positive widths.
Raster median_filter_heights(const Raster& heights, int width);

} // namespace geopose
