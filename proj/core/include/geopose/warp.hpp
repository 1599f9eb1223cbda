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
#include <functional>

namespace geopose {

/// Resampling kernel. Bilinear for continuous data (RGB, heights), nearest
/// for categorical labels and instance ids.
enum class Interp {
    kNearest,
    kBilinear,
};

/// Maps an output pixel to fractional source coordinates. Integer coordinates
/// are pixel centers. Returning NaN marks the output pixel invalid.
using InverseMap = std::function<std::array<double, 2>(int x, int y)>;

/// Maps a source pixel to fractional destination coordinates.
using ForwardMap = std::function<std::array<double, 2>(int x, int y)>;

/// Inverse-map resampling: output[p] = src interpolated at map(p).
///
/// Bilinear samples are invalid if any source pixel with nonzero weight is
/// invalid or out of bounds; nearest samples follow the validity of the single
/// nearest pixel. out_width/out_height of 0 mean "same as src". Output rows
/// are computed in parallel; the result is identical for any thread count.
Raster remap_inverse(const Raster& src, const InverseMap& map, Interp interp,
                     int out_width = 0, int out_height = 0);

struct SplatResult {
    Raster raster;   ///< winning source values; invalid where nothing landed
    Raster hit_mask; ///< 1-channel 0/1: cell received at least one splat
};

/// Forward splatting with a z-buffer.
///
/// Every valid source pixel writes its values to round(dest_of(p)); collisions
/// keep the highest priority, ties the lowest row-major source index, so the
/// winner is a total order and the output is bit-identical for any internal
/// tiling. Out-of-bounds destinations are dropped. priority must be a
/// congruent 1-channel raster, finite on valid source pixels.
SplatResult splat_forward(const Raster& src, const ForwardMap& dest_of, const Raster& priority,
                          int out_width = 0, int out_height = 0);

} // namespace geopose
