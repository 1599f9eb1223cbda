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

#include <cstdint>
#include <vector>

namespace geopose {

/// Axis-aligned box: footprint [x0,x1) x [y0,y1) in ground pixels, flat roof
/// at `height` meters AGL. Ground pixels equal world meters 1:1 here; the
/// box world is the ground-truth generator, not a georeferenced product.
struct Box {
    int id = 0; ///< unique, > 0
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;
    double height = 0.0;
};

struct SyntheticScene {
    int width = 0;  ///< ground grid extent, pixels
    int height = 0;
    std::vector<Box> boxes;
    // Planar ground elevation in meters over ground coordinates:
    // z0(X, Y) = terrain_c + terrain_gx * X + terrain_gy * Y.
    double terrain_c = 0.0;
    double terrain_gx = 0.0;
    double terrain_gy = 0.0;

    double ground_elevation(double x, double y) const
    {
        return terrain_c + terrain_gx * x + terrain_gy * y;
    }
    /// Height AGL and box id of the tallest box covering a ground cell
    /// (0 for open ground). Later boxes win exact height ties.
    void sample_ground(int x, int y, double& height_out, int& id_out) const;
};

struct SceneSpec {
    int n_boxes = 6;
    double min_height = 4.0; ///< meters
    double max_height = 60.0;
    int min_size = 4; ///< footprint edge, ground pixels
    int max_size = 40;
    int width = 128;
    int height = 128;
};

/// Deterministic box-world generator: the same seed always produces the same
/// scene, independent of platform. Boxes may overlap (taller wins at render).
/// Throws InvalidArgumentError on impossible specs (extent below 32x32,
/// empty ranges, min box size exceeding the extent).
SyntheticScene generate_scene(std::uint64_t seed, const SceneSpec& spec);

/// Everything the renderer knows about one view of a scene.
struct RenderBundle {
    Raster heights;              ///< image-space AGL meters; invalid = hidden side walls
    FlowField flow;              ///< exactly scale*heights along (cos,sin) angle
    Raster instances;            ///< image-space box ids, 0 = open ground
    Raster footprints;           ///< ground-truth undisplaced id map
    OcclusionMap occluded_ground;///< ground cells whose feature is unrecoverable from this view
    GeocentricPose pose;         ///< {s, theta, image-space heights}
    Raster image;                ///< deterministic shaded single-channel preview
};

/// Renders the scene under image-level scale s (pixels/meter) and parallel
/// projection angle theta. Every ground cell splats to
/// cell + s*h*(cos theta, sin theta) with a taller-wins z-buffer (ties to the
/// lowest row-major cell); untouched image cells are invalid. A ground cell
/// is occluded iff its own splat lost the z-buffer or left the frame.
/// Throws InvalidArgumentError if s < 0 or inputs are non-finite.
RenderBundle render(const SyntheticScene& scene, double s, double theta);

} // namespace geopose
