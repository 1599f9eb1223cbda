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
#include "geopose/synth.hpp"
#include "geopose/warp.hpp"

namespace geopose {

/// Ground-level elevation in meters, addressed on the orthorectified output
/// grid (pixel coordinates). Constant and planar forms are analytic; the
/// raster form samples bilinearly and clamps at the grid edge.
class ElevationModel {
  public:
    static ElevationModel constant(double z);
    static ElevationModel planar(double c, double gx, double gy);
    static ElevationModel from_raster(Raster z);

    /// Elevation at ortho pixel (qx, qy); NaN if a raster model is invalid there.
    double at(double qx, double qy) const;

    bool is_planar() const { return kind_ != Kind::kRaster; }
    double coeff_c() const { return c_; }
    double coeff_gx() const { return gx_; }
    double coeff_gy() const { return gy_; }

  private:
    enum class Kind { kConstant, kPlanar, kRaster };
    Kind kind_ = Kind::kConstant;
    double c_ = 0.0;
    double gx_ = 0.0;
    double gy_ = 0.0;
    Raster raster_;
};

/// Orthorectification setup: camera, output pixels-per-meter k, and optional
/// output extent (0 = same as input).
struct OrthoParams {
    AffineCamera camera;
    double k = 1.0;
    int out_width = 0;
    int out_height = 0;
};

/// Remaps an image onto the ground-aligned grid: output pixel q samples the
/// input at p = A2x2 * (q / k) + col3 * z0(q). Out-of-bounds sources are
/// invalid. Throws SingularCameraError when |det A2x2| < 1e-12 and
/// InvalidArgumentError when k <= 0.
Raster orthorectify(const Raster& image, const OrthoParams& params, const ElevationModel& elev,
                    Interp interp);

/// Exact inverse pixel map of orthorectify: output (image-plane) pixel p
/// samples the ortho raster at the q solving q = k * A2x2^-1 * (p - col3 *
/// z0(q)). Constant and planar elevation solve in closed form; raster
/// elevation iterates to fixed point. Round trips are identity up to
/// resampling. Same errors as orthorectify.
Raster ortho_inverse(const Raster& ortho, const OrthoParams& params, const ElevationModel& elev,
                     Interp interp);

struct OrthoPoseCheck {
    double scale = 0.0;         ///< pixels/meter fitted in ortho space
    double angle = 0.0;         ///< radians fitted in ortho space
    double max_deviation = 0.0; ///< max pairwise spread of per-pair scale vectors
};

/// Projects vertical point pairs from the scene's boxes through the camera,
/// maps them to ortho space, and fits a single (scale, angle). max_deviation
/// witnesses how affine the orthorectified view is: ~0 for constant or planar
/// elevation, larger otherwise. Requires at least 2 boxes with positive
/// height; throws InsufficientDataError otherwise.
OrthoPoseCheck ortho_pose_check(const SyntheticScene& scene, const AffineCamera& camera, double k,
                                const ElevationModel& elev);

} // namespace geopose
