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

#include <vector>

namespace geopose {

/// Image-level scale from heights h and vector magnitudes m by least squares:
/// s = sum(h*m) / sum(h*h), summed over jointly valid pixels. Sums accumulate
/// in double precision regardless of source storage. Throws
/// DegenerateScaleError when sum(h*h) < 1e-12 (all-ground or empty mask).
double solve_scale(const Raster& heights, const Raster& magnitudes);

struct ScaleGradient {
    Raster ds_dh;
    Raster ds_dm;
};

/// Analytic gradients of solve_scale. With N = sum(h*m) and D = sum(h*h):
///   ds/dm_i = h_i / D
///   ds/dh_i = (m_i * D - 2 * h_i * N) / D^2
/// Gradients are zero at invalid pixels. Same degenerate error as solve_scale.
ScaleGradient solve_scale_gradient(const Raster& heights, const Raster& magnitudes);

/// Multi-task loss weights. The defaults normalize the value ranges of the
/// four terms.
struct LossWeights {
    double f_theta = 10.0;
    double f_s = 10.0;
    double f_h = 1.0;
    double f_m = 2.0;
};

/// Angle represented as (cos, sin) to avoid ambiguity at zero.
struct AngleEncoding {
    double cos_t = 1.0;
    double sin_t = 0.0;

    static AngleEncoding from_angle(double radians);
};

/// One image's pose terms for loss computation.
struct PoseSample {
    AngleEncoding angle;
    double scale = 0.0;
    Raster heights;
    Raster magnitudes;
};

struct LossBreakdown {
    double total = 0.0;
    double l_theta = 0.0;
    double l_s = 0.0;
    double l_h = 0.0;
    double l_m = 0.0;
};

/// Weighted sum L = f_theta*L_theta + f_s*L_s + f_h*L_h + f_m*L_m over a
/// batch of images.
///
/// L_theta is the per-image MSE over the two encoding channels, averaged over
/// the whole batch; L_s likewise. L_h and L_m are the mean over *labeled*
/// images of each image's pixel MSE (jointly valid pixels); unlabeled images
/// contribute zero to them but still contribute to L_theta and L_s. labeled
/// may be empty, meaning every image is labeled. Throws InvalidArgumentError
/// on an empty batch or mismatched sizes.
LossBreakdown total_loss(const std::vector<PoseSample>& pred, const std::vector<PoseSample>& ref,
                         const LossWeights& weights, const std::vector<bool>& labeled = {});

} // namespace geopose
