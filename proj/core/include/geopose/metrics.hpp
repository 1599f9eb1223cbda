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

#include <cstddef>
#include <vector>

namespace geopose {

struct MetricsReport {
    double rmse = 0.0;
    double mae = 0.0;
    std::size_t n = 0; ///< jointly valid pixels compared
};

/// RMSE and MAE over jointly valid pixels of channel 0. Throws
/// EmptyComparisonError when no pixel is jointly valid.
MetricsReport error_stats(const Raster& pred, const Raster& ref);

/// RMSE in degrees of per-pair angular error, each error wrapped into
/// (-pi, pi] before squaring, so 359 deg vs 1 deg scores 2 deg. Throws
/// EmptyComparisonError on empty input, InvalidArgumentError on length
/// mismatch.
double angle_rmse_deg(const std::vector<double>& pred_rad, const std::vector<double>& ref_rad);

/// RMSE over jointly valid pixels of the Euclidean distance between flow
/// vectors. Throws EmptyComparisonError when nothing is jointly valid.
double endpoint_rmse(const FlowField& pred, const FlowField& ref);

struct R2Result {
    double r2 = 0.0; ///< in [0, 1]
    double rss = 0.0;
    double tss = 0.0;
};

/// Coefficient of determination, clipped: r2 = max(0, 1 - rss/tss) with tss
/// taken against the reference mean. tss == 0 yields 1 when rss == 0, else
/// 0. Requires n >= 2 (InsufficientDataError otherwise).
R2Result r_squared(const std::vector<double>& pred, const std::vector<double>& ref);

/// r_squared over jointly valid pixels of channel 0.
R2Result r_squared(const Raster& pred, const Raster& ref);

struct InstanceIoURecord {
    int instance_id = 0;
    double iou_unrectified = 0.0;
    double iou_rectified = 0.0;
    double max_magnitude = 0.0; ///< max reference flow magnitude inside the instance
    bool included = false;      ///< ground-truth-warp IoU >= 0.9
};

struct RmsIoUPoint {
    double threshold = 0.0; ///< minimum max_magnitude, pixels
    double rms_iou = 0.0;   ///< RMS of rectified IoUs over qualifying instances
    std::size_t n = 0;
};

struct InstanceIoUAnalysis {
    std::vector<InstanceIoURecord> records;
    std::vector<RmsIoUPoint> rms_iou_curve;
    std::vector<int> skipped_ids; ///< present in a mask but lacking a footprint
};

/// Per-instance IoU of unrectified and rectified masks against footprints,
/// ranked by the reference flow magnitude inside each instance. Instances
/// whose ground-truth-warped mask misses 0.9 IoU against the footprint are
/// excluded from the curve, which reports the RMS of rectified IoUs over
/// included instances at each magnitude threshold. Ids are matched across
/// masks; ids with no footprint are reported as skipped, not fatal.
InstanceIoUAnalysis instance_iou_analysis(const Raster& labels_unrect, const Raster& labels_rect,
                                          const Raster& labels_gt_warp, const Raster& footprints,
                                          const FlowField& flow_ref,
                                          const std::vector<double>& thresholds);

} // namespace geopose
