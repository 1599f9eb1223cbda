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

#include "geopose/metrics.hpp"

#include "geopose/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace geopose {

MetricsReport error_stats(const Raster& pred, const Raster& ref)
{
    require_congruent(pred, ref, "error_stats");
    MetricsReport report;
    double sq = 0.0;
    double abs = 0.0;
    for (int y = 0; y < pred.height(); ++y) {
        for (int x = 0; x < pred.width(); ++x) {
            if (!pred.valid(x, y) || !ref.valid(x, y)) {
                continue;
            }
            const double e = pred.at(x, y) - ref.at(x, y);
            sq += e * e;
            abs += std::abs(e);
            ++report.n;
        }
    }
    if (report.n == 0) {
        throw EmptyComparisonError("error_stats: no jointly valid pixels");
    }
    report.rmse = std::sqrt(sq / static_cast<double>(report.n));
    report.mae = abs / static_cast<double>(report.n);
    return report;
}

double angle_rmse_deg(const std::vector<double>& pred_rad, const std::vector<double>& ref_rad)
{
    if (pred_rad.size() != ref_rad.size()) {
        throw InvalidArgumentError("angle_rmse_deg: length mismatch");
    }
    if (pred_rad.empty()) {
        throw EmptyComparisonError("angle_rmse_deg: no samples");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < pred_rad.size(); ++i) {
        // remainder wraps into [-pi, pi]; the sign convention at exactly pi
        // does not affect the square.
        const double e = std::remainder(pred_rad[i] - ref_rad[i], 2.0 * std::numbers::pi);
        sq += e * e;
    }
    const double rmse_rad = std::sqrt(sq / static_cast<double>(pred_rad.size()));
    return rmse_rad * 180.0 / std::numbers::pi;
}

double endpoint_rmse(const FlowField& pred, const FlowField& ref)
{
    require_congruent(pred.vectors, ref.vectors, "endpoint_rmse");
    double sq = 0.0;
    std::size_t n = 0;
    for (int y = 0; y < pred.vectors.height(); ++y) {
        for (int x = 0; x < pred.vectors.width(); ++x) {
            if (!pred.vectors.valid(x, y) || !ref.vectors.valid(x, y)) {
                continue;
            }
            const double ex = pred.vectors.at(x, y, 0) - ref.vectors.at(x, y, 0);
            const double ey = pred.vectors.at(x, y, 1) - ref.vectors.at(x, y, 1);
            sq += ex * ex + ey * ey;
            ++n;
        }
    }
    if (n == 0) {
        throw EmptyComparisonError("endpoint_rmse: no jointly valid pixels");
    }
    return std::sqrt(sq / static_cast<double>(n));
}

R2Result r_squared(const std::vector<double>& pred, const std::vector<double>& ref)
{
    if (pred.size() != ref.size()) {
        throw InvalidArgumentError("r_squared: length mismatch");
    }
    if (pred.size() < 2) {
        throw InsufficientDataError("r_squared: need at least 2 samples");
    }
    double mean = 0.0;
    for (double v : ref) {
        mean += v;
    }
    mean /= static_cast<double>(ref.size());

    R2Result result;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double r = ref[i] - pred[i];
        const double t = ref[i] - mean;
        result.rss += r * r;
        result.tss += t * t;
    }
    if (result.tss > 0.0) {
        result.r2 = std::max(0.0, 1.0 - result.rss / result.tss);
    } else {
        result.r2 = result.rss == 0.0 ? 1.0 : 0.0;
    }
    return result;
}

R2Result r_squared(const Raster& pred, const Raster& ref)
{
    require_congruent(pred, ref, "r_squared");
    std::vector<double> p;
    std::vector<double> r;
    for (int y = 0; y < pred.height(); ++y) {
        for (int x = 0; x < pred.width(); ++x) {
            if (!pred.valid(x, y) || !ref.valid(x, y)) {
                continue;
            }
            p.push_back(pred.at(x, y));
            r.push_back(ref.at(x, y));
        }
    }
    if (p.size() < 2) {
        throw InsufficientDataError("r_squared: fewer than 2 jointly valid pixels");
    }
    return r_squared(p, r);
}

namespace {

    struct InstanceCounts {
        std::size_t unrect_inter = 0, unrect_union = 0;
        std::size_t rect_inter = 0, rect_union = 0;
        std::size_t warp_inter = 0, warp_union = 0;
        std::size_t footprint_pixels = 0;
        double max_magnitude = 0.0;
    };

    int id_at(const Raster& raster, int x, int y)
    {
        if (!raster.valid(x, y)) {
            return 0;
        }
        return static_cast<int>(std::lround(raster.at(x, y)));
    }

    double iou(std::size_t inter, std::size_t uni)
    {
        return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
    }

} // namespace

InstanceIoUAnalysis instance_iou_analysis(const Raster& labels_unrect, const Raster& labels_rect,
                                          const Raster& labels_gt_warp, const Raster& footprints,
                                          const FlowField& flow_ref,
                                          const std::vector<double>& thresholds)
{
    require_congruent(labels_unrect, footprints, "instance_iou_analysis");
    require_congruent(labels_rect, footprints, "instance_iou_analysis");
    require_congruent(labels_gt_warp, footprints, "instance_iou_analysis");
    if (flow_ref.magnitudes.width() != footprints.width() ||
        flow_ref.magnitudes.height() != footprints.height()) {
        throw InvalidArgumentError("instance_iou_analysis: flow magnitudes extent mismatch");
    }

    // Single pass: a pixel contributes to every distinct id it carries in
    // any of the four rasters, so intersections and unions are exact.
    std::map<int, InstanceCounts> counts;
    for (int y = 0; y < footprints.height(); ++y) {
        for (int x = 0; x < footprints.width(); ++x) {
            const int fp = id_at(footprints, x, y);
            const int un = id_at(labels_unrect, x, y);
            const int re = id_at(labels_rect, x, y);
            const int gw = id_at(labels_gt_warp, x, y);
            const int ids[4] = {fp, un, re, gw};
            for (int i = 0; i < 4; ++i) {
                const int id = ids[i];
                if (id == 0) {
                    continue;
                }
                bool seen = false;
                for (int j = 0; j < i; ++j) {
                    seen = seen || ids[j] == id;
                }
                if (seen) {
                    continue;
                }
                InstanceCounts& c = counts[id];
                const bool in_fp = fp == id;
                const bool in_un = un == id;
                const bool in_re = re == id;
                const bool in_gw = gw == id;
                c.footprint_pixels += in_fp;
                c.unrect_union += in_un || in_fp;
                c.unrect_inter += in_un && in_fp;
                c.rect_union += in_re || in_fp;
                c.rect_inter += in_re && in_fp;
                c.warp_union += in_gw || in_fp;
                c.warp_inter += in_gw && in_fp;
                // The source-view instance region ranks the instance by how
                // far rectification moves it.
                if (in_un && flow_ref.magnitudes.valid(x, y)) {
                    c.max_magnitude = std::max(c.max_magnitude, flow_ref.magnitudes.at(x, y));
                }
            }
        }
    }

    InstanceIoUAnalysis analysis;
    for (const auto& [id, c] : counts) {
        if (c.footprint_pixels == 0) {
            analysis.skipped_ids.push_back(id);
            continue;
        }
        InstanceIoURecord record;
        record.instance_id = id;
        record.iou_unrectified = iou(c.unrect_inter, c.unrect_union);
        record.iou_rectified = iou(c.rect_inter, c.rect_union);
        record.max_magnitude = c.max_magnitude;
        record.included = iou(c.warp_inter, c.warp_union) >= 0.9;
        analysis.records.push_back(record);
    }

    for (const double threshold : thresholds) {
        RmsIoUPoint point;
        point.threshold = threshold;
        double sq = 0.0;
        for (const auto& record : analysis.records) {
            if (record.included && record.max_magnitude >= threshold) {
                sq += record.iou_rectified * record.iou_rectified;
                ++point.n;
            }
        }
        point.rms_iou = point.n == 0 ? 0.0 : std::sqrt(sq / static_cast<double>(point.n));
        analysis.rms_iou_curve.push_back(point);
    }
    return analysis;
}

} // namespace geopose
