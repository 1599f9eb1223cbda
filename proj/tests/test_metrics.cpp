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
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace geopose {
namespace {

    using testing::uniform;

    TEST(ErrorStats, ZeroForIdenticalInputs)
    {
        std::mt19937_64 rng(1);
        const Raster r = testing::random_raster(rng, 12, 9, 1, -4, 4, 0.2);
        const auto report = error_stats(r, r);
        EXPECT_DOUBLE_EQ(report.rmse, 0.0);
        EXPECT_DOUBLE_EQ(report.mae, 0.0);
        EXPECT_EQ(report.n, r.valid_count());
    }

    TEST(ErrorStats, ConstantError)
    {
        const Raster pred(5, 5, 1, 3.0);
        const Raster ref(5, 5, 1, 1.0);
        const auto report = error_stats(pred, ref);
        EXPECT_DOUBLE_EQ(report.rmse, 2.0);
        EXPECT_DOUBLE_EQ(report.mae, 2.0);
    }

    TEST(ErrorStats, MixedError)
    {
        Raster pred(2, 1, 1);
        pred.at(0, 0) = 0.0;
        pred.at(1, 0) = 3.0;
        const Raster ref(2, 1, 1, 0.0);
        const auto report = error_stats(pred, ref);
        EXPECT_NEAR(report.rmse, std::sqrt(4.5), 1e-12);
        EXPECT_DOUBLE_EQ(report.mae, 1.5);
    }

    TEST(ErrorStats, EmptyComparisonThrows)
    {
        const Raster pred = Raster::all_invalid(4, 4, 1);
        const Raster ref(4, 4, 1, 1.0);
        EXPECT_THROW(error_stats(pred, ref), EmptyComparisonError);
    }

    TEST(ErrorStats, RmseAtLeastMae)
    {
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 100; ++trial) {
            const Raster pred = testing::random_raster(rng, 10, 10, 1, -50, 50);
            const Raster ref = testing::random_raster(rng, 10, 10, 1, -50, 50);
            const auto report = error_stats(pred, ref);
            EXPECT_GE(report.rmse, report.mae - 1e-12);
        }
    }

    TEST(AngleRmse, IdenticalIsZero)
    {
        EXPECT_DOUBLE_EQ(angle_rmse_deg({0.3, -1.2}, {0.3, -1.2}), 0.0);
    }

    TEST(AngleRmse, WrapsAroundFullCircle)
    {
        const double deg = std::numbers::pi / 180.0;
        EXPECT_NEAR(angle_rmse_deg({359.0 * deg}, {1.0 * deg}), 2.0, 1e-9);
        EXPECT_DOUBLE_EQ(angle_rmse_deg({0.7}, {0.7 + 2 * std::numbers::pi}), 0.0);
    }

    TEST(AngleRmse, AntipodalIsMaximal)
    {
        EXPECT_NEAR(angle_rmse_deg({0.4}, {0.4 + std::numbers::pi}), 180.0, 1e-9);
    }

    TEST(AngleRmse, EmptyThrows)
    {
        EXPECT_THROW(angle_rmse_deg({}, {}), EmptyComparisonError);
    }

    FlowField constant_flow(int w, int h, double vx, double vy)
    {
        FlowField flow{Raster(w, h, 2), Raster(w, h, 1)};
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                flow.vectors.at(x, y, 0) = vx;
                flow.vectors.at(x, y, 1) = vy;
                flow.magnitudes.at(x, y) = std::hypot(vx, vy);
            }
        }
        return flow;
    }

    TEST(EndpointRmse, ZeroAndConstantOffsets)
    {
        const FlowField a = constant_flow(8, 6, 2.0, -1.0);
        EXPECT_DOUBLE_EQ(endpoint_rmse(a, a), 0.0);

        const FlowField b = constant_flow(8, 6, 5.0, 3.0); // difference (3, 4)
        EXPECT_DOUBLE_EQ(endpoint_rmse(a, b), 5.0);
        EXPECT_DOUBLE_EQ(endpoint_rmse(b, a), endpoint_rmse(a, b));
    }

    TEST(EndpointRmse, SameAngleUnitMagnitudeGap)
    {
        const double theta = 0.83;
        const FlowField a = constant_flow(4, 4, 3.0 * std::cos(theta), 3.0 * std::sin(theta));
        const FlowField b = constant_flow(4, 4, 4.0 * std::cos(theta), 4.0 * std::sin(theta));
        EXPECT_NEAR(endpoint_rmse(a, b), 1.0, 1e-12);
    }

    TEST(RSquared, PerfectPrediction)
    {
        const auto result = r_squared(std::vector<double>{1.0, 2.0, 3.0}, {1.0, 2.0, 3.0});
        EXPECT_DOUBLE_EQ(result.r2, 1.0);
        EXPECT_DOUBLE_EQ(result.rss, 0.0);
    }

    TEST(RSquared, PredictingTheMeanScoresZero)
    {
        const auto result = r_squared(std::vector<double>{2.0, 2.0, 2.0}, {1.0, 2.0, 3.0});
        EXPECT_DOUBLE_EQ(result.r2, 0.0);
        EXPECT_DOUBLE_EQ(result.rss, result.tss);
    }

    TEST(RSquared, NegativeValuesClipToZero)
    {
        // Anti-correlated predictions: rss > tss.
        const auto result = r_squared(std::vector<double>{3.0, 2.0, 1.0}, {1.0, 2.0, 3.0});
        EXPECT_GT(result.rss, result.tss);
        EXPECT_DOUBLE_EQ(result.r2, 0.0);
    }

    TEST(RSquared, ZeroVarianceReference)
    {
        EXPECT_DOUBLE_EQ(r_squared(std::vector<double>{5.0, 5.0}, {5.0, 5.0}).r2, 1.0);
        EXPECT_DOUBLE_EQ(r_squared(std::vector<double>{5.0, 6.0}, {5.0, 5.0}).r2, 0.0);
    }

    TEST(RSquared, InvariantToCommonScaling)
    {
        std::mt19937_64 rng(3);
        std::vector<double> pred;
        std::vector<double> ref;
        for (int i = 0; i < 64; ++i) {
            pred.push_back(uniform(rng, 0, 10));
            ref.push_back(uniform(rng, 0, 10));
        }
        const double base = r_squared(pred, ref).r2;
        std::vector<double> pred_scaled;
        std::vector<double> ref_scaled;
        for (int i = 0; i < 64; ++i) {
            pred_scaled.push_back(3.7 * pred[i]);
            ref_scaled.push_back(3.7 * ref[i]);
        }
        EXPECT_NEAR(r_squared(pred_scaled, ref_scaled).r2, base, 1e-12);

        std::vector<double> pred_shifted;
        std::vector<double> ref_shifted;
        for (int i = 0; i < 64; ++i) {
            pred_shifted.push_back(pred[i] + 11.0);
            ref_shifted.push_back(ref[i] + 11.0);
        }
        EXPECT_NEAR(r_squared(pred_shifted, ref_shifted).r2, base, 1e-10);
    }

    TEST(RSquared, RequiresTwoSamples)
    {
        EXPECT_THROW(r_squared(std::vector<double>{1.0}, {1.0}), InsufficientDataError);
    }

    Raster id_square(int w, int h, int id, int x0, int y0, int x1, int y1)
    {
        Raster r(w, h, 1, 0.0);
        for (int y = y0; y < y1; ++y) {
            for (int x = x0; x < x1; ++x) {
                r.at(x, y) = static_cast<double>(id);
            }
        }
        return r;
    }

    TEST(InstanceIoU, IdenticalMasksScoreOne)
    {
        const Raster mask = id_square(32, 32, 1, 4, 4, 14, 14);
        const FlowField flow = constant_flow(32, 32, 1.0, 0.0);
        const auto analysis = instance_iou_analysis(mask, mask, mask, mask, flow, {0.0});
        ASSERT_EQ(analysis.records.size(), 1u);
        EXPECT_EQ(analysis.records[0].instance_id, 1);
        EXPECT_DOUBLE_EQ(analysis.records[0].iou_unrectified, 1.0);
        EXPECT_DOUBLE_EQ(analysis.records[0].iou_rectified, 1.0);
        EXPECT_TRUE(analysis.records[0].included);
        ASSERT_EQ(analysis.rms_iou_curve.size(), 1u);
        EXPECT_DOUBLE_EQ(analysis.rms_iou_curve[0].rms_iou, 1.0);
    }

    TEST(InstanceIoU, DisjointMasksScoreZero)
    {
        const Raster footprint = id_square(32, 32, 1, 2, 2, 10, 10);
        const Raster shifted = id_square(32, 32, 1, 20, 20, 28, 28);
        const FlowField flow = constant_flow(32, 32, 0.0, 0.0);
        const auto analysis =
            instance_iou_analysis(shifted, shifted, footprint, footprint, flow, {});
        ASSERT_EQ(analysis.records.size(), 1u);
        EXPECT_DOUBLE_EQ(analysis.records[0].iou_rectified, 0.0);
        EXPECT_TRUE(analysis.records[0].included); // gt warp == footprint here
    }

    TEST(InstanceIoU, HalfShiftedSquareScoresOneThird)
    {
        // 10x10 square shifted by 5 px: overlap 50, union 150.
        const Raster footprint = id_square(32, 32, 1, 5, 5, 15, 15);
        const Raster shifted = id_square(32, 32, 1, 10, 5, 20, 15);
        const FlowField flow = constant_flow(32, 32, 0.0, 0.0);
        const auto analysis =
            instance_iou_analysis(shifted, shifted, footprint, footprint, flow, {});
        ASSERT_EQ(analysis.records.size(), 1u);
        EXPECT_NEAR(analysis.records[0].iou_rectified, 1.0 / 3.0, 1e-12);
    }

    TEST(InstanceIoU, MissingFootprintIsSkippedNotFatal)
    {
        const Raster footprint = id_square(32, 32, 1, 2, 2, 10, 10);
        Raster mask = id_square(32, 32, 1, 2, 2, 10, 10);
        for (int y = 20; y < 24; ++y) {
            for (int x = 20; x < 24; ++x) {
                mask.at(x, y) = 9.0; // id 9 has no footprint
            }
        }
        const FlowField flow = constant_flow(32, 32, 1.0, 0.0);
        const auto analysis = instance_iou_analysis(mask, mask, mask, footprint, flow, {});
        ASSERT_EQ(analysis.records.size(), 1u);
        ASSERT_EQ(analysis.skipped_ids.size(), 1u);
        EXPECT_EQ(analysis.skipped_ids[0], 9);
    }

    TEST(InstanceIoU, CurveFiltersByMagnitudeAndInclusion)
    {
        // Two instances: id 1 barely moves (max magnitude 2), id 2 moves far
        // (max magnitude 20). Rectified id 2 misses its footprint; its
        // gt-warp matches, so it stays included and drags the curve down at
        // low thresholds only.
        Raster footprints(64, 64, 1, 0.0);
        Raster unrect(64, 64, 1, 0.0);
        Raster rect(64, 64, 1, 0.0);
        Raster gt_warp(64, 64, 1, 0.0);
        FlowField flow = constant_flow(64, 64, 0.0, 0.0);
        // id 1: everything agrees.
        for (int y = 4; y < 12; ++y) {
            for (int x = 4; x < 12; ++x) {
                footprints.at(x, y) = 1;
                unrect.at(x, y) = 1;
                rect.at(x, y) = 1;
                gt_warp.at(x, y) = 1;
                flow.magnitudes.at(x, y) = 2.0;
            }
        }
        // id 2: rectified landed elsewhere.
        for (int y = 30; y < 40; ++y) {
            for (int x = 30; x < 40; ++x) {
                footprints.at(x, y) = 2;
                gt_warp.at(x, y) = 2;
            }
        }
        for (int y = 30; y < 40; ++y) {
            for (int x = 50; x < 60; ++x) {
                unrect.at(x, y) = 2;
                rect.at(x, y) = 2;
                flow.magnitudes.at(x, y) = 20.0;
            }
        }
        const auto analysis =
            instance_iou_analysis(unrect, rect, gt_warp, footprints, flow, {0.0, 10.0});
        ASSERT_EQ(analysis.records.size(), 2u);
        ASSERT_EQ(analysis.rms_iou_curve.size(), 2u);
        // Threshold 0: both included -> rms of {1, 0}.
        EXPECT_NEAR(analysis.rms_iou_curve[0].rms_iou, std::sqrt(0.5), 1e-12);
        EXPECT_EQ(analysis.rms_iou_curve[0].n, 2u);
        // Threshold 10: only the far-moving instance qualifies.
        EXPECT_DOUBLE_EQ(analysis.rms_iou_curve[1].rms_iou, 0.0);
        EXPECT_EQ(analysis.rms_iou_curve[1].n, 1u);
    }

} // namespace
} // namespace geopose
