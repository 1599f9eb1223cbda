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

#include "geopose/geometry.hpp"

#include "geopose/errors.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace geopose {
namespace {

    using testing::uniform;

    TEST(Project, NadirCameraDropsZ)
    {
        const auto camera = AffineCamera::from_rows({1, 0, 0}, {0, 1, 0});
        const auto p = project(camera, {3, 4, 7});
        EXPECT_DOUBLE_EQ(p[0], 3.0);
        EXPECT_DOUBLE_EQ(p[1], 4.0);
    }

    TEST(Project, ThirdColumnScalesZ)
    {
        const auto camera = AffineCamera::from_rows({1, 0, 0.5}, {0, 1, 0});
        const auto p = project(camera, {0, 0, 2});
        EXPECT_DOUBLE_EQ(p[0], 1.0);
        EXPECT_DOUBLE_EQ(p[1], 0.0);
    }

    TEST(Project, GeneralMatrix)
    {
        // Hand multiply: (2*1 + 1*2 + 0.3*10, 0 + 2 - 0.2*10) = (7, 0).
        const auto camera = AffineCamera::from_rows({2, 1, 0.3}, {0, 1, -0.2});
        const auto p = project(camera, {1, 2, 10});
        EXPECT_DOUBLE_EQ(p[0], 7.0);
        EXPECT_DOUBLE_EQ(p[1], 0.0);
    }

    TEST(Project, NonFiniteInputThrows)
    {
        const auto camera = AffineCamera::from_rows({1, 0, 0}, {0, 1, 0});
        EXPECT_THROW(project(camera, {std::nan(""), 0, 0}), InvalidArgumentError);
        EXPECT_THROW(project(camera, {0, std::numeric_limits<double>::infinity(), 0}),
                     InvalidArgumentError);
    }

    TEST(Project, ParallelismOfVerticalSegments)
    {
        // Two vertical segments of equal height project to equal displacement
        // vectors under any affine camera.
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const auto camera = AffineCamera::from_rows(
                {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)},
                {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)});
            const double h = uniform(rng, 0.5, 100);
            const std::array<double, 3> base_a{uniform(rng, -50, 50), uniform(rng, -50, 50),
                                               uniform(rng, -10, 10)};
            const std::array<double, 3> base_b{uniform(rng, -50, 50), uniform(rng, -50, 50),
                                               uniform(rng, -10, 10)};
            const auto a0 = project(camera, base_a);
            const auto a1 = project(camera, {base_a[0], base_a[1], base_a[2] + h});
            const auto b0 = project(camera, base_b);
            const auto b1 = project(camera, {base_b[0], base_b[1], base_b[2] + h});
            EXPECT_NEAR(a1[0] - a0[0], b1[0] - b0[0], 1e-9);
            EXPECT_NEAR(a1[1] - a0[1], b1[1] - b0[1], 1e-9);
        }
    }

    TEST(PoseFromPair, ThreeFourFiveTriangle)
    {
        const auto result = pose_from_pair({{0, 0}, {3, 4}, 5.0});
        EXPECT_FALSE(result.degenerate);
        EXPECT_NEAR(result.angle, std::atan2(4.0, 3.0), 1e-15);
        EXPECT_NEAR(result.angle, 0.92730, 1e-5);
        EXPECT_DOUBLE_EQ(result.magnitude, 5.0);
        EXPECT_DOUBLE_EQ(result.scale, 1.0);
    }

    TEST(PoseFromPair, NadirIsDegenerateNotError)
    {
        const auto result = pose_from_pair({{5, 5}, {5, 5}, 10.0});
        EXPECT_TRUE(result.degenerate);
        EXPECT_DOUBLE_EQ(result.angle, 0.0);
        EXPECT_DOUBLE_EQ(result.magnitude, 0.0);
        EXPECT_DOUBLE_EQ(result.scale, 0.0);
    }

    TEST(PoseFromPair, VerticalDisplacement)
    {
        const auto result = pose_from_pair({{1, 1}, {1, -2}, 2.0});
        EXPECT_DOUBLE_EQ(result.angle, -std::numbers::pi / 2);
        EXPECT_DOUBLE_EQ(result.magnitude, 3.0);
        EXPECT_DOUBLE_EQ(result.scale, 1.5);
    }

    TEST(PoseFromPair, NonPositiveHeightThrows)
    {
        EXPECT_THROW(pose_from_pair({{0, 0}, {1, 1}, 0.0}), InvalidArgumentError);
        EXPECT_THROW(pose_from_pair({{0, 0}, {1, 1}, -3.0}), InvalidArgumentError);
    }

    TEST(PoseFromPair, RoundTripRecoversPose)
    {
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 1000; ++trial) {
            const double s = uniform(rng, 1e-6, 3.0);
            const double theta = uniform(rng, -std::numbers::pi, std::numbers::pi);
            const double h = uniform(rng, 1e-3, 200.0);
            const double gx = uniform(rng, -100, 100);
            const double gy = uniform(rng, -100, 100);
            const PointPair pair{{gx, gy},
                                 {gx + s * h * std::cos(theta), gy + s * h * std::sin(theta)},
                                 h};
            const auto result = pose_from_pair(pair);
            const double angle_error =
                std::abs(std::remainder(result.angle - theta, 2 * std::numbers::pi));
            EXPECT_LT(angle_error, 1e-9);
            EXPECT_NEAR(result.scale, s, 1e-9);
        }
    }

    TEST(FlowField, DirectExamples)
    {
        GeocentricPose pose{1.0, 0.0, Raster(1, 1, 1, 5.0)};
        auto flow = flow_field(pose);
        EXPECT_DOUBLE_EQ(flow.vectors.at(0, 0, 0), 5.0);
        EXPECT_DOUBLE_EQ(flow.vectors.at(0, 0, 1), 0.0);
        EXPECT_DOUBLE_EQ(flow.magnitudes.at(0, 0), 5.0);

        pose = GeocentricPose{0.5, std::numbers::pi / 2, Raster(1, 1, 1, 4.0)};
        flow = flow_field(pose);
        EXPECT_NEAR(flow.vectors.at(0, 0, 0), 0.0, 1e-12);
        EXPECT_DOUBLE_EQ(flow.vectors.at(0, 0, 1), 2.0);
        EXPECT_DOUBLE_EQ(flow.magnitudes.at(0, 0), 2.0);

        pose = GeocentricPose{2.0, 1.0, Raster(1, 1, 1, 0.0)};
        flow = flow_field(pose);
        EXPECT_DOUBLE_EQ(flow.vectors.at(0, 0, 0), 0.0);
        EXPECT_DOUBLE_EQ(flow.vectors.at(0, 0, 1), 0.0);
    }

    TEST(FlowField, InvalidHeightsProduceInvalidFlow)
    {
        Raster heights(3, 1, 1, 2.0);
        heights.set_invalid(1, 0);
        const auto flow = flow_field({1.0, 0.5, heights});
        EXPECT_TRUE(flow.vectors.valid(0, 0));
        EXPECT_FALSE(flow.vectors.valid(1, 0));
        EXPECT_FALSE(flow.magnitudes.valid(1, 0));
        EXPECT_TRUE(flow.vectors.valid(2, 0));
    }

    TEST(FlowField, MagnitudeMatchesScaleTimesHeight)
    {
        std::mt19937_64 rng(99);
        Raster heights = testing::random_raster(rng, 17, 13, 1, 0.0, 180.0, 0.2);
        const double s = 1.37;
        const double theta = uniform(rng, -3, 3);
        const auto flow = flow_field({s, theta, heights});
        for (int y = 0; y < heights.height(); ++y) {
            for (int x = 0; x < heights.width(); ++x) {
                if (!heights.valid(x, y)) {
                    continue;
                }
                const double expected = s * heights.at(x, y);
                const double vx = flow.vectors.at(x, y, 0);
                const double vy = flow.vectors.at(x, y, 1);
                EXPECT_NEAR(flow.magnitudes.at(x, y), expected,
                            1e-12 * std::max(1.0, std::abs(expected)));
                EXPECT_NEAR(std::hypot(vx, vy), expected, 1e-6);
            }
        }
    }

    TEST(FlowField, ScaleLinearityInHeight)
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const double s = uniform(rng, 0.0, 3.0);
            const double h = uniform(rng, 1e-3, 200.0);
            const double m1 = s * h;
            const double m2 = s * (2.0 * h);
            EXPECT_NEAR(m2, 2.0 * m1, 1e-12 * std::max(1.0, std::abs(m2)));
        }
    }

    TEST(FlowField, RejectsInvalidPose)
    {
        EXPECT_THROW(flow_field({-1.0, 0.0, Raster(2, 2, 1, 1.0)}), InvalidArgumentError);
        EXPECT_THROW(flow_field({1.0, 0.0, Raster(2, 2, 1, -1.0)}), InvalidArgumentError);
    }

    TEST(WrapAngle, WrapsToHalfOpenInterval)
    {
        EXPECT_DOUBLE_EQ(wrap_angle(std::numbers::pi), -std::numbers::pi);
        EXPECT_DOUBLE_EQ(wrap_angle(-std::numbers::pi), -std::numbers::pi);
        EXPECT_NEAR(wrap_angle(3 * std::numbers::pi / 2), -std::numbers::pi / 2, 1e-15);
        EXPECT_NEAR(wrap_angle(-3 * std::numbers::pi), -std::numbers::pi, 1e-15);
        EXPECT_DOUBLE_EQ(wrap_angle(0.25), 0.25);
    }

} // namespace
} // namespace geopose
