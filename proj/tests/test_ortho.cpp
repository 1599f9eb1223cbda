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

#include "geopose/ortho.hpp"

#include "geopose/errors.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace geopose {
namespace {

    using testing::bitwise_equal;
    using testing::uniform;

    Raster smooth_raster(int w, int h)
    {
        Raster r(w, h, 1);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                r.at(x, y) = 0.5 + 0.3 * std::sin(x / 16.0) * std::cos(y / 14.0);
            }
        }
        return r;
    }

    TEST(Orthorectify, IdentityCameraIsIdentity)
    {
        std::mt19937_64 rng(1);
        const Raster image = testing::random_raster(rng, 24, 20, 1, 0, 9, 0.1);
        OrthoParams params;
        params.camera = AffineCamera::from_rows({1, 0, 0}, {0, 1, 0});
        params.k = 1.0;
        // Any elevation model: the zero third column ignores it.
        const Raster out = orthorectify(image, params, ElevationModel::constant(123.0), Interp::kNearest);
        EXPECT_TRUE(bitwise_equal(out, image));
    }

    TEST(Orthorectify, ConstantElevationIsPureTranslation)
    {
        std::mt19937_64 rng(2);
        const Raster image = testing::random_raster(rng, 32, 16, 1, 0, 9);
        OrthoParams params;
        params.camera = AffineCamera::from_rows({1, 0, 0.5}, {0, 1, 0});
        params.k = 1.0;
        const Raster out = orthorectify(image, params, ElevationModel::constant(10.0), Interp::kNearest);
        // Output q samples input q + (5, 0).
        for (int y = 0; y < 16; ++y) {
            for (int x = 0; x < 32; ++x) {
                if (x + 5 < 32) {
                    EXPECT_DOUBLE_EQ(out.at(x, y), image.at(x + 5, y));
                } else {
                    EXPECT_FALSE(out.valid(x, y));
                }
            }
        }
    }

    TEST(Orthorectify, MagnificationMatchesNadirRerender)
    {
        // Scene imaged by a 2 px/m camera, orthorectified back to 1 px/m,
        // compared against a direct nadir unit-scale render.
        SceneSpec spec;
        spec.width = 64;
        spec.height = 64;
        spec.n_boxes = 4;
        const SyntheticScene scene = generate_scene(31, spec);
        const RenderBundle nadir = render(scene, 0.0, 0.0);

        // Camera image at 2 px/m: world (X, Y) lands at pixel (2X, 2Y).
        const InverseMap half = [](int x, int y) -> std::array<double, 2> {
            return {x / 2.0, y / 2.0};
        };
        const Raster camera_image = remap_inverse(nadir.image, half, Interp::kNearest, 128, 128);

        OrthoParams params;
        params.camera = AffineCamera::from_rows({2, 0, 0}, {0, 2, 0});
        params.k = 1.0;
        params.out_width = 64;
        params.out_height = 64;
        const Raster ortho =
            orthorectify(camera_image, params, ElevationModel::constant(0.0), Interp::kNearest);

        for (int y = 0; y < 64; ++y) {
            for (int x = 0; x < 64; ++x) {
                ASSERT_EQ(ortho.valid(x, y), nadir.image.valid(x, y));
                if (ortho.valid(x, y)) {
                    EXPECT_DOUBLE_EQ(ortho.at(x, y), nadir.image.at(x, y));
                }
            }
        }
    }

    TEST(Orthorectify, SingularCameraThrows)
    {
        OrthoParams params;
        params.camera = AffineCamera::from_rows({1, 2, 0}, {2, 4, 0});
        EXPECT_THROW(orthorectify(Raster(8, 8, 1, 1.0), params, ElevationModel::constant(0.0),
                                  Interp::kNearest),
                     SingularCameraError);
    }

    TEST(OrthoInverse, IdentityParams)
    {
        std::mt19937_64 rng(3);
        const Raster image = testing::random_raster(rng, 16, 16, 1, 0, 5, 0.2);
        OrthoParams params;
        const Raster out = ortho_inverse(image, params, ElevationModel::constant(0.0), Interp::kNearest);
        EXPECT_TRUE(bitwise_equal(out, image));
    }

    TEST(OrthoInverse, RoundTripConstantElevation)
    {
        const Raster image = smooth_raster(80, 72);
        OrthoParams params;
        params.camera = AffineCamera::from_rows({1.1, 0.08, 0.4}, {-0.05, 0.95, 0.25});
        params.k = 1.3;
        const ElevationModel elev = ElevationModel::constant(7.5);

        const Raster ortho = orthorectify(image, params, elev, Interp::kBilinear);
        const Raster back = ortho_inverse(ortho, params, elev, Interp::kBilinear);
        std::size_t compared = 0;
        for (int y = 0; y < 72; ++y) {
            for (int x = 0; x < 80; ++x) {
                if (!back.valid(x, y)) {
                    continue;
                }
                EXPECT_NEAR(back.at(x, y), image.at(x, y), 1e-3);
                ++compared;
            }
        }
        EXPECT_GT(compared, static_cast<std::size_t>(80 * 72 / 4));
    }

    TEST(OrthoInverse, RoundTripPlanarElevation)
    {
        const Raster image = smooth_raster(80, 72);
        OrthoParams params;
        params.camera = AffineCamera::from_rows({1.0, 0.0, 0.5}, {0.0, 1.0, -0.3});
        params.k = 1.0;
        const ElevationModel elev = ElevationModel::planar(2.0, 0.1, 0.0);

        const Raster ortho = orthorectify(image, params, elev, Interp::kBilinear);
        const Raster back = ortho_inverse(ortho, params, elev, Interp::kBilinear);
        std::size_t compared = 0;
        for (int y = 0; y < 72; ++y) {
            for (int x = 0; x < 80; ++x) {
                if (!back.valid(x, y)) {
                    continue;
                }
                EXPECT_NEAR(back.at(x, y), image.at(x, y), 1e-3);
                ++compared;
            }
        }
        EXPECT_GT(compared, static_cast<std::size_t>(80 * 72 / 4));
    }


    TEST(OrthoInverse, RejectsNonInvertiblePlanarGradient)
    {
        // With t = k * A^-1 * col3 = (1, 0), a gradient of (-1, 0) makes
        // (I + t g^T) singular: every meter of easting cancels itself.
        OrthoParams params;
        params.camera = AffineCamera::from_rows({1, 0, 1}, {0, 1, 0});
        params.k = 1.0;
        const ElevationModel elev = ElevationModel::planar(0.0, -1.0, 0.0);
        EXPECT_THROW(ortho_inverse(Raster(16, 16, 1, 1.0), params, elev, Interp::kNearest),
                     InvalidArgumentError);
    }

    SyntheticScene two_box_scene()
    {
        SyntheticScene scene;
        scene.width = 128;
        scene.height = 128;
        scene.boxes.push_back({1, 20, 24, 44, 48, 18.0});
        scene.boxes.push_back({2, 70, 60, 100, 92, 33.0});
        return scene;
    }

    TEST(OrthoPoseCheck, NadirCameraGivesZeroScale)
    {
        const auto result = ortho_pose_check(two_box_scene(),
                                             AffineCamera::from_rows({1, 0, 0}, {0, 1, 0}), 1.0,
                                             ElevationModel::constant(0.0));
        EXPECT_NEAR(result.scale, 0.0, 1e-12);
        EXPECT_NEAR(result.max_deviation, 0.0, 1e-12);
    }

    TEST(OrthoPoseCheck, ConstantElevationIsExactlyAffine)
    {
        // Generic camera: every pair agrees on the ortho-space pose.
        const auto camera = AffineCamera::from_rows({1.7, 0.3, 0.6}, {-0.2, 1.4, -0.35});
        const auto result =
            ortho_pose_check(two_box_scene(), camera, 1.0, ElevationModel::constant(12.0));
        EXPECT_LE(result.max_deviation, 1e-6);
    }

    TEST(OrthoPoseCheck, FlatTerrainPoseEquivalence)
    {
        // Metric, axis-aligned ground sampling (2x2 block g*I) with matching
        // output scale k=g: orthorectification only removes the terrain
        // offset, so pose extraction agrees with the original image.
        const double g = 1.6;
        const auto camera = AffineCamera::from_rows({g, 0, 0.9}, {0, g, -0.5});
        const auto col3 = camera.col3();
        const double s_image = std::hypot(col3[0], col3[1]);
        const double theta_image = std::atan2(col3[1], col3[0]);

        const auto result =
            ortho_pose_check(two_box_scene(), camera, g, ElevationModel::constant(25.0));
        EXPECT_NEAR(result.scale, s_image, 1e-6);
        EXPECT_NEAR(result.angle, theta_image, 1e-6);
        EXPECT_LE(result.max_deviation, 1e-6);
    }

    TEST(OrthoPoseCheck, OutputScaleCovariance)
    {
        const auto camera = AffineCamera::from_rows({1.2, 0.1, 0.7}, {0.05, 0.9, 0.4});
        const ElevationModel elev = ElevationModel::constant(5.0);
        const auto base = ortho_pose_check(two_box_scene(), camera, 1.0, elev);
        const auto scaled = ortho_pose_check(two_box_scene(), camera, 2.5, elev);
        EXPECT_NEAR(scaled.scale, 2.5 * base.scale, 1e-9 * std::max(1.0, scaled.scale));
    }

    TEST(OrthoPoseCheck, NonPlanarElevationReportsDeviation)
    {
        Raster bumps(200, 200, 1);
        for (int y = 0; y < 200; ++y) {
            for (int x = 0; x < 200; ++x) {
                bumps.at(x, y) = 6.0 * std::sin(x / 15.0) * std::cos(y / 18.0);
            }
        }
        const auto camera = AffineCamera::from_rows({1, 0, 0.8}, {0, 1, 0.3});
        const auto result =
            ortho_pose_check(two_box_scene(), camera, 1.0, ElevationModel::from_raster(bumps));
        EXPECT_GT(result.max_deviation, 1e-4); // diagnostic, not an error
    }

    TEST(OrthoPoseCheck, RequiresUsablePairs)
    {
        SyntheticScene flat;
        flat.width = 64;
        flat.height = 64;
        EXPECT_THROW(ortho_pose_check(flat, AffineCamera::from_rows({1, 0, 0.5}, {0, 1, 0}), 1.0,
                                      ElevationModel::constant(0.0)),
                     InsufficientDataError);
    }

} // namespace
} // namespace geopose
