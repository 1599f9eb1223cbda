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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace geopose {

namespace {

    constexpr double kSingularDet = 1e-12;

    struct Camera2x2Inverse {
        // Inverse of the leading 2x2 block, row-major.
        double i00, i01, i10, i11;
    };

    Camera2x2Inverse invert_2x2(const AffineCamera& camera)
    {
        const double det = camera.det2x2();
        if (std::abs(det) < kSingularDet) {
            throw SingularCameraError(det);
        }
        const auto& a = camera.a;
        return {a[4] / det, -a[1] / det, -a[3] / det, a[0] / det};
    }

    void require_params(const OrthoParams& params)
    {
        if (!(params.k > 0.0) || !std::isfinite(params.k)) {
            throw InvalidArgumentError("ortho: output scale k must be positive and finite");
        }
    }

    // Solves q = k * A^-1 * (p - col3 * z0(q)) for the ortho coordinate q of
    // an image point p. Closed form for constant/planar elevation, fixed
    // point iteration for raster elevation.
    std::array<double, 2> image_to_ortho(double px, double py, const Camera2x2Inverse& inv,
                                         const std::array<double, 2>& col3, double k,
                                         const ElevationModel& elev)
    {
        const double bx = k * (inv.i00 * px + inv.i01 * py);
        const double by = k * (inv.i10 * px + inv.i11 * py);
        const double tx = k * (inv.i00 * col3[0] + inv.i01 * col3[1]);
        const double ty = k * (inv.i10 * col3[0] + inv.i11 * col3[1]);

        if (elev.is_planar()) {
            // q + t * (gx qx + gy qy) = b - t * c  ->  (I + t g^T) q = b - t c
            const double gx = elev.coeff_gx();
            const double gy = elev.coeff_gy();
            const double m00 = 1.0 + tx * gx;
            const double m01 = tx * gy;
            const double m10 = ty * gx;
            const double m11 = 1.0 + ty * gy;
            const double det = m00 * m11 - m01 * m10;
            if (std::abs(det) < kSingularDet) {
                throw InvalidArgumentError("ortho: elevation gradient makes the map non-invertible");
            }
            const double rx = bx - tx * elev.coeff_c();
            const double ry = by - ty * elev.coeff_c();
            return {(m11 * rx - m01 * ry) / det, (-m10 * rx + m00 * ry) / det};
        }

        double qx = bx;
        double qy = by;
        for (int iter = 0; iter < 40; ++iter) {
            const double z = elev.at(qx, qy);
            if (std::isnan(z)) {
                return {std::numeric_limits<double>::quiet_NaN(),
                        std::numeric_limits<double>::quiet_NaN()};
            }
            const double nx = bx - tx * z;
            const double ny = by - ty * z;
            const double delta = std::abs(nx - qx) + std::abs(ny - qy);
            qx = nx;
            qy = ny;
            if (delta < 1e-10) {
                break;
            }
        }
        return {qx, qy};
    }

} // namespace

ElevationModel ElevationModel::constant(double z)
{
    if (!std::isfinite(z)) {
        throw InvalidArgumentError("ElevationModel: constant elevation must be finite");
    }
    ElevationModel model;
    model.kind_ = Kind::kConstant;
    model.c_ = z;
    return model;
}

ElevationModel ElevationModel::planar(double c, double gx, double gy)
{
    if (!std::isfinite(c) || !std::isfinite(gx) || !std::isfinite(gy)) {
        throw InvalidArgumentError("ElevationModel: planar coefficients must be finite");
    }
    ElevationModel model;
    model.kind_ = Kind::kPlanar;
    model.c_ = c;
    model.gx_ = gx;
    model.gy_ = gy;
    return model;
}

ElevationModel ElevationModel::from_raster(Raster z)
{
    if (z.channels() != 1 || z.width() < 1 || z.height() < 1) {
        throw InvalidArgumentError("ElevationModel: raster must be non-empty and 1-channel");
    }
    ElevationModel model;
    model.kind_ = Kind::kRaster;
    model.raster_ = std::move(z);
    return model;
}

double ElevationModel::at(double qx, double qy) const
{
    switch (kind_) {
    case Kind::kConstant:
        return c_;
    case Kind::kPlanar:
        return c_ + gx_ * qx + gy_ * qy;
    case Kind::kRaster:
        break;
    }
    const double x = std::clamp(qx, 0.0, static_cast<double>(raster_.width() - 1));
    const double y = std::clamp(qy, 0.0, static_cast<double>(raster_.height() - 1));
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const double wx = x - x0;
    const double wy = y - y0;
    double acc = 0.0;
    const double weights[4] = {(1 - wx) * (1 - wy), wx * (1 - wy), (1 - wx) * wy, wx * wy};
    const int xs[4] = {x0, std::min(x0 + 1, raster_.width() - 1), x0,
                       std::min(x0 + 1, raster_.width() - 1)};
    const int ys[4] = {y0, y0, std::min(y0 + 1, raster_.height() - 1),
                       std::min(y0 + 1, raster_.height() - 1)};
    for (int i = 0; i < 4; ++i) {
        if (weights[i] == 0.0) {
            continue;
        }
        if (!raster_.valid(xs[i], ys[i])) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        acc += weights[i] * raster_.at(xs[i], ys[i]);
    }
    return acc;
}

Raster orthorectify(const Raster& image, const OrthoParams& params, const ElevationModel& elev,
                    Interp interp)
{
    require_params(params);
    const double det = params.camera.det2x2();
    if (std::abs(det) < kSingularDet) {
        throw SingularCameraError(det);
    }
    const auto& a = params.camera.a;
    const auto col3 = params.camera.col3();
    const double k = params.k;

    const InverseMap map = [&, k](int qx, int qy) -> std::array<double, 2> {
        const double z = elev.at(qx, qy);
        if (std::isnan(z)) {
            return {std::numeric_limits<double>::quiet_NaN(),
                    std::numeric_limits<double>::quiet_NaN()};
        }
        const double gx = qx / k;
        const double gy = qy / k;
        return {a[0] * gx + a[1] * gy + col3[0] * z, a[3] * gx + a[4] * gy + col3[1] * z};
    };
    return remap_inverse(image, map, interp, params.out_width, params.out_height);
}

Raster ortho_inverse(const Raster& ortho, const OrthoParams& params, const ElevationModel& elev,
                     Interp interp)
{
    require_params(params);
    const Camera2x2Inverse inv = invert_2x2(params.camera);
    const auto col3 = params.camera.col3();
    const double k = params.k;

    const InverseMap map = [&, k](int px, int py) -> std::array<double, 2> {
        return image_to_ortho(px, py, inv, col3, k, elev);
    };
    return remap_inverse(ortho, map, interp, params.out_width, params.out_height);
}

OrthoPoseCheck ortho_pose_check(const SyntheticScene& scene, const AffineCamera& camera, double k,
                                const ElevationModel& elev)
{
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw InvalidArgumentError("ortho_pose_check: k must be positive and finite");
    }
    const Camera2x2Inverse inv = invert_2x2(camera);
    const auto col3 = camera.col3();

    // Vertical pairs: center plus inset corners of every raised box.
    std::vector<std::array<double, 3>> ground_points; // (X, Y, h)
    for (const Box& box : scene.boxes) {
        if (!(box.height > 0.0)) {
            continue;
        }
        const double cx = (box.x0 + box.x1 - 1) / 2.0;
        const double cy = (box.y0 + box.y1 - 1) / 2.0;
        ground_points.push_back({cx, cy, box.height});
        ground_points.push_back({box.x0 + 0.5, box.y0 + 0.5, box.height});
        ground_points.push_back({box.x1 - 0.5, box.y1 - 0.5, box.height});
    }
    // Per-pair scale vectors w = (q_surface - q_ground) / h; the fitted
    // (s, theta) is their mean and their spread witnesses affineness.
    std::vector<std::array<double, 2>> scale_vectors;
    double sum_wx = 0.0;
    double sum_wy = 0.0;
    for (const auto& [gx, gy, h] : ground_points) {
        const double z_ground = scene.ground_elevation(gx, gy);
        const auto p_ground = project(camera, {gx, gy, z_ground});
        const auto p_surface = project(camera, {gx, gy, z_ground + h});
        const auto q_ground = image_to_ortho(p_ground[0], p_ground[1], inv, col3, k, elev);
        const auto q_surface = image_to_ortho(p_surface[0], p_surface[1], inv, col3, k, elev);
        if (std::isnan(q_ground[0]) || std::isnan(q_surface[0])) {
            continue;
        }
        scale_vectors.push_back({(q_surface[0] - q_ground[0]) / h, (q_surface[1] - q_ground[1]) / h});
        sum_wx += scale_vectors.back()[0];
        sum_wy += scale_vectors.back()[1];
    }
    if (scale_vectors.size() < 2) {
        throw InsufficientDataError("ortho_pose_check: fewer than 2 usable pairs");
    }

    const double n = static_cast<double>(scale_vectors.size());
    const double wx = sum_wx / n;
    const double wy = sum_wy / n;

    OrthoPoseCheck result;
    result.scale = std::hypot(wx, wy);
    result.angle = result.scale < kDegenerateMagnitude ? 0.0 : wrap_angle(std::atan2(wy, wx));
    for (std::size_t i = 0; i < scale_vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < scale_vectors.size(); ++j) {
            const double dx = scale_vectors[i][0] - scale_vectors[j][0];
            const double dy = scale_vectors[i][1] - scale_vectors[j][1];
            result.max_deviation = std::max(result.max_deviation, std::hypot(dx, dy));
        }
    }
    return result;
}

} // namespace geopose
