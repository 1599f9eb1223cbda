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

#include "geopose/scale_solver.hpp"

#include "geopose/errors.hpp"

#include <cmath>

namespace geopose {

namespace {

    constexpr double kDegenerateThreshold = 1e-12;

    struct NormalSums {
        double hm = 0.0; // sum h*m
        double hh = 0.0; // sum h*h
        std::size_t n = 0;
    };

    // Reduction over jointly valid pixels in a fixed row-major order so
    // repeated runs are bit-identical.
    NormalSums accumulate(const Raster& h, const Raster& m)
    {
        require_congruent(h, m, "solve_scale");
        if (h.channels() != 1) {
            throw InvalidArgumentError("solve_scale: heights and magnitudes must be 1-channel");
        }
        NormalSums sums;
        for (int y = 0; y < h.height(); ++y) {
            for (int x = 0; x < h.width(); ++x) {
                if (!h.valid(x, y) || !m.valid(x, y)) {
                    continue;
                }
                const double hv = h.at(x, y);
                const double mv = m.at(x, y);
                sums.hm += hv * mv;
                sums.hh += hv * hv;
                ++sums.n;
            }
        }
        return sums;
    }

} // namespace

double solve_scale(const Raster& heights, const Raster& magnitudes)
{
    const NormalSums sums = accumulate(heights, magnitudes);
    if (sums.hh < kDegenerateThreshold) {
        throw DegenerateScaleError(sums.n);
    }
    return sums.hm / sums.hh;
}

ScaleGradient solve_scale_gradient(const Raster& heights, const Raster& magnitudes)
{
    const NormalSums sums = accumulate(heights, magnitudes);
    if (sums.hh < kDegenerateThreshold) {
        throw DegenerateScaleError(sums.n);
    }
    const double d = sums.hh;
    const double n = sums.hm;

    ScaleGradient grad{Raster(heights.width(), heights.height(), 1, 0.0),
                       Raster(heights.width(), heights.height(), 1, 0.0)};
    for (int y = 0; y < heights.height(); ++y) {
        for (int x = 0; x < heights.width(); ++x) {
            if (!heights.valid(x, y) || !magnitudes.valid(x, y)) {
                continue;
            }
            const double hv = heights.at(x, y);
            const double mv = magnitudes.at(x, y);
            grad.ds_dm.at(x, y) = hv / d;
            grad.ds_dh.at(x, y) = (mv * d - 2.0 * hv * n) / (d * d);
        }
    }
    return grad;
}

AngleEncoding AngleEncoding::from_angle(double radians)
{
    if (!std::isfinite(radians)) {
        throw InvalidArgumentError("AngleEncoding: angle must be finite");
    }
    return {std::cos(radians), std::sin(radians)};
}

namespace {

    // Pixel MSE over jointly valid pixels; 0 when no pixel is jointly valid.
    double pixel_mse(const Raster& pred, const Raster& ref, const char* what)
    {
        require_congruent(pred, ref, what);
        double acc = 0.0;
        std::size_t n = 0;
        for (int y = 0; y < pred.height(); ++y) {
            for (int x = 0; x < pred.width(); ++x) {
                if (!pred.valid(x, y) || !ref.valid(x, y)) {
                    continue;
                }
                const double e = pred.at(x, y) - ref.at(x, y);
                acc += e * e;
                ++n;
            }
        }
        return n == 0 ? 0.0 : acc / static_cast<double>(n);
    }

} // namespace

LossBreakdown total_loss(const std::vector<PoseSample>& pred, const std::vector<PoseSample>& ref,
                         const LossWeights& weights, const std::vector<bool>& labeled)
{
    if (pred.empty()) {
        throw InvalidArgumentError("total_loss: empty batch");
    }
    if (pred.size() != ref.size()) {
        throw InvalidArgumentError("total_loss: pred and ref batch sizes differ");
    }
    if (!labeled.empty() && labeled.size() != pred.size()) {
        throw InvalidArgumentError("total_loss: labeled flag list must match batch size");
    }
    if (weights.f_theta < 0 || weights.f_s < 0 || weights.f_h < 0 || weights.f_m < 0) {
        throw InvalidArgumentError("total_loss: weights must be >= 0");
    }

    LossBreakdown loss;
    double theta_acc = 0.0;
    double s_acc = 0.0;
    double h_acc = 0.0;
    double m_acc = 0.0;
    std::size_t n_labeled = 0;

    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double dc = pred[i].angle.cos_t - ref[i].angle.cos_t;
        const double ds = pred[i].angle.sin_t - ref[i].angle.sin_t;
        theta_acc += (dc * dc + ds * ds) / 2.0;

        const double de = pred[i].scale - ref[i].scale;
        s_acc += de * de;

        const bool is_labeled = labeled.empty() || labeled[i];
        if (is_labeled) {
            h_acc += pixel_mse(pred[i].heights, ref[i].heights, "total_loss heights");
            m_acc += pixel_mse(pred[i].magnitudes, ref[i].magnitudes, "total_loss magnitudes");
            ++n_labeled;
        }
    }

    const double batch = static_cast<double>(pred.size());
    loss.l_theta = theta_acc / batch;
    loss.l_s = s_acc / batch;
    loss.l_h = n_labeled == 0 ? 0.0 : h_acc / static_cast<double>(n_labeled);
    loss.l_m = n_labeled == 0 ? 0.0 : m_acc / static_cast<double>(n_labeled);
    loss.total = weights.f_theta * loss.l_theta + weights.f_s * loss.l_s +
                 weights.f_h * loss.l_h + weights.f_m * loss.l_m;
    return loss;
}

} // namespace geopose
