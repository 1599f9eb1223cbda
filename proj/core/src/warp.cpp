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

#include "geopose/warp.hpp"

#include "geopose/errors.hpp"
#include "geopose/threading.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace geopose {

namespace {

    // Performs the bilinear weighting with samples of weight zero never
    // touched, so an integer-coordinate lookup is a bit-exact pixel copy.
    bool sample_bilinear(const Raster& src, double sx, double sy, int c, double& out)
    {
        const double fx = std::floor(sx);
        const double fy = std::floor(sy);
        const int x0 = static_cast<int>(fx);
        const int y0 = static_cast<int>(fy);
        const double wx = sx - fx;
        const double wy = sy - fy;

        double acc = 0.0;
        const double weights[4] = {(1 - wx) * (1 - wy), wx * (1 - wy), (1 - wx) * wy, wx * wy};
        const int xs[4] = {x0, x0 + 1, x0, x0 + 1};
        const int ys[4] = {y0, y0, y0 + 1, y0 + 1};
        for (int i = 0; i < 4; ++i) {
            if (weights[i] == 0.0) {
                continue;
            }
            if (!src.in_bounds(xs[i], ys[i]) || !src.valid(xs[i], ys[i])) {
                return false;
            }
            acc += weights[i] * src.at(xs[i], ys[i], c);
        }
        out = acc;
        return true;
    }

} // namespace

Raster remap_inverse(const Raster& src, const InverseMap& map, Interp interp,
                     int out_width, int out_height)
{
    const int ow = out_width > 0 ? out_width : src.width();
    const int oh = out_height > 0 ? out_height : src.height();
    const int channels = src.channels();
    Raster out = Raster::all_invalid(ow, oh, channels);

    parallel_chunks(0, oh, [&](int row_begin, int row_end) {
        for (int y = row_begin; y < row_end; ++y) {
            for (int x = 0; x < ow; ++x) {
                const auto [sx, sy] = map(x, y);
                if (std::isnan(sx) || std::isnan(sy)) {
                    continue;
                }
                if (interp == Interp::kNearest) {
                    const int nx = static_cast<int>(std::lround(sx));
                    const int ny = static_cast<int>(std::lround(sy));
                    if (!src.in_bounds(nx, ny) || !src.valid(nx, ny)) {
                        continue;
                    }
                    for (int c = 0; c < channels; ++c) {
                        out.at(x, y, c) = src.at(nx, ny, c);
                    }
                } else {
                    bool ok = true;
                    double values[16];
                    double* tmp = channels <= 16 ? values : nullptr;
                    std::vector<double> heap;
                    if (!tmp) {
                        heap.resize(channels);
                        tmp = heap.data();
                    }
                    for (int c = 0; c < channels && ok; ++c) {
                        ok = sample_bilinear(src, sx, sy, c, tmp[c]);
                    }
                    if (!ok) {
                        continue;
                    }
                    for (int c = 0; c < channels; ++c) {
                        out.at(x, y, c) = tmp[c];
                    }
                }
            }
        }
    });
    return out;
}

SplatResult splat_forward(const Raster& src, const ForwardMap& dest_of, const Raster& priority,
                          int out_width, int out_height)
{
    if (priority.channels() != 1 || priority.width() != src.width() || priority.height() != src.height()) {
        throw InvalidArgumentError("splat_forward: priority must be a congruent 1-channel raster");
    }
    const int ow = out_width > 0 ? out_width : src.width();
    const int oh = out_height > 0 ? out_height : src.height();
    const int w = src.width();
    const int h = src.height();
    const std::size_t n_src = static_cast<std::size_t>(w) * h;
    const std::size_t n_out = static_cast<std::size_t>(ow) * oh;

    // Phase 1 (parallel): destination cell per source pixel; -1 = no splat.
    std::vector<std::int64_t> dest_cell(n_src, -1);
    parallel_chunks(0, h, [&](int row_begin, int row_end) {
        for (int y = row_begin; y < row_end; ++y) {
            for (int x = 0; x < w; ++x) {
                if (!src.valid(x, y)) {
                    continue;
                }
                const double pri = priority.at(x, y);
                if (!std::isfinite(pri)) {
                    throw InvalidArgumentError("splat_forward: non-finite priority at a valid pixel");
                }
                const auto [dx, dy] = dest_of(x, y);
                if (std::isnan(dx) || std::isnan(dy)) {
                    continue;
                }
                const long cx = std::lround(dx);
                const long cy = std::lround(dy);
                if (cx < 0 || cx >= ow || cy < 0 || cy >= oh) {
                    continue;
                }
                dest_cell[static_cast<std::size_t>(y) * w + x] = cy * ow + cx;
            }
        }
    });

    // Phase 2 (serial): winner per cell. The (priority, lowest source index)
    // rule is a total order, so the outcome is independent of visit order.
    std::vector<double> best_priority(n_out, -std::numeric_limits<double>::infinity());
    std::vector<std::int64_t> best_src(n_out, -1);
    for (std::size_t i = 0; i < n_src; ++i) {
        const std::int64_t cell = dest_cell[i];
        if (cell < 0) {
            continue;
        }
        const double pri = priority.data()[i];
        const std::size_t cidx = static_cast<std::size_t>(cell);
        if (best_src[cidx] < 0 || pri > best_priority[cidx]) {
            best_priority[cidx] = pri;
            best_src[cidx] = static_cast<std::int64_t>(i);
        }
    }

    SplatResult result{Raster::all_invalid(ow, oh, src.channels()), Raster(ow, oh, 1, 0.0)};
    const int channels = src.channels();
    parallel_chunks(0, oh, [&](int row_begin, int row_end) {
        for (int y = row_begin; y < row_end; ++y) {
            for (int x = 0; x < ow; ++x) {
                const std::int64_t s = best_src[static_cast<std::size_t>(y) * ow + x];
                if (s < 0) {
                    continue;
                }
                result.hit_mask.at(x, y) = 1.0;
                const int sx = static_cast<int>(s % w);
                const int sy = static_cast<int>(s / w);
                for (int c = 0; c < channels; ++c) {
                    result.raster.at(x, y, c) = src.at(sx, sy, c);
                }
            }
        }
    });
    return result;
}

} // namespace geopose
