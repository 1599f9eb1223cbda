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

#include <cstddef>
#include <vector>

namespace geopose {

/// Validity-masked float grid, row-major and channel-interleaved.
///
/// NaN is the storage sentinel for invalid pixels: a pixel is invalid iff its
/// channel-0 value is NaN, and set_invalid() writes NaN to every channel so
/// validity is never per-channel. Values are held as doubles in memory; the
/// GPR file format stores 32-bit floats (see gpr.hpp).
class Raster {
  public:
    Raster() = default;
    Raster(int width, int height, int channels = 1, double fill = 0.0);

    /// Raster of the given shape with every pixel invalid.
    static Raster all_invalid(int width, int height, int channels = 1);

    int width() const { return width_; }
    int height() const { return height_; }
    int channels() const { return channels_; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }

    bool same_shape(const Raster& other) const
    {
        return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
    }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

    double at(int x, int y, int c = 0) const { return data_[index(x, y, c)]; }
    double& at(int x, int y, int c = 0) { return data_[index(x, y, c)]; }

    bool valid(int x, int y) const;
    void set_invalid(int x, int y);
    std::size_t valid_count() const;

    std::size_t index(int x, int y, int c = 0) const
    {
        return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

  private:
    int width_ = 0;
    int height_ = 0;
    int channels_ = 1;
    std::vector<double> data_;
};

/// Per-pixel ground-mapping vectors (2 channels, pixels) plus their magnitudes.
/// Invariant: |vectors[p]| == magnitudes[p] within 1e-6 on valid pixels.
struct FlowField {
    Raster vectors;
    Raster magnitudes;
};

/// Ground cells that received no feature, i.e. were hidden behind above-ground
/// structure in the source view. Stored 0/1 in a 1-channel raster.
struct OcclusionMap {
    Raster occluded;
};

/// Throws InvalidArgumentError unless both rasters have identical shape.
void require_congruent(const Raster& a, const Raster& b, const char* what);

} // namespace geopose
