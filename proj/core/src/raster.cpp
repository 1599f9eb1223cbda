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

#include "geopose/raster.hpp"

#include "geopose/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace geopose {

Raster::Raster(int width, int height, int channels, double fill)
  : width_(width)
  , height_(height)
  , channels_(channels)
{
    if (width < 0 || height < 0 || channels < 1) {
        throw InvalidArgumentError("raster shape must have width,height >= 0 and channels >= 1");
    }
    data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

Raster Raster::all_invalid(int width, int height, int channels)
{
    return Raster(width, height, channels, std::numeric_limits<double>::quiet_NaN());
}

bool Raster::valid(int x, int y) const
{
    return !std::isnan(data_[index(x, y, 0)]);
}

void Raster::set_invalid(int x, int y)
{
    const std::size_t base = index(x, y, 0);
    for (int c = 0; c < channels_; ++c) {
        data_[base + c] = std::numeric_limits<double>::quiet_NaN();
    }
}

std::size_t Raster::valid_count() const
{
    std::size_t n = 0;
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            if (valid(x, y)) {
                ++n;
            }
        }
    }
    return n;
}

void require_congruent(const Raster& a, const Raster& b, const char* what)
{
    if (!a.same_shape(b)) {
        throw InvalidArgumentError(std::string(what) + ": rasters are not congruent (" +
                                   std::to_string(a.width()) + "x" + std::to_string(a.height()) + "x" +
                                   std::to_string(a.channels()) + " vs " + std::to_string(b.width()) + "x" +
                                   std::to_string(b.height()) + "x" + std::to_string(b.channels()) + ")");
    }
}

} // namespace geopose
