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

#include <cstdint>
#include <random>

namespace geopose::testing {

// Uniform helpers on top of mt19937_64 so frozen test values stay stable
// across standard libraries.
inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) // inclusive
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Raster random_raster(std::mt19937_64& rng, int w, int h, int channels = 1,
                            double lo = 0.0, double hi = 1.0, double invalid_fraction = 0.0)
{
    Raster r(w, h, channels);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (invalid_fraction > 0.0 && uniform(rng, 0.0, 1.0) < invalid_fraction) {
                r.set_invalid(x, y);
                continue;
            }
            for (int c = 0; c < channels; ++c) {
                r.at(x, y, c) = uniform(rng, lo, hi);
            }
        }
    }
    return r;
}

inline bool bitwise_equal(const Raster& a, const Raster& b)
{
    if (!a.same_shape(b)) {
        return false;
    }
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        const double va = a.data()[i];
        const double vb = b.data()[i];
        const bool na = va != va;
        const bool nb = vb != vb;
        if (na != nb) {
            return false;
        }
        if (!na && va != vb) {
            return false;
        }
    }
    return true;
}

} // namespace geopose::testing
