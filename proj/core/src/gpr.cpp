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

#include "geopose/gpr.hpp"

#include "geopose/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

namespace geopose {

namespace {

    constexpr char kMagic[4] = {'G', 'P', 'R', '1'};
    constexpr std::uint32_t kQuietNan32 = 0x7fc00000u;

    void put_u32(std::vector<unsigned char>& buf, std::uint32_t v)
    {
        buf.push_back(static_cast<unsigned char>(v & 0xff));
        buf.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
        buf.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
        buf.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
    }

    std::uint32_t get_u32(const unsigned char* p)
    {
        return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
               (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
    }

} // namespace

Raster read_gpr(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open GPR file: " + path);
    }
    unsigned char header[16];
    in.read(reinterpret_cast<char*>(header), sizeof(header));
    if (!in || std::memcmp(header, kMagic, 4) != 0) {
        throw IoError("not a GPR1 file: " + path);
    }
    const std::uint32_t w = get_u32(header + 4);
    const std::uint32_t h = get_u32(header + 8);
    const std::uint32_t c = get_u32(header + 12);
    if (c < 1 || w > (1u << 20) || h > (1u << 20) || c > 1024) {
        throw IoError("GPR header out of range: " + path);
    }

    const std::size_t count = static_cast<std::size_t>(w) * h * c;
    std::vector<unsigned char> payload(count * 4);
    in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
    if (!in) {
        throw IoError("GPR file truncated: " + path);
    }

    Raster raster(static_cast<int>(w), static_cast<int>(h), static_cast<int>(c));
    double* out = raster.data().data();
    for (std::size_t i = 0; i < count; ++i) {
        const float f = std::bit_cast<float>(get_u32(payload.data() + i * 4));
        out[i] = static_cast<double>(f);
    }
    // Masks are materialized on load: one NaN channel invalidates the pixel.
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) {
            for (int ch = 0; ch < raster.channels(); ++ch) {
                if (std::isnan(raster.at(x, y, ch))) {
                    raster.set_invalid(x, y);
                    break;
                }
            }
        }
    }
    return raster;
}

void write_gpr(const std::string& path, const Raster& raster)
{
    std::vector<unsigned char> buf;
    buf.reserve(16 + raster.data().size() * 4);
    buf.insert(buf.end(), kMagic, kMagic + 4);
    put_u32(buf, static_cast<std::uint32_t>(raster.width()));
    put_u32(buf, static_cast<std::uint32_t>(raster.height()));
    put_u32(buf, static_cast<std::uint32_t>(raster.channels()));
    for (double v : raster.data()) {
        std::uint32_t bits;
        if (std::isnan(v)) {
            bits = kQuietNan32; // canonical NaN keeps files byte-stable
        } else {
            bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
        }
        put_u32(buf, bits);
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot create GPR file: " + path);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) {
        throw IoError("short write to GPR file: " + path);
    }
}

} // namespace geopose
