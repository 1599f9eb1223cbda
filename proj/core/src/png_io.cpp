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

#include "geopose/png_io.hpp"

#include "geopose/errors.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

namespace geopose {

namespace {

    void put_u32_be(std::vector<unsigned char>& buf, std::uint32_t v)
    {
        buf.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
        buf.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
        buf.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
        buf.push_back(static_cast<unsigned char>(v & 0xff));
    }

    void append_chunk(std::vector<unsigned char>& out, const char type[4],
                      const unsigned char* data, std::size_t len)
    {
        put_u32_be(out, static_cast<std::uint32_t>(len));
        const std::size_t type_pos = out.size();
        out.insert(out.end(), type, type + 4);
        if (len > 0) {
            out.insert(out.end(), data, data + len);
        }
        uLong crc = crc32(0L, out.data() + type_pos, 4);
        if (len > 0) {
            crc = crc32(crc, data, static_cast<uInt>(len));
        }
        put_u32_be(out, static_cast<std::uint32_t>(crc));
    }

} // namespace

void write_png_preview(const std::string& path, const Raster& raster)
{
    const int w = raster.width();
    const int h = raster.height();
    if (w <= 0 || h <= 0) {
        throw InvalidArgumentError("write_png_preview: empty raster");
    }
    const bool rgb = raster.channels() == 3;
    const int out_channels = rgb ? 3 : 1;

    // Min-max over valid pixels of the exported channels.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!raster.valid(x, y)) {
                continue;
            }
            for (int c = 0; c < out_channels; ++c) {
                const double v = raster.at(x, y, c);
                if (std::isfinite(v)) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
        }
    }
    const double span = hi > lo ? hi - lo : 1.0;

    // Raw scanlines, filter byte 0 per row.
    std::vector<unsigned char> raw;
    raw.reserve(static_cast<std::size_t>(h) * (1 + static_cast<std::size_t>(w) * out_channels));
    for (int y = 0; y < h; ++y) {
        raw.push_back(0);
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < out_channels; ++c) {
                unsigned char byte = 0;
                if (raster.valid(x, y) && lo <= hi) {
                    const double v = raster.at(x, y, c);
                    if (std::isfinite(v)) {
                        const double t = (v - lo) / span;
                        byte = static_cast<unsigned char>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0));
                    }
                }
                raw.push_back(byte);
            }
        }
    }

    uLongf compressed_len = compressBound(static_cast<uLong>(raw.size()));
    std::vector<unsigned char> compressed(compressed_len);
    if (compress2(compressed.data(), &compressed_len, raw.data(), static_cast<uLong>(raw.size()), 6) != Z_OK) {
        throw IoError("PNG deflate failed for " + path);
    }
    compressed.resize(compressed_len);

    std::vector<unsigned char> png;
    static const unsigned char signature[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    png.insert(png.end(), signature, signature + 8);

    unsigned char ihdr[13];
    ihdr[0] = static_cast<unsigned char>((w >> 24) & 0xff);
    ihdr[1] = static_cast<unsigned char>((w >> 16) & 0xff);
    ihdr[2] = static_cast<unsigned char>((w >> 8) & 0xff);
    ihdr[3] = static_cast<unsigned char>(w & 0xff);
    ihdr[4] = static_cast<unsigned char>((h >> 24) & 0xff);
    ihdr[5] = static_cast<unsigned char>((h >> 16) & 0xff);
    ihdr[6] = static_cast<unsigned char>((h >> 8) & 0xff);
    ihdr[7] = static_cast<unsigned char>(h & 0xff);
    ihdr[8] = 8;                                        // bit depth
    ihdr[9] = static_cast<unsigned char>(rgb ? 2 : 0);  // color type
    ihdr[10] = 0;
    ihdr[11] = 0;
    ihdr[12] = 0;
    append_chunk(png, "IHDR", ihdr, sizeof(ihdr));
    append_chunk(png, "IDAT", compressed.data(), compressed.size());
    append_chunk(png, "IEND", nullptr, 0);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot create PNG file: " + path);
    }
    out.write(reinterpret_cast<const char*>(png.data()), static_cast<std::streamsize>(png.size()));
    if (!out) {
        throw IoError("short write to PNG file: " + path);
    }
}

} // namespace geopose
