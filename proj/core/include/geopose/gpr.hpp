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

#include <string>

namespace geopose {

// GPR raster format, version 1:
//   magic "GPR1"; little-endian u32 width, u32 height, u32 channels; then
//   width*height*channels little-endian IEEE binary32 values, row-major and
//   channel-interleaved. NaN encodes an invalid pixel.
//
// In-memory rasters hold doubles; writing quantizes to binary32 and reading
// widens losslessly. Any NaN channel on disk invalidates the whole pixel on
// load, and invalid pixels are written as quiet NaN in every channel, so
// write/read round trips are byte-stable.

Raster read_gpr(const std::string& path);
void write_gpr(const std::string& path, const Raster& raster);

} // namespace geopose
