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

/// 8-bit PNG export for visualization only. Values are min-max normalized
/// over valid pixels; invalid pixels render black. 3-channel rasters export
/// as RGB, everything else as grayscale of channel 0.
void write_png_preview(const std::string& path, const Raster& raster);

} // namespace geopose
