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

#include "geopose/geometry.hpp"
#include "geopose/ortho.hpp"
#include "geopose/synth.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace geopose::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kPoseConvention = "ground-to-surface";
inline constexpr const char* kPoseFrame = "y-down";

/// Image-level pose terms serialized next to the height raster. The
/// convention and frame strings are part of the contract and are validated
/// exactly on load.
struct PoseSidecar {
    double scale = 0.0;
    double angle_rad = 0.0;
};

PoseSidecar read_pose_sidecar(const std::string& path);
void write_pose_sidecar(const std::string& path, const PoseSidecar& pose);

/// Camera JSON: {"rows": [[a11,a12,a13],[a21,a22,a23]]}.
AffineCamera read_camera_json(const std::string& path);

/// Elevation JSON: {"constant": v} or {"planar": {"c":c,"gx":gx,"gy":gy}}.
ElevationModel read_elevation_json(const std::string& path);

/// Scene spec JSON mirroring SceneSpec plus optional planar terrain.
struct SceneConfig {
    SceneSpec spec;
    double terrain_c = 0.0;
    double terrain_gx = 0.0;
    double terrain_gy = 0.0;
};
SceneConfig read_scene_config(const std::string& path);
void write_scene_json(const std::string& path, const SyntheticScene& scene);

/// Reproducibility record: command, semantic parameters, input digests, and
/// tool version. Thread count and output locations are execution details and
/// are deliberately absent, so reruns compare byte-identical.
struct RunManifest {
    std::string command;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> input_paths;
};
void write_manifest(const std::string& path, const RunManifest& manifest);

/// FNV-1a 64-bit digest of a file's bytes, rendered as "fnv1a64:<hex>".
std::string digest_file(const std::string& path);

/// Locale-independent decimal with 9 significant digits for CSV output.
std::string csv_number(double value);

} // namespace geopose::cli
