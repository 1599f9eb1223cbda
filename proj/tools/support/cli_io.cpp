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

#include "cli_io.hpp"

#include "geopose/errors.hpp"
#include "geopose/gpr.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace geopose::cli {

namespace {

    using nlohmann::json;

    json load_json(const std::string& path)
    {
        std::ifstream in(path);
        if (!in) {
            throw IoError("cannot open JSON file: " + path);
        }
        json doc;
        try {
            in >> doc;
        } catch (const json::parse_error& e) {
            throw IoError("JSON parse failure in " + path + ": " + e.what());
        }
        return doc;
    }

    void save_json(const std::string& path, const json& doc)
    {
        std::ofstream out(path, std::ios::trunc);
        if (!out) {
            throw IoError("cannot create JSON file: " + path);
        }
        out << doc.dump(2) << "\n";
        if (!out) {
            throw IoError("short write to JSON file: " + path);
        }
    }

    double require_finite_number(const json& doc, const char* key, const std::string& path)
    {
        if (!doc.contains(key) || !doc[key].is_number()) {
            throw IoError(path + ": missing numeric field \"" + key + "\"");
        }
        const double v = doc[key].get<double>();
        if (!std::isfinite(v)) {
            throw IoError(path + ": field \"" + key + "\" must be finite");
        }
        return v;
    }

} // namespace

PoseSidecar read_pose_sidecar(const std::string& path)
{
    const json doc = load_json(path);
    PoseSidecar pose;
    pose.scale = require_finite_number(doc, "scale", path);
    pose.angle_rad = require_finite_number(doc, "angle_rad", path);
    if (pose.scale < 0.0) {
        throw IoError(path + ": scale must be >= 0");
    }
    if (!doc.contains("convention") || doc["convention"] != kPoseConvention) {
        throw IoError(path + ": convention must be exactly \"" + std::string(kPoseConvention) + "\"");
    }
    if (!doc.contains("frame") || doc["frame"] != kPoseFrame) {
        throw IoError(path + ": frame must be exactly \"" + std::string(kPoseFrame) + "\"");
    }
    return pose;
}

void write_pose_sidecar(const std::string& path, const PoseSidecar& pose)
{
    json doc;
    doc["scale"] = pose.scale;
    doc["angle_rad"] = pose.angle_rad;
    doc["convention"] = kPoseConvention;
    doc["frame"] = kPoseFrame;
    save_json(path, doc);
}

AffineCamera read_camera_json(const std::string& path)
{
    const json doc = load_json(path);
    if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].size() != 2 ||
        !doc["rows"][0].is_array() || doc["rows"][0].size() != 3 || !doc["rows"][1].is_array() ||
        doc["rows"][1].size() != 3) {
        throw IoError(path + ": camera JSON must contain \"rows\": [[a11,a12,a13],[a21,a22,a23]]");
    }
    std::array<double, 3> row_x{};
    std::array<double, 3> row_y{};
    for (int i = 0; i < 3; ++i) {
        row_x[i] = doc["rows"][0][i].get<double>();
        row_y[i] = doc["rows"][1][i].get<double>();
    }
    return AffineCamera::from_rows(row_x, row_y);
}

ElevationModel read_elevation_json(const std::string& path)
{
    const json doc = load_json(path);
    if (doc.contains("constant")) {
        return ElevationModel::constant(doc["constant"].get<double>());
    }
    if (doc.contains("planar")) {
        const json& p = doc["planar"];
        return ElevationModel::planar(require_finite_number(p, "c", path),
                                      require_finite_number(p, "gx", path),
                                      require_finite_number(p, "gy", path));
    }
    throw IoError(path + ": elevation JSON must contain \"constant\" or \"planar\"");
}

SceneConfig read_scene_config(const std::string& path)
{
    const json doc = load_json(path);
    SceneConfig config;
    if (doc.contains("n_boxes")) {
        config.spec.n_boxes = doc["n_boxes"].get<int>();
    }
    if (doc.contains("width")) {
        config.spec.width = doc["width"].get<int>();
    }
    if (doc.contains("height")) {
        config.spec.height = doc["height"].get<int>();
    }
    if (doc.contains("min_height")) {
        config.spec.min_height = doc["min_height"].get<double>();
    }
    if (doc.contains("max_height")) {
        config.spec.max_height = doc["max_height"].get<double>();
    }
    if (doc.contains("min_size")) {
        config.spec.min_size = doc["min_size"].get<int>();
    }
    if (doc.contains("max_size")) {
        config.spec.max_size = doc["max_size"].get<int>();
    }
    if (doc.contains("terrain")) {
        const json& t = doc["terrain"];
        config.terrain_c = require_finite_number(t, "c", path);
        config.terrain_gx = require_finite_number(t, "gx", path);
        config.terrain_gy = require_finite_number(t, "gy", path);
    }
    return config;
}

void write_scene_json(const std::string& path, const SyntheticScene& scene)
{
    json doc;
    doc["width"] = scene.width;
    doc["height"] = scene.height;
    doc["terrain"] = {{"c", scene.terrain_c}, {"gx", scene.terrain_gx}, {"gy", scene.terrain_gy}};
    json boxes = json::array();
    for (const Box& box : scene.boxes) {
        boxes.push_back({{"id", box.id},
                         {"x0", box.x0},
                         {"y0", box.y0},
                         {"x1", box.x1},
                         {"y1", box.y1},
                         {"height", box.height}});
    }
    doc["boxes"] = boxes;
    save_json(path, doc);
}

void write_manifest(const std::string& path, const RunManifest& manifest)
{
    json doc;
    doc["command"] = manifest.command;
    doc["tool_version"] = kToolVersion;
    if (manifest.has_seed) {
        doc["seed"] = manifest.seed;
    }
    json params = json::object();
    for (const auto& [key, value] : manifest.parameters) {
        params[key] = value;
    }
    doc["parameters"] = params;
    // Inputs are identified by name and content digest; their filesystem
    // location is an execution detail, like the output directory, so reruns
    // from different roots compare byte-identical.
    json inputs = json::array();
    for (const std::string& input : manifest.input_paths) {
        inputs.push_back({{"name", std::filesystem::path(input).filename().string()},
                          {"digest", digest_file(input)}});
    }
    doc["inputs"] = inputs;
    save_json(path, doc);
}

std::string digest_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open input for digest: " + path);
    }
    std::uint64_t hash = 0xcbf29ce484222325ull;
    char buffer[65536];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 0x100000001b3ull;
        }
    }
    char hex[32];
    std::snprintf(hex, sizeof(hex), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

std::string csv_number(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

} // namespace geopose::cli
