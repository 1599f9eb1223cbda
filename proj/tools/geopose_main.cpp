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

#include "geopose/augment.hpp"
#include "geopose/errors.hpp"
#include "geopose/geometry.hpp"
#include "geopose/gpr.hpp"
#include "geopose/metrics.hpp"
#include "geopose/ortho.hpp"
#include "geopose/png_io.hpp"
#include "geopose/rectify.hpp"
#include "geopose/scale_solver.hpp"
#include "geopose/synth.hpp"
#include "geopose/threading.hpp"
#include "geopose/warp.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;

namespace geopose::cli {
namespace {

    std::string join(const std::string& dir, const std::string& name)
    {
        return (fs::path(dir) / name).string();
    }

    Interp parse_interp(const std::string& name)
    {
        if (name == "nearest") {
            return Interp::kNearest;
        }
        if (name == "bilinear") {
            return Interp::kBilinear;
        }
        throw InvalidArgumentError("unknown interpolation: " + name + " (expected nearest|bilinear)");
    }

    FlowField load_flow(const std::string& vectors_path)
    {
        FlowField flow;
        flow.vectors = read_gpr(vectors_path);
        if (flow.vectors.channels() != 2) {
            throw IoError(vectors_path + ": flow raster must have 2 channels");
        }
        flow.magnitudes = Raster::all_invalid(flow.vectors.width(), flow.vectors.height(), 1);
        for (int y = 0; y < flow.vectors.height(); ++y) {
            for (int x = 0; x < flow.vectors.width(); ++x) {
                if (flow.vectors.valid(x, y)) {
                    flow.magnitudes.at(x, y) =
                        std::hypot(flow.vectors.at(x, y, 0), flow.vectors.at(x, y, 1));
                }
            }
        }
        return flow;
    }

    void write_sample_outputs(const std::string& out_dir, const Raster& image,
                              const GeocentricPose& pose, const FlowField& flow, bool png)
    {
        write_gpr(join(out_dir, "image.gpr"), image);
        write_gpr(join(out_dir, "heights.gpr"), pose.heights);
        write_gpr(join(out_dir, "flow.gpr"), flow.vectors);
        write_gpr(join(out_dir, "magnitudes.gpr"), flow.magnitudes);
        write_pose_sidecar(join(out_dir, "pose.json"), {pose.scale, pose.angle});
        if (png) {
            write_png_preview(join(out_dir, "image.png"), image);
            write_png_preview(join(out_dir, "heights.png"), pose.heights);
        }
    }

    struct SynthArgs {
        std::uint64_t seed = 0;
        std::string out_dir;
        std::string spec_path;
        SceneConfig config;
        double scale = 0.5;
        double angle_rad = 0.0;
        bool png = false;
    };

    int run_synth(const SynthArgs& args)
    {
        SceneConfig config = args.config;
        if (!args.spec_path.empty()) {
            config = read_scene_config(args.spec_path);
        }
        SyntheticScene scene = generate_scene(args.seed, config.spec);
        scene.terrain_c = config.terrain_c;
        scene.terrain_gx = config.terrain_gx;
        scene.terrain_gy = config.terrain_gy;
        const RenderBundle bundle = render(scene, args.scale, args.angle_rad);

        fs::create_directories(args.out_dir);
        write_sample_outputs(args.out_dir, bundle.image, bundle.pose, bundle.flow, args.png);
        write_gpr(join(args.out_dir, "instances.gpr"), bundle.instances);
        write_gpr(join(args.out_dir, "footprints.gpr"), bundle.footprints);
        write_gpr(join(args.out_dir, "occlusion.gpr"), bundle.occluded_ground.occluded);
        write_scene_json(join(args.out_dir, "scene.json"), scene);
        if (args.png) {
            write_png_preview(join(args.out_dir, "occlusion.png"), bundle.occluded_ground.occluded);
        }

        RunManifest manifest;
        manifest.command = "synth";
        manifest.seed = args.seed;
        manifest.has_seed = true;
        manifest.parameters["width"] = std::to_string(config.spec.width);
        manifest.parameters["height"] = std::to_string(config.spec.height);
        manifest.parameters["n_boxes"] = std::to_string(config.spec.n_boxes);
        manifest.parameters["min_height"] = csv_number(config.spec.min_height);
        manifest.parameters["max_height"] = csv_number(config.spec.max_height);
        manifest.parameters["min_size"] = std::to_string(config.spec.min_size);
        manifest.parameters["max_size"] = std::to_string(config.spec.max_size);
        manifest.parameters["terrain_c"] = csv_number(config.terrain_c);
        manifest.parameters["terrain_gx"] = csv_number(config.terrain_gx);
        manifest.parameters["terrain_gy"] = csv_number(config.terrain_gy);
        manifest.parameters["scale"] = csv_number(args.scale);
        manifest.parameters["angle_rad"] = csv_number(args.angle_rad);
        if (!args.spec_path.empty()) {
            manifest.input_paths.push_back(args.spec_path);
        }
        write_manifest(join(args.out_dir, "manifest.json"), manifest);
        return 0;
    }

    struct AugmentArgs {
        std::string in_dir;
        std::string out_dir;
        double rotate_rad = 0.0;
        double scale_ratio = 0.0;
        double height_factor = 0.0;
        bool has_rotate = false;
        bool has_scale = false;
        bool has_height = false;
        std::string interp = "bilinear";
        bool png = false;
    };

    int run_augment(const AugmentArgs& args)
    {
        const std::string image_path = join(args.in_dir, "image.gpr");
        const std::string heights_path = join(args.in_dir, "heights.gpr");
        const std::string pose_path = join(args.in_dir, "pose.json");
        const PoseSidecar sidecar = read_pose_sidecar(pose_path);
        GeocentricPose pose{sidecar.scale, sidecar.angle_rad, read_gpr(heights_path)};
        const AugmentedSample sample = make_sample(read_gpr(image_path), std::move(pose));

        AugmentedSample out;
        RunManifest manifest;
        manifest.command = "augment";
        if (args.has_rotate) {
            out = rotate_augment(sample, args.rotate_rad, parse_interp(args.interp));
            manifest.parameters["rotate_rad"] = csv_number(args.rotate_rad);
        } else if (args.has_scale) {
            out = scale_augment(sample, args.scale_ratio, parse_interp(args.interp));
            manifest.parameters["scale_ratio"] = csv_number(args.scale_ratio);
        } else {
            out = height_augment(sample, args.height_factor);
            manifest.parameters["height_factor"] = csv_number(args.height_factor);
        }
        manifest.parameters["interp"] = args.interp;

        fs::create_directories(args.out_dir);
        write_sample_outputs(args.out_dir, out.image, out.pose, out.flow, args.png);
        manifest.input_paths = {image_path, heights_path, pose_path};
        write_manifest(join(args.out_dir, "manifest.json"), manifest);
        return 0;
    }

    struct OrthoArgs {
        std::string in_path;
        std::string camera_path;
        std::string elev_gpr;
        std::string elev_json;
        std::string out_path;
        double k = 1.0;
        int out_width = 0;
        int out_height = 0;
        bool inverse = false;
        std::string interp = "bilinear";
        bool png = false;
    };

    int run_ortho(const OrthoArgs& args)
    {
        const Raster input = read_gpr(args.in_path);
        OrthoParams params;
        params.camera = read_camera_json(args.camera_path);
        params.k = args.k;
        params.out_width = args.out_width;
        params.out_height = args.out_height;

        ElevationModel elev = ElevationModel::constant(0.0);
        if (!args.elev_gpr.empty()) {
            elev = ElevationModel::from_raster(read_gpr(args.elev_gpr));
        } else if (!args.elev_json.empty()) {
            elev = read_elevation_json(args.elev_json);
        }

        const Raster out = args.inverse
                               ? ortho_inverse(input, params, elev, parse_interp(args.interp))
                               : orthorectify(input, params, elev, parse_interp(args.interp));
        write_gpr(args.out_path, out);
        if (args.png) {
            write_png_preview(args.out_path + ".png", out);
        }

        RunManifest manifest;
        manifest.command = "ortho";
        manifest.parameters["k"] = csv_number(args.k);
        manifest.parameters["inverse"] = args.inverse ? "true" : "false";
        manifest.parameters["interp"] = args.interp;
        manifest.input_paths = {args.in_path, args.camera_path};
        if (!args.elev_gpr.empty()) {
            manifest.input_paths.push_back(args.elev_gpr);
        }
        if (!args.elev_json.empty()) {
            manifest.input_paths.push_back(args.elev_json);
        }
        write_manifest(args.out_path + ".manifest.json", manifest);
        return 0;
    }

    struct RectifyArgs {
        std::string in_path;
        std::string pose_path;
        std::string heights_path;
        std::string out_dir;
        bool categorical = false;
        int median_filter = 0;
        bool png = false;
    };

    int run_rectify(const RectifyArgs& args)
    {
        const Raster input = read_gpr(args.in_path);
        const PoseSidecar sidecar = read_pose_sidecar(args.pose_path);
        Raster heights = read_gpr(args.heights_path);
        if (args.median_filter > 0) {
            heights = median_filter_heights(heights, args.median_filter);
        }
        const GeocentricPose pose{sidecar.scale, sidecar.angle_rad, std::move(heights)};
        const RectifiedBundle bundle = rectify_to_ground(
            input, pose, args.categorical ? RectifyMode::kCategorical : RectifyMode::kContinuous);

        fs::create_directories(args.out_dir);
        write_gpr(join(args.out_dir, "rectified.gpr"), bundle.rectified);
        write_gpr(join(args.out_dir, "occlusion.gpr"), bundle.occlusion.occluded);
        write_gpr(join(args.out_dir, "hit_mask.gpr"), bundle.hit_mask);
        if (args.png) {
            write_png_preview(join(args.out_dir, "rectified.png"), bundle.rectified);
            write_png_preview(join(args.out_dir, "occlusion.png"), bundle.occlusion.occluded);
        }

        RunManifest manifest;
        manifest.command = "rectify";
        manifest.parameters["categorical"] = args.categorical ? "true" : "false";
        manifest.parameters["median_filter"] = std::to_string(args.median_filter);
        manifest.input_paths = {args.in_path, args.pose_path, args.heights_path};
        write_manifest(join(args.out_dir, "manifest.json"), manifest);
        return 0;
    }

    struct MetricsArgs {
        std::string pred_dir;
        std::string ref_dir;
        std::string out_csv;
        std::string iou_unrect;
        std::string iou_rect;
        std::string iou_gt_warp;
        std::string iou_footprints;
        std::string iou_flow_mags;
        std::vector<double> iou_thresholds;
    };

    int run_metrics(const MetricsArgs& args)
    {
        std::ofstream csv(args.out_csv, std::ios::trunc);
        if (!csv) {
            throw IoError("cannot create CSV file: " + args.out_csv);
        }
        RunManifest manifest;
        manifest.command = "metrics";

        // Rasters present under the same name on both sides.
        std::set<std::string> names;
        if (!args.pred_dir.empty()) {
            for (const auto& entry : fs::directory_iterator(args.pred_dir)) {
                if (entry.path().extension() == ".gpr" &&
                    fs::exists(fs::path(args.ref_dir) / entry.path().filename())) {
                    names.insert(entry.path().filename().string());
                }
            }
        }
        for (const std::string& name : names) {
            const std::string pred_path = join(args.pred_dir, name);
            const std::string ref_path = join(args.ref_dir, name);
            manifest.input_paths.push_back(pred_path);
            manifest.input_paths.push_back(ref_path);
            if (name == "flow.gpr") {
                const double epe = endpoint_rmse(load_flow(pred_path), load_flow(ref_path));
                csv << "metric," << name << ":endpoint_rmse," << csv_number(epe) << "\n";
                continue;
            }
            const Raster pred = read_gpr(pred_path);
            const Raster ref = read_gpr(ref_path);
            if (pred.channels() != 1 || ref.channels() != 1) {
                continue;
            }
            const MetricsReport report = error_stats(pred, ref);
            csv << "metric," << name << ":rmse," << csv_number(report.rmse) << "\n";
            csv << "metric," << name << ":mae," << csv_number(report.mae) << "\n";
            csv << "metric," << name << ":n," << report.n << "\n";
            const R2Result r2 = r_squared(pred, ref);
            csv << "metric," << name << ":r2," << csv_number(r2.r2) << "\n";
        }

        // Image-level pose terms.
        const std::string pred_pose = join(args.pred_dir, "pose.json");
        const std::string ref_pose = join(args.ref_dir, "pose.json");
        if (!args.pred_dir.empty() && fs::exists(pred_pose) && fs::exists(ref_pose)) {
            const PoseSidecar pred = read_pose_sidecar(pred_pose);
            const PoseSidecar ref = read_pose_sidecar(ref_pose);
            csv << "metric,pose:angle_rmse_deg,"
                << csv_number(angle_rmse_deg({pred.angle_rad}, {ref.angle_rad})) << "\n";
            csv << "metric,pose:scale_abs_error," << csv_number(std::abs(pred.scale - ref.scale))
                << "\n";
            manifest.input_paths.push_back(pred_pose);
            manifest.input_paths.push_back(ref_pose);
        }

        // Instance IoU analysis when the five inputs are supplied.
        const bool any_iou = !args.iou_unrect.empty() || !args.iou_rect.empty() ||
                             !args.iou_gt_warp.empty() || !args.iou_footprints.empty() ||
                             !args.iou_flow_mags.empty();
        if (any_iou) {
            if (args.iou_unrect.empty() || args.iou_rect.empty() || args.iou_gt_warp.empty() ||
                args.iou_footprints.empty() || args.iou_flow_mags.empty()) {
                throw InvalidArgumentError(
                    "instance IoU needs --iou-unrect, --iou-rect, --iou-gt-warp, "
                    "--iou-footprints and --iou-flow-mags together");
            }
            FlowField flow;
            flow.magnitudes = read_gpr(args.iou_flow_mags);
            flow.vectors = Raster(flow.magnitudes.width(), flow.magnitudes.height(), 2, 0.0);
            const auto analysis = instance_iou_analysis(
                read_gpr(args.iou_unrect), read_gpr(args.iou_rect), read_gpr(args.iou_gt_warp),
                read_gpr(args.iou_footprints), flow, args.iou_thresholds);
            for (const auto& record : analysis.records) {
                csv << "instance_iou," << record.instance_id << ","
                    << csv_number(record.iou_unrectified) << "," << csv_number(record.iou_rectified)
                    << "," << csv_number(record.max_magnitude) << ","
                    << (record.included ? 1 : 0) << "\n";
            }
            for (const auto& point : analysis.rms_iou_curve) {
                csv << "rms_iou_curve," << csv_number(point.threshold) << ","
                    << csv_number(point.rms_iou) << "," << point.n << "\n";
            }
            for (const int id : analysis.skipped_ids) {
                csv << "skipped_instance," << id << "\n";
            }
            manifest.input_paths.insert(manifest.input_paths.end(),
                                        {args.iou_unrect, args.iou_rect, args.iou_gt_warp,
                                         args.iou_footprints, args.iou_flow_mags});
        }

        csv.flush();
        if (!csv) {
            throw IoError("short write to CSV file: " + args.out_csv);
        }
        write_manifest(args.out_csv + ".manifest.json", manifest);
        return 0;
    }

    struct HistArgs {
        std::vector<std::string> inputs;
        std::string out_csv;
        std::string out_png;
        int bins = 50;
        double min_value = 0.0;
        double max_value = 0.0;
        bool has_min = false;
        bool has_max = false;
    };

    int run_hist(const HistArgs& args)
    {
        if (args.bins < 1) {
            throw InvalidArgumentError("hist: --bins must be >= 1");
        }
        std::ofstream csv(args.out_csv, std::ios::trunc);
        if (!csv) {
            throw IoError("cannot create CSV file: " + args.out_csv);
        }
        csv << "raster,bin_lo,bin_hi,count\n";

        std::vector<std::vector<std::size_t>> all_counts;
        for (const std::string& path : args.inputs) {
            const Raster raster = read_gpr(path);
            double lo = args.min_value;
            double hi = args.max_value;
            if (!args.has_min || !args.has_max) {
                lo = std::numeric_limits<double>::infinity();
                hi = -std::numeric_limits<double>::infinity();
                for (int y = 0; y < raster.height(); ++y) {
                    for (int x = 0; x < raster.width(); ++x) {
                        if (raster.valid(x, y)) {
                            lo = std::min(lo, raster.at(x, y));
                            hi = std::max(hi, raster.at(x, y));
                        }
                    }
                }
                if (lo > hi) {
                    lo = 0.0;
                    hi = 1.0;
                }
                if (args.has_min) {
                    lo = args.min_value;
                }
                if (args.has_max) {
                    hi = args.max_value;
                }
            }
            if (hi <= lo) {
                hi = lo + 1.0;
            }
            std::vector<std::size_t> counts(static_cast<std::size_t>(args.bins), 0);
            const double width = (hi - lo) / args.bins;
            for (int y = 0; y < raster.height(); ++y) {
                for (int x = 0; x < raster.width(); ++x) {
                    if (!raster.valid(x, y)) {
                        continue;
                    }
                    const double v = raster.at(x, y);
                    if (v < lo || v > hi) {
                        continue;
                    }
                    const int bin = std::min(args.bins - 1, static_cast<int>((v - lo) / width));
                    ++counts[static_cast<std::size_t>(bin)];
                }
            }
            const std::string name = fs::path(path).filename().string();
            for (int b = 0; b < args.bins; ++b) {
                csv << name << "," << csv_number(lo + b * width) << ","
                    << csv_number(lo + (b + 1) * width) << "," << counts[static_cast<std::size_t>(b)]
                    << "\n";
            }
            all_counts.push_back(std::move(counts));
        }

        if (!args.out_png.empty() && !all_counts.empty()) {
            // Simple bar chart of the first raster's histogram.
            const auto& counts = all_counts.front();
            const int chart_h = 160;
            std::size_t peak = 1;
            for (const std::size_t c : counts) {
                peak = std::max(peak, c);
            }
            Raster chart(static_cast<int>(counts.size()), chart_h, 1, 0.0);
            for (std::size_t b = 0; b < counts.size(); ++b) {
                const int bar =
                    static_cast<int>(std::lround(static_cast<double>(counts[b]) /
                                                 static_cast<double>(peak) * (chart_h - 1)));
                for (int y = 0; y < bar; ++y) {
                    chart.at(static_cast<int>(b), chart_h - 1 - y) = 1.0;
                }
            }
            write_png_preview(args.out_png, chart);
        }

        csv.flush();
        if (!csv) {
            throw IoError("short write to CSV file: " + args.out_csv);
        }
        RunManifest manifest;
        manifest.command = "hist";
        manifest.parameters["bins"] = std::to_string(args.bins);
        manifest.input_paths = args.inputs;
        write_manifest(args.out_csv + ".manifest.json", manifest);
        return 0;
    }

} // namespace
} // namespace geopose::cli

int main(int argc, char** argv)
{
    using namespace geopose;
    using namespace geopose::cli;

    CLI::App app{"Affine geocentric-pose geometry toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "Worker thread bound (outputs are identical for any value)");

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand("synth", "Render a synthetic box-world scene");
    synth->add_option("--seed", synth_args.seed, "RNG seed")->required();
    synth->add_option("--out", synth_args.out_dir, "Output directory")->required();
    synth->add_option("--spec", synth_args.spec_path, "Scene spec JSON (overrides scene flags)");
    synth->add_option("--width", synth_args.config.spec.width, "Scene width, px");
    synth->add_option("--height", synth_args.config.spec.height, "Scene height, px");
    synth->add_option("--boxes", synth_args.config.spec.n_boxes, "Box count");
    synth->add_option("--min-height", synth_args.config.spec.min_height, "Min box height, m");
    synth->add_option("--max-height", synth_args.config.spec.max_height, "Max box height, m");
    synth->add_option("--min-size", synth_args.config.spec.min_size, "Min box edge, px");
    synth->add_option("--max-size", synth_args.config.spec.max_size, "Max box edge, px");
    synth->add_option("--terrain-c", synth_args.config.terrain_c, "Terrain constant, m");
    synth->add_option("--terrain-gx", synth_args.config.terrain_gx, "Terrain x gradient, m/px");
    synth->add_option("--terrain-gy", synth_args.config.terrain_gy, "Terrain y gradient, m/px");
    synth->add_option("--scale", synth_args.scale, "Pose scale, px/m");
    synth->add_option("--angle-rad", synth_args.angle_rad, "Pose angle, radians");
    synth->add_flag("--png", synth_args.png, "Also write PNG previews");

    AugmentArgs augment_args;
    CLI::App* augment = app.add_subcommand("augment", "Label-consistent remap augmentation");
    augment->add_option("--in", augment_args.in_dir, "Input sample directory")->required();
    augment->add_option("--out", augment_args.out_dir, "Output directory")->required();
    auto* rot = augment->add_option("--rotate-rad", augment_args.rotate_rad, "Rotation, radians");
    auto* scl = augment->add_option("--scale-ratio", augment_args.scale_ratio, "Resample ratio");
    auto* hgt = augment->add_option("--height-factor", augment_args.height_factor,
                                    "Multiplicative height factor");
    augment->add_option("--interp", augment_args.interp, "nearest|bilinear");
    augment->add_flag("--png", augment_args.png, "Also write PNG previews");

    OrthoArgs ortho_args;
    CLI::App* ortho = app.add_subcommand("ortho", "Orthorectify (or invert) with an elevation model");
    ortho->add_option("--in", ortho_args.in_path, "Input GPR raster")->required();
    ortho->add_option("--camera", ortho_args.camera_path, "Camera JSON")->required();
    ortho->add_option("--out", ortho_args.out_path, "Output GPR raster")->required();
    ortho->add_option("--k", ortho_args.k, "Output scale, px/m");
    ortho->add_option("--elev-gpr", ortho_args.elev_gpr, "Elevation model GPR");
    ortho->add_option("--elev-json", ortho_args.elev_json, "Elevation model JSON");
    ortho->add_option("--out-width", ortho_args.out_width, "Output width (0 = input)");
    ortho->add_option("--out-height", ortho_args.out_height, "Output height (0 = input)");
    ortho->add_flag("--inverse", ortho_args.inverse, "Apply the inverse map");
    ortho->add_option("--interp", ortho_args.interp, "nearest|bilinear");
    ortho->add_flag("--png", ortho_args.png, "Also write a PNG preview");

    RectifyArgs rectify_args;
    CLI::App* rectify = app.add_subcommand("rectify", "Rectify features to ground level");
    rectify->add_option("--in", rectify_args.in_path, "Input GPR raster")->required();
    rectify->add_option("--pose", rectify_args.pose_path, "Pose sidecar JSON")->required();
    rectify->add_option("--heights", rectify_args.heights_path, "AGL heights GPR")->required();
    rectify->add_option("--out", rectify_args.out_dir, "Output directory")->required();
    rectify->add_flag("--categorical", rectify_args.categorical, "Categorical label mode");
    rectify->add_option("--median-filter", rectify_args.median_filter,
                        "Odd median pre-filter width for heights (0 = off)");
    rectify->add_flag("--png", rectify_args.png, "Also write PNG previews");

    MetricsArgs metrics_args;
    CLI::App* metrics = app.add_subcommand("metrics", "Evaluation metrics to CSV");
    metrics->add_option("--pred", metrics_args.pred_dir, "Prediction directory");
    metrics->add_option("--ref", metrics_args.ref_dir, "Reference directory");
    metrics->add_option("--out", metrics_args.out_csv, "Output CSV")->required();
    metrics->add_option("--iou-unrect", metrics_args.iou_unrect, "Unrectified instance mask GPR");
    metrics->add_option("--iou-rect", metrics_args.iou_rect, "Rectified instance mask GPR");
    metrics->add_option("--iou-gt-warp", metrics_args.iou_gt_warp, "GT-pose-warped mask GPR");
    metrics->add_option("--iou-footprints", metrics_args.iou_footprints, "Footprint mask GPR");
    metrics->add_option("--iou-flow-mags", metrics_args.iou_flow_mags, "Reference magnitudes GPR");
    metrics->add_option("--iou-thresholds", metrics_args.iou_thresholds,
                        "Magnitude thresholds for the RMS IoU curve");

    HistArgs hist_args;
    CLI::App* hist = app.add_subcommand("hist", "Value histograms of GPR rasters");
    hist->add_option("inputs", hist_args.inputs, "Input GPR rasters")->required();
    hist->add_option("--out", hist_args.out_csv, "Output CSV")->required();
    hist->add_option("--bins", hist_args.bins, "Bin count");
    auto* hist_min = hist->add_option("--min", hist_args.min_value, "Lower bound");
    auto* hist_max = hist->add_option("--max", hist_args.max_value, "Upper bound");
    hist->add_option("--png", hist_args.out_png, "Optional PNG bar chart");

    CLI11_PARSE(app, argc, argv);

    try {
        set_max_threads(threads < 1 ? 1 : threads);
        if (synth->parsed()) {
            return run_synth(synth_args);
        }
        if (augment->parsed()) {
            augment_args.has_rotate = rot->count() > 0;
            augment_args.has_scale = scl->count() > 0;
            augment_args.has_height = hgt->count() > 0;
            const int chosen = static_cast<int>(augment_args.has_rotate) +
                               static_cast<int>(augment_args.has_scale) +
                               static_cast<int>(augment_args.has_height);
            if (chosen != 1) {
                throw InvalidArgumentError(
                    "augment requires exactly one of --rotate-rad, --scale-ratio, --height-factor");
            }
            return run_augment(augment_args);
        }
        if (ortho->parsed()) {
            return run_ortho(ortho_args);
        }
        if (rectify->parsed()) {
            return run_rectify(rectify_args);
        }
        if (metrics->parsed()) {
            return run_metrics(metrics_args);
        }
        if (hist->parsed()) {
            hist_args.has_min = hist_min->count() > 0;
            hist_args.has_max = hist_max->count() > 0;
            return run_hist(hist_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    std::cerr << "error: no subcommand selected" << std::endl;
    return 1;
}
