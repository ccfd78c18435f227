// floodvibe: unsupervised flood mapping over SAR image time series.
//
// Subcommands: segment, detect, simulate, eval, validate.
// Exit codes: 0 ok, 2 validation failure, 3 I/O failure, 4 internal error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "floodvibe/anomaly.hpp"
#include "floodvibe/manifest.hpp"
#include "floodvibe/metrics.hpp"
#include "floodvibe/raster_io.hpp"
#include "floodvibe/segmentation.hpp"
#include "floodvibe/synthetic.hpp"

namespace fs = std::filesystem;
using namespace floodvibe;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

FloodMask mask_from_binary(const BinaryMap& map) {
    FloodMask m(map.width, map.height, -1);
    for (std::size_t i = 0; i < map.values.size(); ++i) {
        m.values[i] = (map.values[i] == kWater) ? 1 : 0;
    }
    return m;
}

Region parse_region(const json& r, const std::string& ptr) {
    Region reg;
    const std::string shape = r.value("shape", "rect");
    if (shape == "rect") {
        reg.shape = Region::Shape::Rect;
        reg.row0 = r.at("row0").get<int>();
        reg.col0 = r.at("col0").get<int>();
        reg.row1 = r.at("row1").get<int>();
        reg.col1 = r.at("col1").get<int>();
    } else if (shape == "disc") {
        reg.shape = Region::Shape::Disc;
        reg.row0 = r.at("row").get<int>();
        reg.col0 = r.at("col").get<int>();
        reg.radius = r.at("radius").get<double>();
    } else {
        throw SchemaError(ptr + "/shape", "must be 'rect' or 'disc'");
    }
    return reg;
}

SceneSpec parse_scene_spec(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scene spec '" + path.string() + "'");
    json doc = json::parse(in);
    SceneSpec spec;
    spec.width = doc.at("width").get<int>();
    spec.height = doc.at("height").get<int>();
    spec.n_frames = doc.at("n_frames").get<int>();
    spec.ground_level = doc.value("ground_level", spec.ground_level);
    spec.water_level = doc.value("water_level", spec.water_level);
    spec.speckle_looks = doc.value("speckle_looks", spec.speckle_looks);
    spec.speckle_enabled = doc.value("speckle", true);
    spec.seed = doc.value("seed", std::uint64_t{0});
    int idx = 0;
    for (const json& r : doc.value("permanent_regions", json::array())) {
        spec.permanent_regions.push_back(
            parse_region(r, "/permanent_regions/" + std::to_string(idx++)));
    }
    idx = 0;
    for (const json& e : doc.value("flood_events", json::array())) {
        const std::string ptr = "/flood_events/" + std::to_string(idx++);
        FloodEvent ev;
        ev.region = parse_region(e.at("region"), ptr + "/region");
        ev.start_frame = e.at("start_frame").get<int>();
        ev.end_frame = e.at("end_frame").get<int>();
        spec.flood_events.push_back(ev);
    }
    return spec;
}

int cmd_segment(const std::string& input, const std::string& output, DetectorParams params) {
    const SarFrame frame = read_raster(input);
    const BinaryMap seg = segment_water(frame, params);
    write_mask(mask_from_binary(seg), output);
    return kExitOk;
}

int cmd_validate(const std::string& manifest_path) {
    const SequenceManifest manifest = parse_manifest(manifest_path);
    const auto report = validate_sequence(manifest);
    if (report.empty()) {
        std::cout << "ok: " << manifest.frames.size() << " frames, no violations\n";
        return kExitOk;
    }
    for (const auto& v : report) std::cout << "violation: " << v << "\n";
    return kExitValidation;
}

int cmd_detect(const std::string& manifest_path, const std::string& out_dir,
               bool emit_warmup_zeros, std::optional<std::uint64_t> seed_override) {
    SequenceManifest manifest = parse_manifest(manifest_path);
    if (seed_override) manifest.seed = *seed_override;
    const auto report = validate_sequence(manifest);
    if (!report.empty()) {
        for (const auto& v : report) std::cerr << "violation: " << v << "\n";
        return kExitValidation;
    }
    fs::create_directories(out_dir);
    Detector detector(manifest.params, manifest.seed);
    for (const auto& ref : manifest.frames) {
        const SarFrame frame = read_raster(ref.path);
        auto mask = detector.push(frame);
        if (!mask && emit_warmup_zeros) {
            mask = FloodMask(frame.width, frame.height, detector.frame_cursor() - 1);
        }
        if (mask) write_mask(*mask, fs::path(out_dir) / (ref.id + ".flood.pgm"));
    }
    return kExitOk;
}

int cmd_simulate(const std::string& scene_path, const std::string& out_dir) {
    const SceneSpec spec = parse_scene_spec(scene_path);
    auto [frames, truth] = generate_sequence(spec);

    const fs::path out(out_dir);
    fs::create_directories(out / "frames");
    fs::create_directories(out / "truth");
    json manifest;
    manifest["seed"] = spec.seed;
    manifest["frames"] = json::array();
    for (std::size_t t = 0; t < frames.size(); ++t) {
        const std::string name = frames[t].frame_id;
        write_raster(frames[t], out / "frames" / (name + ".fr32"));
        write_mask(truth.flood[t], out / "truth" / (name + ".flood.pgm"));
        write_mask(mask_from_binary(truth.water[t]), out / "truth" / (name + ".water.pgm"));
        manifest["frames"].push_back({{"id", name},
                                      {"path", "frames/" + name + ".fr32"},
                                      {"timestamp", frames[t].timestamp}});
    }
    std::ofstream mf(out / "manifest.json");
    if (!mf) throw IoError("cannot write manifest");
    mf << manifest.dump(2) << "\n";
    std::cout << "wrote " << frames.size() << " frames to " << out_dir << "\n";
    return kExitOk;
}

int cmd_eval(const std::string& pred_dir, const std::string& truth_dir, int score_from,
             bool as_json) {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(pred_dir)) {
        const std::string name = e.path().filename().string();
        if (name.ends_with(".flood.pgm")) names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    if (score_from > 0) {
        names.erase(names.begin(),
                    names.begin() + std::min<std::size_t>(score_from, names.size()));
    }
    std::vector<FloodMask> pred, truth;
    for (const auto& name : names) {
        const fs::path t = fs::path(truth_dir) / name;
        if (!fs::exists(t)) {
            std::cerr << "violation: no reference mask for " << name << "\n";
            return kExitValidation;
        }
        pred.push_back(read_mask(fs::path(pred_dir) / name));
        truth.push_back(read_mask(t));
    }
    const ConfusionCounts c = confusion_counts(pred, truth);
    const SummaryMetrics m = summary_metrics(c);
    const auto fmt = [](std::optional<double> v) {
        return v ? std::to_string(*v) : std::string("undefined");
    };
    if (as_json) {
        json out{{"frames", names.size()}, {"tp", c.tp},     {"fp", c.fp},
                 {"fn", c.fn},             {"tn", c.tn}};
        out["precision"] = m.precision ? json(*m.precision) : json(nullptr);
        out["recall"] = m.recall ? json(*m.recall) : json(nullptr);
        out["f1"] = m.f1 ? json(*m.f1) : json(nullptr);
        out["iou"] = m.iou ? json(*m.iou) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "frames=" << names.size() << "\n"
                  << "tp=" << c.tp << "\nfp=" << c.fp << "\nfn=" << c.fn << "\ntn=" << c.tn
                  << "\n"
                  << "precision=" << fmt(m.precision) << "\n"
                  << "recall=" << fmt(m.recall) << "\n"
                  << "f1=" << fmt(m.f1) << "\n"
                  << "iou=" << fmt(m.iou) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unsupervised flood mapping over SAR image time series"};
    app.require_subcommand(1);

    // segment
    auto* segment = app.add_subcommand("segment", "Water segmentation of a single raster");
    std::string seg_input, seg_output;
    DetectorParams seg_params;
    segment->add_option("--input", seg_input, "FR32 raster")->required();
    segment->add_option("--output", seg_output, "output PGM mask")->required();
    segment->add_option("--kernel-size", seg_params.kernel_size, "boxcar window side");
    segment->add_option("--threshold", seg_params.threshold, "linear backscatter threshold");
    segment->add_option("--min-components", seg_params.num_components,
                        "minimum surviving water component size");
    segment->add_option("--channel", seg_params.channel, "polarization channel (VV or VH)");

    // detect
    auto* detect = app.add_subcommand("detect", "Run the flood detector over a sequence");
    std::string det_manifest, det_out_dir;
    bool det_warmup_zeros = false;
    std::optional<std::uint64_t> det_seed;
    detect->add_option("--manifest", det_manifest, "sequence manifest JSON")->required();
    detect->add_option("--out-dir", det_out_dir, "output directory")->required();
    detect->add_flag("--emit-warmup-zeros", det_warmup_zeros,
                     "write all-zero masks for warm-up frames");
    detect->add_option("--seed", det_seed, "override manifest seed");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Generate a synthetic scene");
    std::string sim_scene, sim_out_dir;
    simulate->add_option("--scene", sim_scene, "scene spec JSON")->required();
    simulate->add_option("--out-dir", sim_out_dir, "output directory")->required();

    // eval
    auto* eval = app.add_subcommand("eval", "Compare predicted and reference masks");
    std::string eval_pred, eval_truth;
    int eval_score_from = 0;
    bool eval_json = false;
    eval->add_option("--pred-dir", eval_pred, "predicted mask directory")->required();
    eval->add_option("--truth-dir", eval_truth, "reference mask directory")->required();
    eval->add_option("--score-from", eval_score_from, "skip the first N paired frames");
    eval->add_flag("--json", eval_json, "JSON report instead of key=value lines");

    // validate
    auto* validate = app.add_subcommand("validate", "Check a manifest and its frames");
    std::string val_manifest;
    validate->add_option("--manifest", val_manifest, "sequence manifest JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*segment) {
            const auto violations = seg_params.validate();
            if (!violations.empty()) {
                for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
                return kExitValidation;
            }
            return cmd_segment(seg_input, seg_output, seg_params);
        }
        if (*detect) return cmd_detect(det_manifest, det_out_dir, det_warmup_zeros, det_seed);
        if (*simulate) return cmd_simulate(sim_scene, sim_out_dir);
        if (*eval) return cmd_eval(eval_pred, eval_truth, eval_score_from, eval_json);
        if (*validate) return cmd_validate(val_manifest);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
