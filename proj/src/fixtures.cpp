#include "gazebench/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "gazebench/image_io.hpp"
#include "gazebench/rng.hpp"
#include "gazebench/scanpath_io.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace gazebench::fixtures {

namespace {

struct Node {
    double x, y;
};

// Node layouts echo the stimuli: graph nodes sit in a band near the top or
// bottom of the image rather than centered.
std::vector<Node> stimulus_nodes(const FixtureParams& params, const FixtureStimulus& stim) {
    Rng rng(derive_seed(params.seed, stim.id + "/nodes", 0));
    const int n = static_cast<int>(stim.node_count);
    const bool top_band = rng.next_double() < 0.5;
    std::vector<Node> nodes;
    for (int i = 0; i < n; ++i) {
        const double fx = (i + 0.5) / n;
        Node node;
        node.x = std::clamp(fx + 0.08 * (rng.next_double() - 0.5), 0.08, 0.92);
        node.y = std::clamp((top_band ? 0.22 : 0.72) + 0.18 * rng.next_double(), 0.08, 0.92);
        nodes.push_back(node);
    }
    return nodes;
}

double blob(double dx, double dy, double sigma) {
    return std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
}

SaliencyMap rasterize(const FixtureParams& params, const std::vector<Node>& nodes, std::size_t n_active,
                      double background, double bin_s) {
    SaliencyMap map;
    map.width = params.map_width;
    map.height = params.map_height;
    map.duration_bin_s = bin_s;
    map.values.resize(static_cast<std::size_t>(map.width) * map.height);
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            auto [cx, cy] = map.pixel_center(x, y);
            double v = background;
            for (std::size_t i = 0; i < n_active && i < nodes.size(); ++i)
                v += blob(cx - nodes[i].x, cy - nodes[i].y, 0.06);
            map.values[static_cast<std::size_t>(y) * map.width + x] = v;
        }
    }
    return map;
}

std::vector<std::uint8_t> to_gray8(const SaliencyMap& map) {
    const double peak = *std::max_element(map.values.begin(), map.values.end());
    std::vector<std::uint8_t> px(map.values.size());
    for (std::size_t i = 0; i < px.size(); ++i)
        px[i] = static_cast<std::uint8_t>(std::lround(255.0 * map.values[i] / peak));
    return px;
}

const double kBins[3] = {0.5, 3.0, 5.0};

} // namespace

const std::vector<FixtureStimulus>& fixture_stimuli() {
    static const std::vector<FixtureStimulus> stimuli = {
        {"s01", QuestionDifficulty::Hard, NodeCount::Six},
        {"s02", QuestionDifficulty::Easy, NodeCount::Six},
        {"s03", QuestionDifficulty::Hard, NodeCount::Three},
        {"s04", QuestionDifficulty::Easy, NodeCount::Three},
    };
    return stimuli;
}

std::vector<SaliencyMap> stimulus_maps(const FixtureParams& params, const FixtureStimulus& stim) {
    const auto nodes = stimulus_nodes(params, stim);
    std::vector<SaliencyMap> maps;
    maps.push_back(rasterize(params, nodes, (nodes.size() + 1) / 2, 0.0, kBins[0]));
    maps.push_back(rasterize(params, nodes, nodes.size(), 0.0, kBins[1]));
    maps.push_back(rasterize(params, nodes, nodes.size(), 0.05, kBins[2]));
    return maps;
}

Scanpath organic_scanpath(const FixtureParams& params, const FixtureStimulus& stim,
                          const std::string& participant_id) {
    const auto nodes = stimulus_nodes(params, stim);
    Rng rng(derive_seed(params.seed, stim.id + "/" + participant_id, 1));

    Scanpath sp;
    sp.stimulus_id = stim.id;
    sp.participant_id = participant_id;
    sp.source = Source::Human;
    double onset = 0.0;
    for (int k = 0; k < params.organic_fixations; ++k) {
        const Node& node = nodes[static_cast<std::size_t>(rng.next_double() * nodes.size()) %
                                 nodes.size()];
        Fixation f;
        f.x = std::clamp(node.x + 0.02 * (rng.next_double() - 0.5), 0.0, 1.0);
        f.y = std::clamp(node.y + 0.02 * (rng.next_double() - 0.5), 0.0, 1.0);
        f.duration_ms = 180.0 + 140.0 * rng.next_double();
        f.onset_ms = onset;
        onset += f.duration_ms + 30.0; // saccade gap
        sp.fixations.push_back(f);
    }
    return sp;
}

std::string synthetic_filename(const std::string& stimulus_id, const std::string& mode, int index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "_%03d.json", index);
    return stimulus_id + "_" + mode + buf;
}

namespace {

std::string participant_name(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "p%02d", i + 1);
    return buf;
}

void write_gaze_log(const std::string& path, const FixtureParams& params) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "participant_id,stimulus_id,timestamp_ms,x,y,validity,difficulty,node_count\n";

    const double dt = 1000.0 / 60.0;
    char buf[160];
    for (const auto& stim : fixture_stimuli()) {
        for (int p = 0; p < params.participants; ++p) {
            const std::string participant = participant_name(p);
            const Scanpath sp = organic_scanpath(params, stim, participant);
            Rng noise(derive_seed(params.seed, stim.id + "/" + participant + "/log", 2));
            double t = 0.0;
            int row = 0;
            auto emit = [&](double x, double y, bool valid) {
                std::snprintf(buf, sizeof buf, "%s,%s,%.3f,%.6f,%.6f,%s,%s,%d\n",
                              participant.c_str(), stim.id.c_str(), t, x, y, valid ? "1" : "0",
                              to_string(stim.difficulty).c_str(), static_cast<int>(stim.node_count));
                out << buf;
                t += dt;
                ++row;
            };
            for (std::size_t k = 0; k < sp.fixations.size(); ++k) {
                const Fixation& f = sp.fixations[k];
                const int n_samples = std::max(2, static_cast<int>(f.duration_ms / dt));
                for (int s = 0; s < n_samples; ++s) {
                    const bool dropout = row % 53 == 52; // occasional tracker loss
                    emit(f.x + 0.002 * (noise.next_double() - 0.5),
                         f.y + 0.002 * (noise.next_double() - 0.5), !dropout);
                }
                if (k + 1 < sp.fixations.size()) {
                    const Fixation& g = sp.fixations[k + 1];
                    emit(0.67 * f.x + 0.33 * g.x, 0.67 * f.y + 0.33 * g.y, true);
                    emit(0.33 * f.x + 0.67 * g.x, 0.33 * f.y + 0.67 * g.y, true);
                }
            }
        }
    }
}

} // namespace

void write_fixture_dataset(const std::string& out_dir, const FixtureParams& params) {
    const fs::path root(out_dir);
    fs::create_directories(root / "maps");
    fs::create_directories(root / "trials");
    fs::create_directories(root / "gaze");
    fs::create_directories(root / "synthetic"); // filled by the sample step

    ordered_json maps_manifest = ordered_json::array();
    ordered_json eval_manifest;
    eval_manifest["mode"] = "per-participant";
    ordered_json trials = ordered_json::array();
    ordered_json synthetic = ordered_json::array();

    for (const auto& stim : fixture_stimuli()) {
        const auto maps = stimulus_maps(params, stim);
        ordered_json map_entry;
        map_entry["stimulus_id"] = stim.id;
        ordered_json map_files = ordered_json::array();
        for (std::size_t b = 0; b < maps.size(); ++b) {
            char name[48];
            std::snprintf(name, sizeof name, "%s_d%g.png", stim.id.c_str(), kBins[b]);
            const std::string rel = std::string("maps/") + name;
            write_png_gray8((root / rel).string(), maps[b].width, maps[b].height, to_gray8(maps[b]));
            ordered_json jm;
            jm["path"] = rel;
            jm["duration_s"] = kBins[b];
            map_files.push_back(std::move(jm));
        }
        map_entry["maps"] = std::move(map_files);
        maps_manifest.push_back(std::move(map_entry));

        ordered_json synth_entry;
        synth_entry["stimulus_id"] = stim.id;
        synth_entry["generator"] = "prob";
        ordered_json synth_paths = ordered_json::array();
        for (int p = 0; p < params.participants; ++p)
            synth_paths.push_back("synthetic/" + synthetic_filename(stim.id, "prob", p));
        synth_entry["scanpath_paths"] = std::move(synth_paths);
        synthetic.push_back(std::move(synth_entry));

        for (int p = 0; p < params.participants; ++p) {
            const std::string participant = participant_name(p);
            const Scanpath sp = organic_scanpath(params, stim, participant);
            const std::string rel = "trials/" + participant + "_" + stim.id + ".json";
            write_scanpath_file((root / rel).string(), sp);

            ordered_json jt;
            jt["participant_id"] = participant;
            jt["stimulus_id"] = stim.id;
            jt["difficulty"] = to_string(stim.difficulty);
            jt["node_count"] = static_cast<int>(stim.node_count);
            jt["scanpath_path"] = rel;
            trials.push_back(std::move(jt));
        }
    }

    eval_manifest["trials"] = std::move(trials);
    eval_manifest["synthetic"] = std::move(synthetic);

    {
        std::ofstream out(root / "maps_manifest.json", std::ios::binary);
        if (!out) throw IoError("cannot write maps_manifest.json");
        out << maps_manifest.dump(2) << "\n";
    }
    {
        std::ofstream out(root / "eval_manifest.json", std::ios::binary);
        if (!out) throw IoError("cannot write eval_manifest.json");
        out << eval_manifest.dump(2) << "\n";
    }
    write_gaze_log((root / "gaze" / "gaze_log.csv").string(), params);
}

} // namespace gazebench::fixtures
