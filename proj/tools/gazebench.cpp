#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gazebench/errors.hpp"
#include "gazebench/eval_manifest.hpp"
#include "gazebench/fixtures.hpp"
#include "gazebench/gaze_log.hpp"
#include "gazebench/harness.hpp"
#include "gazebench/idt.hpp"
#include "gazebench/image_io.hpp"
#include "gazebench/log.hpp"
#include "gazebench/render.hpp"
#include "gazebench/rng.hpp"
#include "gazebench/saliency_io.hpp"
#include "gazebench/samplers.hpp"
#include "gazebench/scanpath_io.hpp"

namespace fs = std::filesystem;
using namespace gazebench;

namespace {

constexpr const char* kVersion = "gazebench 0.1.0";

// Exit codes, also listed in --help:
//   0 success, 2 bad usage/flags, 3 file I/O, 4 malformed input
//   (schema/format/parameter), 5 empty or degenerate input, 1 internal.
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitSchema = 4;
constexpr int kExitEmpty = 5;
constexpr int kExitInternal = 1;

struct IngestOptions {
    std::string log_path;
    std::string out_path;
    std::string out_dir;
    std::string manifest_out;
    GazeLogSchema schema;
    IdtParams idt;
    int px_width = 0, px_height = 0; // when set, divide raw pixel coords
};

struct SampleOptions {
    std::string mode = "prob";
    std::vector<std::string> map_paths;
    std::string manifest;
    std::string out_path;
    std::string out_dir;
    std::string stimulus_id;
    int count = 1;
    int width = 640, height = 480; // center mode canvas
    SamplerConfig cfg;
};

struct EvaluateOptions {
    std::string manifest;
    std::string out_path = "results.csv";
    std::string per_pair_path;
    std::string format = "csv";
    std::string mode = "per-participant";
    bool mode_given = false;
    EvalPlan plan;
    std::uint64_t seed = 0;
};

struct RenderOptions {
    std::string scanpath_path;
    std::string stimulus_path;
    std::string out_path;
    RenderStyle style;
    std::string bg = "white";
};

struct FixtureOptions {
    std::string out_dir;
    fixtures::FixtureParams params;
};

std::string with_suffix(const std::string& path, const std::string& suffix) {
    fs::path p(path);
    fs::path out = p.parent_path() / (p.stem().string() + suffix + p.extension().string());
    return out.string();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

int run_ingest(const IngestOptions& opt) {
    if (opt.out_path.empty() && opt.out_dir.empty())
        throw SchemaError("ingest: need --out or --out-dir");
    std::ifstream in(opt.log_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + opt.log_path);

    ParseStats stats;
    auto trials = parse_gaze_log(in, opt.schema, &stats);
    log::info("parsed ", stats.rows_parsed, " rows (", stats.rows_skipped, " skipped) into ",
              trials.size(), " trials");
    if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);

    if (opt.px_width > 0 && opt.px_height > 0)
        for (auto& t : trials)
            for (auto& s : t.samples) {
                s.x /= opt.px_width;
                s.y /= opt.px_height;
            }

    std::vector<Scanpath> detected;
    nlohmann::ordered_json manifest_trials = nlohmann::ordered_json::array();
    for (const auto& t : trials) {
        Scanpath sp;
        try {
            sp = detect_fixations(t, opt.idt);
        } catch (const EmptyInputError&) {
            log::warn("trial ", t.participant_id, "/", t.stimulus_id,
                      " produced no fixations; dropped");
            continue;
        }
        if (!opt.out_dir.empty()) {
            const std::string rel = t.participant_id + "_" + t.stimulus_id + ".json";
            write_scanpath_file((fs::path(opt.out_dir) / rel).string(), sp);
            if (!opt.manifest_out.empty() && t.difficulty && t.node_count) {
                nlohmann::ordered_json jt;
                jt["participant_id"] = t.participant_id;
                jt["stimulus_id"] = t.stimulus_id;
                jt["difficulty"] = to_string(*t.difficulty);
                jt["node_count"] = static_cast<int>(*t.node_count);
                jt["scanpath_path"] = rel;
                manifest_trials.push_back(std::move(jt));
            }
        }
        detected.push_back(std::move(sp));
    }
    if (detected.empty()) throw EmptyInputError("ingest: every trial was dropped");

    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw IoError("cannot write " + opt.out_path);
        write_scanpath_jsonl(out, detected);
    }
    if (!opt.manifest_out.empty()) {
        if (manifest_trials.empty())
            throw SchemaError(
                "--emit-manifest needs --out-dir plus --difficulty-col and --nodes-col");
        nlohmann::ordered_json doc;
        doc["mode"] = "per-participant";
        doc["trials"] = std::move(manifest_trials);
        doc["synthetic"] = nlohmann::ordered_json::array();
        write_text_file(opt.manifest_out, doc.dump(2) + "\n");
    }
    std::cout << "ingest: " << detected.size() << " scanpaths ("
              << stats.rows_skipped << " rows skipped)\n";
    return 0;
}

Scanpath run_one_sampler(const SampleOptions& opt, const std::vector<SaliencyMap>& maps,
                         const std::string& stimulus, int index) {
    SamplerConfig cfg = opt.cfg;
    cfg.seed = derive_seed(opt.cfg.seed, stimulus, static_cast<std::uint64_t>(index));
    Scanpath sp;
    if (opt.mode == "prob") {
        sp = sample_probabilistic(maps, cfg);
    } else if (opt.mode == "ior") {
        sp = sample_ior(maps.back(), cfg); // largest duration bin
    } else {
        sp = sample_center_baseline(opt.width, opt.height, cfg);
    }
    sp.stimulus_id = stimulus;
    return sp;
}

int run_sample(const SampleOptions& opt) {
    std::vector<MapSet> sets;
    if (!opt.manifest.empty()) {
        sets = load_map_manifest(opt.manifest);
    } else if (!opt.map_paths.empty()) {
        sets.push_back(load_map_set(opt.map_paths, opt.stimulus_id));
    } else if (opt.mode == "center") {
        MapSet dummy;
        dummy.stimulus_id = opt.stimulus_id.empty() ? "center" : opt.stimulus_id;
        sets.push_back(std::move(dummy));
    } else {
        throw SchemaError("sample: need --map or --manifest");
    }

    if (sets.size() > 1 && opt.out_dir.empty())
        throw SchemaError("sample: multiple stimuli need --out-dir");
    if (opt.out_dir.empty() && opt.out_path.empty())
        throw SchemaError("sample: need --out or --out-dir");
    if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);

    int written = 0;
    for (const auto& set : sets) {
        for (int k = 0; k < opt.count; ++k) {
            const Scanpath sp = run_one_sampler(opt, set.maps, set.stimulus_id, k);
            std::string path;
            if (!opt.out_dir.empty()) {
                path = (fs::path(opt.out_dir) / fixtures::synthetic_filename(set.stimulus_id,
                                                                             opt.mode, k))
                           .string();
            } else if (opt.count > 1) {
                char suffix[16];
                std::snprintf(suffix, sizeof suffix, "_%03d", k);
                path = with_suffix(opt.out_path, suffix);
            } else {
                path = opt.out_path;
            }
            write_scanpath_file(path, sp);
            ++written;
        }
    }
    std::cout << "sample: wrote " << written << " scanpath file(s)\n";
    return 0;
}

int run_evaluate(EvaluateOptions& opt) {
    opt.plan.metric_params.validate();
    std::optional<GeneratorMode> override;
    if (opt.mode_given)
        override = opt.mode == "per-stimulus" ? GeneratorMode::PerStimulus
                                              : GeneratorMode::PerParticipant;
    const EvalInputs inputs = load_eval_manifest(opt.manifest, opt.plan, opt.seed, override);
    opt.plan.mode = inputs.mode.value_or(opt.plan.mode);

    const TableFormat fmt = opt.format == "md" ? TableFormat::Markdown : TableFormat::Csv;
    const bool multi = inputs.synthetic.size() > 1;
    for (const auto& [generator, by_stimulus] : inputs.synthetic) {
        MetricReport report = evaluate(inputs.trials, by_stimulus, opt.plan);
        if (report.generator.empty()) report.generator = generator;

        const std::string out_path = multi ? with_suffix(opt.out_path, "_" + generator)
                                           : opt.out_path;
        write_text_file(out_path, emit_tables(report, fmt));

        std::string per_pair = opt.per_pair_path;
        if (per_pair.empty())
            per_pair = (fs::path(out_path).parent_path() / "per_pair.csv").string();
        if (multi) per_pair = with_suffix(per_pair, "_" + generator);
        std::ofstream pp(per_pair, std::ios::binary);
        if (!pp) throw IoError("cannot write " + per_pair);
        write_per_pair_csv(pp, report);

        std::cout << "evaluate[" << generator << "]: " << report.per_pair.size()
                  << " pairs -> " << out_path << "\n";
    }
    return 0;
}

std::array<std::uint8_t, 3> parse_color(const std::string& s) {
    if (s == "white") return {255, 255, 255};
    if (s == "black") return {0, 0, 0};
    if (s.size() == 7 && s[0] == '#') {
        auto hex = [&](int i) {
            return static_cast<std::uint8_t>(std::stoi(s.substr(i, 2), nullptr, 16));
        };
        return {hex(1), hex(3), hex(5)};
    }
    throw SchemaError("render: unknown color '" + s + "'");
}

int run_render(RenderOptions& opt) {
    const Scanpath sp = read_scanpath_file(opt.scanpath_path);
    opt.style.background = parse_color(opt.bg);

    std::optional<ImageU8> stimulus;
    if (!opt.stimulus_path.empty()) {
        stimulus = load_png_image(opt.stimulus_path);
        opt.style.canvas_width = stimulus->width;
        opt.style.canvas_height = stimulus->height;
    }

    if (fs::path(opt.out_path).extension() == ".svg") {
        write_text_file(opt.out_path, render_scanpath_svg(sp, opt.style));
    } else {
        const ImageU8 img = render_scanpath(sp, stimulus ? &*stimulus : nullptr, opt.style);
        write_png_rgb8(opt.out_path, img);
    }
    std::cout << "render: " << sp.size() << " fixations -> " << opt.out_path << "\n";
    return 0;
}

int run_synth_fixtures(const FixtureOptions& opt) {
    fixtures::write_fixture_dataset(opt.out_dir, opt.params);
    std::cout << "synth-fixtures: dataset written to " << opt.out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scanpath generation and comparison toolkit for eye-tracking studies"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config")->description("key=value config file; flags override it");
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    app.footer(
        "Environment:\n"
        "  GAZEBENCH_LOG   log level: error|warn|info|debug (default warn)\n"
        "Exit codes:\n"
        "  0 success, 2 bad usage or unknown flag, 3 file I/O error,\n"
        "  4 malformed input (schema/format/parameter), 5 empty or degenerate input,\n"
        "  1 internal error");

    IngestOptions ing;
    auto* c_ing = app.add_subcommand("ingest", "Parse a gaze log, detect fixations, emit scanpaths");
    c_ing->add_option("--log", ing.log_path, "delimited gaze log (comma or tab, header row)")
        ->required();
    c_ing->add_option("--out", ing.out_path, "JSON-lines output (one scanpath per line)");
    c_ing->add_option("--out-dir", ing.out_dir, "directory for one JSON file per trial");
    c_ing->add_option("--emit-manifest", ing.manifest_out,
                      "write an evaluation manifest for the detected trials");
    c_ing->add_option("--timestamp-col", ing.schema.timestamp_col, "timestamp column name");
    c_ing->add_option("--x-col", ing.schema.x_col, "x column name");
    c_ing->add_option("--y-col", ing.schema.y_col, "y column name");
    c_ing->add_option("--validity-col", ing.schema.validity_col, "validity column name");
    c_ing->add_option("--participant-col", ing.schema.participant_col, "participant column name");
    c_ing->add_option("--stimulus-col", ing.schema.stimulus_col, "stimulus column name");
    c_ing->add_option("--difficulty-col", ing.schema.difficulty_col,
                      "question difficulty column (optional)");
    c_ing->add_option("--nodes-col", ing.schema.nodes_col, "node count column (optional)");
    c_ing->add_option("--px-width", ing.px_width, "stimulus width when the log is in pixels");
    c_ing->add_option("--px-height", ing.px_height, "stimulus height when the log is in pixels");
    c_ing->add_option("--dispersion-max", ing.idt.dispersion_max,
                      "I-DT dispersion threshold, normalized units");
    c_ing->add_option("--duration-min", ing.idt.duration_min_ms, "I-DT minimum duration, ms");
    c_ing->add_option("--blink-bridge", ing.idt.blink_bridge_max_ms,
                      "bridge invalid gaps shorter than this, ms");

    SampleOptions smp;
    auto* c_smp = app.add_subcommand("sample", "Generate synthetic scanpaths from saliency maps");
    c_smp->add_option("--mode", smp.mode, "prob | ior | center")
        ->check(CLI::IsMember({"prob", "ior", "center"}));
    c_smp->add_option("--map", smp.map_paths,
                      "map file(s); multi-duration sets use the _d<seconds> suffix");
    c_smp->add_option("--manifest", smp.manifest, "map manifest JSON (one entry per stimulus)");
    c_smp->add_option("--out", smp.out_path, "output scanpath JSON (single stimulus)");
    c_smp->add_option("--out-dir", smp.out_dir, "output directory (named per stimulus and index)");
    c_smp->add_option("--stimulus-id", smp.stimulus_id, "stimulus id override");
    c_smp->add_option("--n-fixations", smp.cfg.n_fixations, "fixations per scanpath");
    c_smp->add_option("--count", smp.count, "scanpaths per stimulus")->check(CLI::PositiveNumber);
    c_smp->add_option("--seed", smp.cfg.seed, "base RNG seed");
    c_smp->add_option("--mean-fix-dur", smp.cfg.mean_fix_dur_ms, "fixation duration, ms");
    c_smp->add_option("--gaussian-weight", smp.cfg.gaussian_weight,
                      "locality mask weight w in [0,1] (prob mode)");
    c_smp->add_option("--sigma-loc", smp.cfg.sigma_loc, "locality Gaussian spread (prob mode)");
    c_smp->add_option("--ior-lambda", smp.cfg.ior_lambda, "IOR suppression strength (0,1]");
    c_smp->add_option("--ior-beta", smp.cfg.ior_beta, "IOR per-step recovery factor (0,1)");
    c_smp->add_option("--ior-sigma", smp.cfg.ior_sigma, "IOR suppression spread");
    c_smp->add_option("--width", smp.width, "canvas width (center mode)");
    c_smp->add_option("--height", smp.height, "canvas height (center mode)");

    EvaluateOptions ev;
    auto* c_ev = app.add_subcommand("evaluate", "Compare human and synthetic scanpaths");
    c_ev->add_option("--manifest", ev.manifest, "evaluation manifest JSON")->required();
    c_ev->add_option("--out", ev.out_path, "grouped results table (csv or md)");
    c_ev->add_option("--per-pair-out", ev.per_pair_path, "per-pair CSV (default: per_pair.csv)");
    c_ev->add_option("--format", ev.format, "csv | md")->check(CLI::IsMember({"csv", "md"}));
    auto* mode_opt = c_ev->add_option("--mode", ev.mode, "per-participant | per-stimulus")
                         ->check(CLI::IsMember({"per-participant", "per-stimulus"}));
    c_ev->add_option("--filter-organic-n", ev.plan.filter_organic_to_n,
                     "truncate human paths to their first N fixations");
    c_ev->add_option("--rho", ev.plan.metric_params.rho, "recurrence radius, normalized units");
    c_ev->add_option("--l-min", ev.plan.metric_params.l_min, "minimum recurrence run length");
    c_ev->add_option("--n-fixations", ev.plan.n_fixations, "fixations for inline sampler sources");
    c_ev->add_option("--seed", ev.seed, "seed for inline sampler sources");
    c_ev->add_option("--jobs", ev.plan.jobs, "worker threads (0 = all cores)");

    RenderOptions rnd;
    auto* c_rnd = app.add_subcommand("render", "Draw a scanpath overlay (PNG or SVG)");
    c_rnd->add_option("--scanpath", rnd.scanpath_path, "scanpath JSON file")->required();
    c_rnd->add_option("--stimulus", rnd.stimulus_path, "stimulus PNG to draw over");
    c_rnd->add_option("--out", rnd.out_path, "output image (.png or .svg)")->required();
    c_rnd->add_option("--dot-radius", rnd.style.dot_radius_px, "fixation dot radius, px");
    c_rnd->add_option("--line-width", rnd.style.line_width_px, "connecting line width, px");
    c_rnd->add_option("--width", rnd.style.canvas_width, "canvas width without a stimulus");
    c_rnd->add_option("--height", rnd.style.canvas_height, "canvas height without a stimulus");
    c_rnd->add_option("--bg", rnd.bg, "background: white | black | #rrggbb");

    FixtureOptions fx;
    auto* c_fx = app.add_subcommand("synth-fixtures",
                                    "Write the deterministic miniature benchmark dataset");
    c_fx->add_option("--out-dir", fx.out_dir, "output directory")->required();
    c_fx->add_option("--seed", fx.params.seed, "dataset seed");
    c_fx->add_option("--participants", fx.params.participants, "participants per stimulus")
        ->check(CLI::PositiveNumber);
    c_fx->add_option("--organic-fixations", fx.params.organic_fixations,
                     "fixations per organic scanpath")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_ing) return run_ingest(ing);
        if (*c_smp) return run_sample(smp);
        if (*c_ev) {
            ev.mode_given = mode_opt->count() > 0;
            return run_evaluate(ev);
        }
        if (*c_rnd) return run_render(rnd);
        if (*c_fx) return run_synth_fixtures(fx);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const EmptyInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmpty;
    } catch (const DegenerateMapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmpty;
    } catch (const SuppressionSaturationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmpty;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
