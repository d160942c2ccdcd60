#include "gazebench/eval_manifest.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "gazebench/rng.hpp"
#include "gazebench/saliency_io.hpp"
#include "gazebench/scanpath_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace gazebench {

namespace {

GeneratorMode mode_from_string(const std::string& s) {
    if (s == "per-participant") return GeneratorMode::PerParticipant;
    if (s == "per-stimulus") return GeneratorMode::PerStimulus;
    throw SchemaError("eval manifest: unknown mode '" + s + "'");
}

std::string resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_relative() ? (base / path).string() : path.string();
}

} // namespace

EvalInputs load_eval_manifest(const std::string& manifest_path, const EvalPlan& plan,
                              std::uint64_t seed, std::optional<GeneratorMode> mode_override) {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + manifest_path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw SchemaError(manifest_path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("trials") || !doc.contains("synthetic"))
        throw SchemaError(manifest_path + ": manifest needs trials and synthetic lists");

    const fs::path base = fs::path(manifest_path).parent_path();
    EvalInputs inputs;
    if (doc.contains("mode")) inputs.mode = mode_from_string(doc["mode"].get<std::string>());

    std::map<std::string, int> participants_per_stimulus;
    for (const auto& jt : doc["trials"]) {
        for (const char* field : {"participant_id", "stimulus_id", "difficulty", "node_count",
                                  "scanpath_path"})
            if (!jt.contains(field))
                throw SchemaError(manifest_path + ": trial entry lacks " + std::string(field));
        TrialRecord t;
        t.participant_id = jt["participant_id"].get<std::string>();
        t.stimulus_id = jt["stimulus_id"].get<std::string>();
        t.difficulty = difficulty_from_string(jt["difficulty"].get<std::string>());
        t.node_count = node_count_from_int(jt["node_count"].get<int>());
        t.human_scanpath = read_scanpath_file(resolve(base, jt["scanpath_path"].get<std::string>()));
        t.human_scanpath.participant_id = t.participant_id;
        t.human_scanpath.stimulus_id = t.stimulus_id;
        ++participants_per_stimulus[t.stimulus_id];
        inputs.trials.push_back(std::move(t));
    }
    if (inputs.trials.empty()) throw EmptyInputError(manifest_path + ": no trials");

    const GeneratorMode mode =
        mode_override ? *mode_override : inputs.mode.value_or(plan.mode);
    inputs.mode = mode;
    for (const auto& js : doc["synthetic"]) {
        if (!js.contains("stimulus_id") || !js.contains("generator"))
            throw SchemaError(manifest_path + ": synthetic entry lacks stimulus_id or generator");
        const std::string stimulus = js["stimulus_id"].get<std::string>();
        const std::string generator = js["generator"].get<std::string>();
        auto& bucket = inputs.synthetic[generator][stimulus];

        if (js.contains("scanpath_paths")) {
            for (const auto& jp : js["scanpath_paths"]) {
                Scanpath sp = read_scanpath_file(resolve(base, jp.get<std::string>()));
                sp.stimulus_id = stimulus;
                sp.source = Source::Synthetic;
                if (sp.generator.empty()) sp.generator = generator;
                bucket.push_back(std::move(sp));
            }
        } else if (js.contains("sampler")) {
            const auto& jc = js["sampler"];
            const std::string sampler_mode = jc.value("mode", std::string("prob"));
            SamplerConfig cfg;
            cfg.n_fixations = jc.value("n_fixations", plan.n_fixations);
            cfg.mean_fix_dur_ms = jc.value("mean_fix_dur_ms", cfg.mean_fix_dur_ms);
            cfg.gaussian_weight = jc.value("gaussian_weight", cfg.gaussian_weight);
            cfg.sigma_loc = jc.value("sigma_loc", cfg.sigma_loc);
            cfg.ior_lambda = jc.value("ior_lambda", cfg.ior_lambda);
            cfg.ior_beta = jc.value("ior_beta", cfg.ior_beta);
            cfg.ior_sigma = jc.value("ior_sigma", cfg.ior_sigma);
            const std::uint64_t base_seed = jc.value("seed", seed);

            std::vector<std::string> map_paths;
            if (jc.contains("maps"))
                for (const auto& jm : jc["maps"]) map_paths.push_back(resolve(base, jm.get<std::string>()));
            if (map_paths.empty() && sampler_mode != "center")
                throw SchemaError(manifest_path + ": sampler entry for " + stimulus + " lacks maps");

            const int count = mode == GeneratorMode::PerParticipant
                                  ? participants_per_stimulus[stimulus]
                                  : 1;
            for (int k = 0; k < count; ++k) {
                cfg.seed = derive_seed(base_seed, stimulus, static_cast<std::uint64_t>(k));
                Scanpath sp;
                if (sampler_mode == "prob") {
                    const MapSet set = load_map_set(map_paths, stimulus);
                    sp = sample_probabilistic(set.maps, cfg);
                } else if (sampler_mode == "ior") {
                    const MapSet set = load_map_set(map_paths, stimulus);
                    sp = sample_ior(set.maps.back(), cfg);
                } else if (sampler_mode == "center") {
                    sp = sample_center_baseline(jc.value("width", 1), jc.value("height", 1), cfg);
                } else {
                    throw SchemaError(manifest_path + ": unknown sampler mode '" + sampler_mode + "'");
                }
                sp.stimulus_id = stimulus;
                sp.generator = generator;
                bucket.push_back(std::move(sp));
            }
        } else {
            throw SchemaError(manifest_path + ": synthetic entry for " + stimulus +
                              " needs scanpath_paths or sampler");
        }
    }
    if (inputs.synthetic.empty()) throw EmptyInputError(manifest_path + ": no synthetic sources");
    return inputs;
}

} // namespace gazebench
