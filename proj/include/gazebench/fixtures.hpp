#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gazebench/types.hpp"

namespace gazebench::fixtures {

/// Miniature deterministic dataset: four stimuli covering every
/// (difficulty, node-count) condition, a multi-duration saliency map set
/// per stimulus, organic scanpaths per participant, a 60 Hz gaze log, and
/// the map/eval manifests wiring everything together. Everything derives
/// from the seed, so two runs produce identical bytes.
struct FixtureParams {
    std::uint64_t seed = 0;
    int participants = 3;
    int organic_fixations = 12;
    int map_width = 64;
    int map_height = 48;
};

struct FixtureStimulus {
    std::string id;
    QuestionDifficulty difficulty;
    NodeCount node_count;
};

const std::vector<FixtureStimulus>& fixture_stimuli();

/// Writes the dataset under out_dir:
///   maps/<stim>_d{0.5,3,5}.png   maps_manifest.json
///   trials/<participant>_<stim>.json
///   gaze/gaze_log.csv
///   eval_manifest.json           (synthetic paths point at synthetic/)
void write_fixture_dataset(const std::string& out_dir, const FixtureParams& params);

/// The organic scanpath the dataset contains for one trial (same values
/// that write_fixture_dataset serializes).
Scanpath organic_scanpath(const FixtureParams& params, const FixtureStimulus& stim,
                          const std::string& participant_id);

/// The multi-duration map set for one stimulus, in memory.
std::vector<SaliencyMap> stimulus_maps(const FixtureParams& params, const FixtureStimulus& stim);

/// Filename the sampling CLI produces for path k of a stimulus, e.g.
/// "s01_prob_000.json".
std::string synthetic_filename(const std::string& stimulus_id, const std::string& mode, int index);

} // namespace gazebench::fixtures
