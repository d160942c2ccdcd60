#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gazebench/harness.hpp"
#include "gazebench/samplers.hpp"
#include "gazebench/types.hpp"

namespace gazebench {

/// Parsed evaluation manifest: trials with their scanpaths loaded and
/// synthetic paths grouped by generator then stimulus. Synthetic sources
/// may list scanpath files or carry an inline sampler config; inline
/// sources are sampled here (count = participants of the stimulus in
/// per-participant mode, 1 in per-stimulus mode) with seeds derived from
/// the plan seed.
struct EvalInputs {
    std::optional<GeneratorMode> mode; // manifest-level default
    std::vector<TrialRecord> trials;
    std::map<std::string, std::map<std::string, std::vector<Scanpath>>> synthetic; // generator -> stimulus
};

/// mode_override (the CLI flag) wins over the manifest's own mode when both
/// are present; the plan's mode is the last resort.
EvalInputs load_eval_manifest(const std::string& manifest_path, const EvalPlan& plan,
                              std::uint64_t seed,
                              std::optional<GeneratorMode> mode_override = std::nullopt);

} // namespace gazebench
