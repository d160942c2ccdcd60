#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gazebench/metrics.hpp"
#include "gazebench/types.hpp"

namespace gazebench {

/// PerParticipant: one synthetic path per human participant per stimulus;
/// the i-th synthetic path pairs with the i-th participant (stable ordering
/// by participant id) and all human x synthetic pairs additionally feed the
/// all-pairs means. PerStimulus: a single synthetic path pairs with every
/// human path of its stimulus.
enum class GeneratorMode { PerParticipant, PerStimulus };

struct EvalPlan {
    GeneratorMode mode = GeneratorMode::PerParticipant;
    int n_fixations = 12; // used when the manifest samples inline
    std::optional<int> filter_organic_to_n;
    MetricParams metric_params;
    int jobs = 0; // 0 = hardware concurrency

    void validate() const;
};

/// Runs the full pairing + metric + aggregation protocol for one generator.
/// Human paths are truncated first when filter_organic_to_n is set. Pairs
/// where either path has fewer than l_min fixations skip the recurrence
/// metrics but keep DTW and eyenalysis. Aggregates are arithmetic mean and
/// population standard deviation per (difficulty, node-count) cell; a cell
/// whose pairs were all excluded for a metric reports n = 0 and no
/// statistics. Metric evaluation parallelizes over pairs; results are
/// reduced in a fixed order so output does not depend on the job count.
MetricReport evaluate(const std::vector<TrialRecord>& trials,
                      const std::map<std::string, std::vector<Scanpath>>& synthetic_by_stimulus,
                      const EvalPlan& plan);

enum class TableFormat { Csv, Markdown };

/// Renders the condition-grouped table, one row per cell in the order
/// hard/6, easy/6, hard/3, easy/3, cells as "m.mmmm ± s.ssss". The indexed
/// grouping, when present, follows the all-pairs rows.
std::string emit_tables(const MetricReport& report, TableFormat format);

/// Raw per-pair rows for auditing the grouped means.
void write_per_pair_csv(std::ostream& out, const MetricReport& report);

} // namespace gazebench
