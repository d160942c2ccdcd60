#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gazebench/errors.hpp"

namespace gazebench {

/// One fixation in normalized stimulus coordinates. x and y lie in [0,1]
/// with y growing downward (image convention); times are milliseconds from
/// stimulus onset.
struct Fixation {
    double x = 0.0;
    double y = 0.0;
    double duration_ms = 0.0;
    double onset_ms = 0.0;
};

enum class Source { Human, Synthetic };

/// Temporally ordered fixation sequence over one stimulus.
struct Scanpath {
    std::string stimulus_id;
    std::string participant_id; // empty for synthetic paths
    Source source = Source::Human;
    std::string generator;      // set when source == Synthetic
    std::vector<Fixation> fixations;

    std::size_t size() const { return fixations.size(); }
    bool empty() const { return fixations.empty(); }
};

/// Nonnegative 2-D grid over the stimulus, row-major. Multi-duration sets
/// carry an upper time bound in seconds per map.
struct SaliencyMap {
    int width = 0;
    int height = 0;
    std::vector<double> values; // row-major, index = y * width + x
    std::optional<double> duration_bin_s;

    double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
    double total_mass() const;

    /// Normalized coordinates of a pixel center.
    std::pair<double, double> pixel_center(int x, int y) const {
        return {(x + 0.5) / width, (y + 0.5) / height};
    }

    /// Throws RangeError when dims and grid length disagree or a value is
    /// negative; DegenerateMapError when every value is zero.
    void validate() const;
};

enum class QuestionDifficulty { Easy, Hard };
enum class NodeCount { Three = 3, Six = 6 };

std::string to_string(QuestionDifficulty d);
std::string to_string(NodeCount n);
QuestionDifficulty difficulty_from_string(const std::string& s);
NodeCount node_count_from_int(int n);

/// One (participant, stimulus, condition) unit of the experiment.
struct TrialRecord {
    std::string participant_id;
    std::string stimulus_id;
    QuestionDifficulty difficulty = QuestionDifficulty::Easy;
    NodeCount node_count = NodeCount::Three;
    Scanpath human_scanpath;
};

/// Metric values for one human/synthetic pair. Determinism and laminarity
/// are absent when either path is too short for recurrence analysis.
struct PairResult {
    std::string stimulus_id;
    std::string participant_id;
    std::string generator;
    int synthetic_index = 0;
    QuestionDifficulty difficulty = QuestionDifficulty::Easy;
    NodeCount node_count = NodeCount::Three;
    bool indexed = false; // i-th participant paired with i-th synthetic path
    double dtw = 0.0;
    double eyenalysis = 0.0;
    std::optional<double> determinism;
    std::optional<double> laminarity;
};

/// Mean and population standard deviation over n values; n == 0 means the
/// cell survived with no usable pairs and carries no statistics.
struct Aggregate {
    int n = 0;
    double mean = 0.0;
    double stddev = 0.0;

    bool valid() const { return n > 0; }
};

struct GroupKey {
    QuestionDifficulty difficulty = QuestionDifficulty::Easy;
    NodeCount node_count = NodeCount::Three;

    bool operator<(const GroupKey& o) const {
        if (difficulty != o.difficulty) return difficulty < o.difficulty;
        return node_count < o.node_count;
    }
    bool operator==(const GroupKey& o) const {
        return difficulty == o.difficulty && node_count == o.node_count;
    }
};

struct GroupStats {
    Aggregate dtw;
    Aggregate eyenalysis;
    Aggregate determinism;
    Aggregate laminarity;
};

/// Per-pair metric values plus condition-grouped aggregates. `grouped`
/// covers all human x synthetic pairs; `grouped_indexed` covers only the
/// i-th/i-th pairs and is filled in per-participant mode.
struct MetricReport {
    std::string generator;
    std::vector<PairResult> per_pair;
    std::map<GroupKey, GroupStats> grouped;
    std::map<GroupKey, GroupStats> grouped_indexed;
};

/// Pixel -> normalized coordinates. Throws RangeError for non-positive dims
/// or a point outside [0,width]x[0,height].
std::pair<double, double> normalize_point(double px, double py, int width, int height);

/// Normalized -> pixel coordinates; exact inverse of normalize_point up to
/// floating rounding.
std::pair<double, double> denormalize_point(double nx, double ny, int width, int height);

} // namespace gazebench
