#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gazebench/types.hpp"

namespace gazebench {

/// One raw eye-tracker record. Coordinates are normalized but may lie
/// outside [0,1] for off-screen gaze.
struct GazeSample {
    double timestamp_ms = 0.0;
    double x = 0.0;
    double y = 0.0;
    bool valid = true;
};

/// Column names mapping the log's header to the fields we need. The
/// difficulty/nodes columns are optional trial metadata.
struct GazeLogSchema {
    std::string timestamp_col = "timestamp_ms";
    std::string x_col = "x";
    std::string y_col = "y";
    std::string validity_col = "validity";
    std::string participant_col = "participant_id";
    std::string stimulus_col = "stimulus_id";
    std::string difficulty_col; // empty = not present
    std::string nodes_col;      // empty = not present
};

/// All samples of one (participant, stimulus) trial, ordered by timestamp.
struct TrialSamples {
    std::string participant_id;
    std::string stimulus_id;
    std::optional<QuestionDifficulty> difficulty;
    std::optional<NodeCount> node_count;
    std::vector<GazeSample> samples;
};

struct ParseStats {
    std::size_t rows_total = 0;
    std::size_t rows_parsed = 0;
    std::size_t rows_skipped = 0;
};

/// Parses a delimited gaze log (comma or tab, autodetected from the header
/// row). Malformed rows are counted and skipped; rows that break strict
/// timestamp monotonicity within their trial are treated as malformed.
/// Validity accepts {0,1} and {valid,invalid}, case-insensitively.
///
/// Throws SchemaError when a mapped column is missing from the header and
/// EmptyInputError when no row parses.
std::vector<TrialSamples> parse_gaze_log(std::istream& in, const GazeLogSchema& schema,
                                         ParseStats* stats = nullptr);

} // namespace gazebench
