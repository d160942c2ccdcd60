#pragma once

#include <cstdint>
#include <vector>

#include "gazebench/types.hpp"

namespace gazebench {

/// Shared parameters for the recurrence-based metrics. rho is the
/// recurrence radius in normalized units; l_min the minimum run length.
struct MetricParams {
    double rho = 0.04;
    int l_min = 2;

    void validate() const {
        if (rho <= 0.0) throw RangeError("rho must be > 0");
        if (l_min < 2) throw RangeError("l_min must be >= 2");
    }
};

/// Boolean cross-recurrence matrix between two scanpaths truncated to the
/// shorter length. cell(i,j) is true iff |a_i - b_j| <= rho.
struct RecurrenceMatrix {
    int n = 0;
    double rho = 0.0;
    std::vector<std::uint8_t> cells; // n*n row-major

    bool at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j] != 0; }
    int recurrent_count() const;
};

/// Unnormalized dynamic-time-warping cost between the fixation position
/// sequences: D(i,j) = d(i,j) + min(D(i-1,j), D(i,j-1), D(i-1,j-1)) with
/// Euclidean d on normalized coordinates. Durations do not enter.
double dtw(const Scanpath& a, const Scanpath& b);

/// Mean nearest-neighbor distance under double mapping: every fixation is
/// mapped to its closest counterpart in the other path, in both directions,
/// and the distances are averaged over |a|+|b| mappings.
double eyenalysis(const Scanpath& a, const Scanpath& b);

RecurrenceMatrix cross_recurrence(const Scanpath& a, const Scanpath& b, const MetricParams& params);

/// Percentage of recurrent points lying on a diagonal run (either diagonal
/// direction) of length >= l_min, i.e. shared sub-trajectories. 0 when the
/// matrix has no recurrent points.
double determinism(const RecurrenceMatrix& m, int l_min = 2);

/// Percentage of recurrent points lying on a horizontal or vertical run of
/// length >= l_min (dwell clustering); points on both count once.
double laminarity(const RecurrenceMatrix& m, int l_min = 2);

} // namespace gazebench
