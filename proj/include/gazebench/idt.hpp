#pragma once

#include "gazebench/gaze_log.hpp"
#include "gazebench/types.hpp"

namespace gazebench {

/// Dispersion-threshold (I-DT) parameters. Dispersion is bounding-box
/// width + height in normalized units. Invalid runs whose surrounding
/// valid-to-valid gap stays under blink_bridge_max_ms are bridged; longer
/// gaps split detection windows.
struct IdtParams {
    double dispersion_max = 0.02;
    double duration_min_ms = 100.0;
    double blink_bridge_max_ms = 75.0;

    void validate() const;
};

/// I-DT fixation detection over one trial. Samples flagged invalid, or
/// lying outside [0,1]^2, do not contribute to any window. Each fixation
/// sits at its window's centroid with duration = window time span.
///
/// Throws EmptyInputError when no window satisfies the thresholds; callers
/// may drop the trial.
Scanpath detect_fixations(const TrialSamples& trial, const IdtParams& params);

/// First min(n, length) fixations, order preserved. n >= 1.
Scanpath truncate_scanpath(const Scanpath& path, std::size_t n);

} // namespace gazebench
