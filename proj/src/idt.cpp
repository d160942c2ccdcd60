#include "gazebench/idt.hpp"

#include <algorithm>
#include <cmath>

namespace gazebench {

void IdtParams::validate() const {
    if (dispersion_max <= 0.0) throw RangeError("I-DT: dispersion_max must be > 0");
    if (duration_min_ms <= 0.0) throw RangeError("I-DT: duration_min_ms must be > 0");
    if (blink_bridge_max_ms < 0.0) throw RangeError("I-DT: blink_bridge_max_ms must be >= 0");
}

namespace {

bool usable(const GazeSample& s) {
    // Off-screen samples cannot land on the stimulus; treat as invalid.
    return s.valid && s.x >= 0.0 && s.x <= 1.0 && s.y >= 0.0 && s.y <= 1.0;
}

struct Window {
    double min_x, max_x, min_y, max_y;
    double sum_x = 0.0, sum_y = 0.0;
    int count = 0;

    void add(const GazeSample& s) {
        if (count == 0) {
            min_x = max_x = s.x;
            min_y = max_y = s.y;
        } else {
            min_x = std::min(min_x, s.x);
            max_x = std::max(max_x, s.x);
            min_y = std::min(min_y, s.y);
            max_y = std::max(max_y, s.y);
        }
        sum_x += s.x;
        sum_y += s.y;
        ++count;
    }
    double dispersion() const { return (max_x - min_x) + (max_y - min_y); }
};

double dispersion_of(const std::vector<GazeSample>& v, std::size_t lo, std::size_t hi) {
    Window w;
    for (std::size_t k = lo; k <= hi; ++k) w.add(v[k]);
    return w.dispersion();
}

void detect_in_segment(const std::vector<GazeSample>& seg, const IdtParams& p,
                       std::vector<Fixation>& out) {
    const std::size_t n = seg.size();
    std::size_t i = 0;
    while (i < n) {
        // Smallest window starting at i that covers the duration threshold.
        std::size_t j = i;
        while (j < n && seg[j].timestamp_ms - seg[i].timestamp_ms < p.duration_min_ms) ++j;
        if (j == n) break; // tail shorter than the minimum duration

        if (dispersion_of(seg, i, j) <= p.dispersion_max) {
            Window w;
            for (std::size_t k = i; k <= j; ++k) w.add(seg[k]);
            while (j + 1 < n) {
                Window grown = w;
                grown.add(seg[j + 1]);
                if (grown.dispersion() > p.dispersion_max) break;
                w = grown;
                ++j;
            }
            Fixation f;
            f.x = w.sum_x / w.count;
            f.y = w.sum_y / w.count;
            f.onset_ms = seg[i].timestamp_ms;
            f.duration_ms = seg[j].timestamp_ms - seg[i].timestamp_ms;
            out.push_back(f);
            i = j + 1;
        } else {
            ++i;
        }
    }
}

} // namespace

Scanpath detect_fixations(const TrialSamples& trial, const IdtParams& params) {
    params.validate();
    if (trial.samples.empty())
        throw EmptyInputError("detect_fixations: no samples for " + trial.participant_id + "/" +
                              trial.stimulus_id);

    // Split the valid samples into segments wherever the gap across an
    // invalid (or missing) run exceeds the bridge limit.
    std::vector<std::vector<GazeSample>> segments;
    std::vector<GazeSample> cur;
    for (const auto& s : trial.samples) {
        if (!usable(s)) continue;
        if (!cur.empty() && s.timestamp_ms - cur.back().timestamp_ms >= params.blink_bridge_max_ms) {
            segments.push_back(std::move(cur));
            cur.clear();
        }
        cur.push_back(s);
    }
    if (!cur.empty()) segments.push_back(std::move(cur));

    Scanpath path;
    path.stimulus_id = trial.stimulus_id;
    path.participant_id = trial.participant_id;
    path.source = Source::Human;
    for (const auto& seg : segments) detect_in_segment(seg, params, path.fixations);

    if (path.fixations.empty())
        throw EmptyInputError("detect_fixations: no fixation satisfies the thresholds for " +
                              trial.participant_id + "/" + trial.stimulus_id);
    return path;
}

Scanpath truncate_scanpath(const Scanpath& path, std::size_t n) {
    if (n < 1) throw RangeError("truncate_scanpath: n must be >= 1");
    Scanpath out = path;
    if (out.fixations.size() > n) out.fixations.resize(n);
    return out;
}

} // namespace gazebench
