#include "gazebench/samplers.hpp"

#include <algorithm>
#include <cmath>

#include "gazebench/rng.hpp"

namespace gazebench {

void SamplerConfig::validate() const {
    if (n_fixations < 1) throw RangeError("sampler: n_fixations must be >= 1");
    if (mean_fix_dur_ms <= 0.0) throw RangeError("sampler: mean_fix_dur_ms must be > 0");
    if (gaussian_weight < 0.0 || gaussian_weight > 1.0)
        throw RangeError("sampler: gaussian_weight must be in [0,1]");
    if (sigma_loc <= 0.0) throw RangeError("sampler: sigma_loc must be > 0");
    if (ior_lambda <= 0.0 || ior_lambda > 1.0) throw RangeError("sampler: ior_lambda must be in (0,1]");
    if (ior_beta <= 0.0 || ior_beta >= 1.0) throw RangeError("sampler: ior_beta must be in (0,1)");
    if (ior_sigma <= 0.0) throw RangeError("sampler: ior_sigma must be > 0");
}

namespace {

// exp(-42) ~ 5.7e-19: below double rounding against 1.0, so the factor
// would be exactly 1 anyway.
constexpr double kExpCutoff = 42.0;

double gauss_bump(double dx, double dy, double sigma) {
    const double e = (dx * dx + dy * dy) / (2.0 * sigma * sigma);
    return e > kExpCutoff ? 0.0 : std::exp(-e);
}

Fixation make_fixation(const SaliencyMap& map, int px, int py, int k, double dur_ms) {
    auto [nx, ny] = map.pixel_center(px, py);
    Fixation f;
    f.x = nx;
    f.y = ny;
    f.duration_ms = dur_ms;
    f.onset_ms = k * dur_ms;
    return f;
}

const SaliencyMap& select_map(const std::vector<SaliencyMap>& maps, double elapsed_s) {
    for (const auto& m : maps)
        if (m.duration_bin_s && *m.duration_bin_s >= elapsed_s) return m;
    return maps.back();
}

} // namespace

Scanpath sample_probabilistic(const std::vector<SaliencyMap>& maps, const SamplerConfig& cfg) {
    cfg.validate();
    if (maps.empty()) throw EmptyInputError("sample_probabilistic: no maps");
    for (std::size_t i = 1; i < maps.size(); ++i) {
        if (!maps[i - 1].duration_bin_s || !maps[i].duration_bin_s ||
            *maps[i].duration_bin_s <= *maps[i - 1].duration_bin_s)
            throw RangeError("sample_probabilistic: duration bins must be strictly increasing");
    }

    Rng rng(cfg.seed);
    Scanpath path;
    path.source = Source::Synthetic;
    path.generator = "prob";

    std::vector<double> weights;
    for (int k = 0; k < cfg.n_fixations; ++k) {
        const double elapsed_s = k * cfg.mean_fix_dur_ms / 1000.0;
        const SaliencyMap& map = select_map(maps, elapsed_s);
        if (map.total_mass() <= 0.0)
            throw DegenerateMapError("sample_probabilistic: selected map has zero total mass");

        const std::size_t npix = map.values.size();
        weights.assign(npix, 0.0);
        const double w = cfg.gaussian_weight;
        double total = 0.0;

        if (k == 0 || w == 0.0) {
            for (std::size_t i = 0; i < npix; ++i) total += weights[i] = map.values[i];
        } else {
            const Fixation& prev = path.fixations.back();
            for (int y = 0; y < map.height; ++y) {
                for (int x = 0; x < map.width; ++x) {
                    const std::size_t i = static_cast<std::size_t>(y) * map.width + x;
                    auto [cx, cy] = map.pixel_center(x, y);
                    const double mask =
                        (1.0 - w) + w * gauss_bump(cx - prev.x, cy - prev.y, cfg.sigma_loc);
                    total += weights[i] = map.values[i] * mask;
                }
            }
            if (total <= 0.0) {
                // The locality mask can underflow to zero far from the
                // previous fixation; fall back to the raw map.
                for (std::size_t i = 0; i < npix; ++i) total += weights[i] = map.values[i];
            }
        }

        // Inverse-CDF draw over the pixel weights.
        const double target = rng.next_double() * total;
        double cum = 0.0;
        std::size_t chosen = npix;
        for (std::size_t i = 0; i < npix; ++i) {
            cum += weights[i];
            if (target < cum) {
                chosen = i;
                break;
            }
        }
        if (chosen == npix) { // rounding fell through; take the last positive weight
            chosen = npix - 1;
            while (chosen > 0 && weights[chosen] <= 0.0) --chosen;
        }

        const int px = static_cast<int>(chosen % map.width);
        const int py = static_cast<int>(chosen / map.width);
        path.fixations.push_back(make_fixation(map, px, py, k, cfg.mean_fix_dur_ms));
    }
    return path;
}

Scanpath sample_ior(const SaliencyMap& map, const SamplerConfig& cfg) {
    cfg.validate();
    map.validate();

    Scanpath path;
    path.source = Source::Synthetic;
    path.generator = "ior";

    struct Peak {
        double x, y;
    };
    std::vector<Peak> picked;

    for (int k = 0; k < cfg.n_fixations; ++k) {
        double best = 0.0;
        std::size_t best_idx = 0;
        for (int y = 0; y < map.height; ++y) {
            for (int x = 0; x < map.width; ++x) {
                const std::size_t i = static_cast<std::size_t>(y) * map.width + x;
                double v = map.values[i];
                if (v <= 0.0) continue;
                auto [cx, cy] = map.pixel_center(x, y);
                for (int j = 0; j < k && v > 0.0; ++j) {
                    const double strength = cfg.ior_lambda * std::pow(cfg.ior_beta, k - 1 - j);
                    const double g = gauss_bump(cx - picked[j].x, cy - picked[j].y, cfg.ior_sigma);
                    if (g > 0.0) v *= 1.0 - strength * g;
                }
                if (v > best) { // strict: ties keep the lowest row-major index
                    best = v;
                    best_idx = i;
                }
            }
        }
        if (best <= 0.0)
            throw SuppressionSaturationError(
                "sample_ior: suppression drove the map to zero; lower ior_lambda");

        const int px = static_cast<int>(best_idx % map.width);
        const int py = static_cast<int>(best_idx / map.width);
        auto [cx, cy] = map.pixel_center(px, py);
        picked.push_back({cx, cy});
        path.fixations.push_back(make_fixation(map, px, py, k, cfg.mean_fix_dur_ms));
    }
    return path;
}

Scanpath sample_center_baseline(int width, int height, const SamplerConfig& cfg) {
    cfg.validate();
    if (width <= 0 || height <= 0) throw RangeError("sample_center_baseline: dims must be positive");

    Rng rng(cfg.seed);
    Scanpath path;
    path.source = Source::Synthetic;
    path.generator = "center";
    for (int k = 0; k < cfg.n_fixations; ++k) {
        Fixation f;
        f.x = std::clamp(0.5 + 0.15 * rng.next_gaussian(), 0.0, 1.0);
        f.y = std::clamp(0.5 + 0.15 * rng.next_gaussian(), 0.0, 1.0);
        f.duration_ms = cfg.mean_fix_dur_ms;
        f.onset_ms = k * cfg.mean_fix_dur_ms;
        path.fixations.push_back(f);
    }
    return path;
}

} // namespace gazebench
