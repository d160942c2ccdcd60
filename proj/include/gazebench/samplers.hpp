#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gazebench/types.hpp"

namespace gazebench {

/// Configuration shared by the synthetic scanpath generators. Every field
/// is exposed through the CLI; defaults follow the evaluation protocol
/// (12 fixations per path, 7 when matching an external 7-fixation model).
struct SamplerConfig {
    int n_fixations = 12;
    std::uint64_t seed = 0;
    double mean_fix_dur_ms = 250.0;

    // Probabilistic sampler: mixture weight of the locality mask and its
    // Gaussian spread (normalized units).
    double gaussian_weight = 0.5; // w in [0,1]
    double sigma_loc = 0.2;

    // IOR sampler: initial suppression strength, per-step geometric
    // recovery, and suppression spread (normalized units).
    double ior_lambda = 1.0;  // (0,1]
    double ior_beta = 0.9;    // (0,1)
    double ior_sigma = 0.1;

    void validate() const;
};

/// Probabilistic multi-duration sampling. Fixation k draws from the map
/// whose duration bin covers the elapsed time k * mean_fix_dur_ms (the last
/// map once past all bins), with pixel weights
///   p_k(x) ~ S(x) * [(1-w) + w * G(x; f_{k-1}, sigma_loc)]
/// for k >= 1 and p_0(x) ~ S(x). G is an unnormalized Gaussian bump at the
/// previous fixation, which keeps successive fixations local instead of
/// teleporting across the stimulus. Deterministic given (maps, config).
Scanpath sample_probabilistic(const std::vector<SaliencyMap>& maps, const SamplerConfig& cfg);

/// Greedy argmax with inhibition-of-return decay. The effective map at
/// step k is
///   P_k(x) = P(x) * prod_{j<k} [1 - lambda * beta^(k-1-j) * G(x; f_j, sigma_ior)]
/// so a fresh fixation suppresses its neighborhood fully (lambda = 1 zeroes
/// the exact pixel) and the suppression fades geometrically, letting the
/// path revisit old regions after enough steps. Ties break toward the
/// lowest row-major pixel index. Fully deterministic.
Scanpath sample_ior(const SaliencyMap& map, const SamplerConfig& cfg);

/// Control generator: i.i.d. Gaussian fixations at the image center
/// (sigma = 0.15), clamped to [0,1]^2.
Scanpath sample_center_baseline(int width, int height, const SamplerConfig& cfg);

} // namespace gazebench
