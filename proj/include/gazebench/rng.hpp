#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace gazebench {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard and the derived draws below avoid the implementation-defined
/// std::*_distribution algorithms, so output is reproducible across
/// platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// FNV-1a over the bytes of a string; used to derive per-stimulus seeds.
std::uint64_t fnv1a64(const std::string& s);

/// splitmix64 finalizer; decorrelates derived seeds.
std::uint64_t mix64(std::uint64_t x);

/// Stable sub-seed for (base seed, stimulus, path index). Shared by the
/// sampling CLI and the fixture tooling so both sides agree byte-for-byte.
std::uint64_t derive_seed(std::uint64_t base, const std::string& stimulus_id, std::uint64_t index);

} // namespace gazebench
