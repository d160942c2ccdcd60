#pragma once

// Brute-force reference implementations used only by tests. They stay
// deliberately independent of the library's algorithms: DTW enumerates
// every monotone warping path, the recurrence oracles enumerate every
// candidate run.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gazebench/metrics.hpp"
#include "gazebench/rng.hpp"
#include "gazebench/types.hpp"

namespace gazebench::oracle {

inline double point_dist(const Fixation& p, const Fixation& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return std::sqrt(dx * dx + dy * dy);
}

namespace detail {

inline double enumerate_paths(const std::vector<double>& d, std::size_t n, std::size_t m,
                              std::size_t i, std::size_t j) {
    const double here = d[i * m + j];
    if (i == n - 1 && j == m - 1) return here;
    double best = std::numeric_limits<double>::infinity();
    if (i + 1 < n) best = std::min(best, enumerate_paths(d, n, m, i + 1, j));
    if (j + 1 < m) best = std::min(best, enumerate_paths(d, n, m, i, j + 1));
    if (i + 1 < n && j + 1 < m) best = std::min(best, enumerate_paths(d, n, m, i + 1, j + 1));
    return here + best;
}

} // namespace detail

/// Minimum cumulative cost over every monotone warping path, by exhaustive
/// enumeration (no dynamic programming).
inline double dtw(const Scanpath& a, const Scanpath& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<double> d(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            d[i * m + j] = point_dist(a.fixations[i], b.fixations[j]);
    return detail::enumerate_paths(d, n, m, 0, 0);
}

/// Same double-mapping formula as the library, written independently.
inline double eyenalysis(const Scanpath& a, const Scanpath& b) {
    double total = 0.0;
    for (const auto& p : a.fixations) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : b.fixations) best = std::min(best, point_dist(p, q));
        total += best;
    }
    for (const auto& q : b.fixations) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : a.fixations) best = std::min(best, point_dist(p, q));
        total += best;
    }
    return total / static_cast<double>(a.size() + b.size());
}

/// Marks every cell belonging to any diagonal run (both diagonal
/// directions) of length >= l_min by trying every (start, length)
/// combination.
inline double determinism(const RecurrenceMatrix& m, int l_min) {
    const int n = m.n;
    int total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) total += m.at(i, j);
    if (total == 0) return 0.0;

    std::vector<std::uint8_t> mark(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int len = l_min; i + len <= n && j + len <= n; ++len) {
                bool all = true;
                for (int t = 0; t < len && all; ++t) all = m.at(i + t, j + t);
                if (all)
                    for (int t = 0; t < len; ++t)
                        mark[static_cast<std::size_t>(i + t) * n + j + t] = 1;
            }
            for (int len = l_min; i + len <= n && j - len >= -1; ++len) {
                bool all = true;
                for (int t = 0; t < len && all; ++t) all = m.at(i + t, j - t);
                if (all)
                    for (int t = 0; t < len; ++t)
                        mark[static_cast<std::size_t>(i + t) * n + j - t] = 1;
            }
        }
    int covered = 0;
    for (auto c : mark) covered += c;
    return 100.0 * covered / total;
}

inline double laminarity(const RecurrenceMatrix& m, int l_min) {
    const int n = m.n;
    int total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) total += m.at(i, j);
    if (total == 0) return 0.0;

    std::vector<std::uint8_t> mark(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int len = l_min; j + len <= n; ++len) { // horizontal
                bool all = true;
                for (int t = 0; t < len && all; ++t) all = m.at(i, j + t);
                if (all)
                    for (int t = 0; t < len; ++t) mark[static_cast<std::size_t>(i) * n + j + t] = 1;
            }
            for (int len = l_min; i + len <= n; ++len) { // vertical
                bool all = true;
                for (int t = 0; t < len && all; ++t) all = m.at(i + t, j);
                if (all)
                    for (int t = 0; t < len; ++t) mark[static_cast<std::size_t>(i + t) * n + j] = 1;
            }
        }
    int covered = 0;
    for (auto c : mark) covered += c;
    return 100.0 * covered / total;
}

// --- random inputs for property tests ---

inline Scanpath random_scanpath(Rng& rng, int length, const std::string& stimulus = "rnd") {
    Scanpath sp;
    sp.stimulus_id = stimulus;
    double onset = 0.0;
    for (int i = 0; i < length; ++i) {
        Fixation f;
        f.x = rng.next_double();
        f.y = rng.next_double();
        f.duration_ms = 100.0 + 200.0 * rng.next_double();
        f.onset_ms = onset;
        onset += f.duration_ms + 20.0;
        sp.fixations.push_back(f);
    }
    return sp;
}

inline RecurrenceMatrix random_matrix(Rng& rng, int n, double density) {
    RecurrenceMatrix m;
    m.n = n;
    m.rho = 0.04;
    m.cells.resize(static_cast<std::size_t>(n) * n);
    for (auto& c : m.cells) c = rng.next_double() < density ? 1 : 0;
    return m;
}

} // namespace gazebench::oracle
