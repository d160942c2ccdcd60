#include "gazebench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gazebench {

namespace {

double dist(const Fixation& p, const Fixation& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return std::sqrt(dx * dx + dy * dy);
}

void require_nonempty(const Scanpath& a, const Scanpath& b, const char* op) {
    if (a.empty() || b.empty())
        throw EmptyInputError(std::string(op) + ": scanpaths must have length >= 1");
}

} // namespace

int RecurrenceMatrix::recurrent_count() const {
    int r = 0;
    for (auto c : cells) r += c != 0;
    return r;
}

double dtw(const Scanpath& a, const Scanpath& b) {
    require_nonempty(a, b, "dtw");
    const std::size_t n = a.size();
    const std::size_t m = b.size();

    // Two-row dynamic program over the cumulative cost matrix.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> prev(m + 1, inf), cur(m + 1, inf);
    prev[0] = 0.0;

    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = inf;
        for (std::size_t j = 1; j <= m; ++j) {
            const double cost = dist(a.fixations[i - 1], b.fixations[j - 1]);
            cur[j] = cost + std::min({prev[j], cur[j - 1], prev[j - 1]});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

double eyenalysis(const Scanpath& a, const Scanpath& b) {
    require_nonempty(a, b, "eyenalysis");
    double total = 0.0;
    for (const auto& p : a.fixations) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : b.fixations) best = std::min(best, dist(p, q));
        total += best;
    }
    for (const auto& q : b.fixations) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : a.fixations) best = std::min(best, dist(p, q));
        total += best;
    }
    return total / static_cast<double>(a.size() + b.size());
}

RecurrenceMatrix cross_recurrence(const Scanpath& a, const Scanpath& b, const MetricParams& params) {
    require_nonempty(a, b, "cross_recurrence");
    params.validate();

    const int n = static_cast<int>(std::min(a.size(), b.size()));
    RecurrenceMatrix m;
    m.n = n;
    m.rho = params.rho;
    m.cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.cells[static_cast<std::size_t>(i) * n + j] =
                dist(a.fixations[i], b.fixations[j]) <= params.rho ? 1 : 0;
    return m;
}

double determinism(const RecurrenceMatrix& m, int l_min) {
    const int n = m.n;
    const int total = m.recurrent_count();
    if (total == 0) return 0.0;

    // Scan both diagonal directions and credit cells inside maximal runs
    // of length >= l_min. A cell covered from both directions counts once.
    std::vector<std::uint8_t> marked(static_cast<std::size_t>(n) * n, 0);

    // i and j both increasing: shared order.
    for (int off = -(n - 1); off <= n - 1; ++off) {
        int run = 0;
        const int i0 = std::max(0, -off);
        for (int i = i0; i <= n; ++i) {
            const int j = i + off;
            const bool on = i < n && j >= 0 && j < n && m.at(i, j);
            if (on) {
                ++run;
            } else {
                if (run >= l_min)
                    for (int k = i - run; k < i; ++k)
                        marked[static_cast<std::size_t>(k) * n + (k + off)] = 1;
                run = 0;
            }
        }
    }
    // i increasing while j decreases: reversed order.
    for (int sum = 0; sum <= 2 * (n - 1); ++sum) {
        int run = 0;
        const int i0 = std::max(0, sum - (n - 1));
        for (int i = i0; i <= n; ++i) {
            const int j = sum - i;
            const bool on = i < n && j >= 0 && j < n && m.at(i, j);
            if (on) {
                ++run;
            } else {
                if (run >= l_min)
                    for (int k = i - run; k < i; ++k)
                        marked[static_cast<std::size_t>(k) * n + (sum - k)] = 1;
                run = 0;
            }
        }
    }

    int covered = 0;
    for (auto c : marked) covered += c;
    return 100.0 * covered / total;
}

double laminarity(const RecurrenceMatrix& m, int l_min) {
    const int n = m.n;
    const int total = m.recurrent_count();
    if (total == 0) return 0.0;

    // Union of cells on horizontal and vertical runs >= l_min; a cell on
    // both directions counts once.
    std::vector<std::uint8_t> marked(static_cast<std::size_t>(n) * n, 0);

    for (int i = 0; i < n; ++i) {
        int run = 0;
        for (int j = 0; j <= n; ++j) {
            const bool on = j < n && m.at(i, j);
            if (on) {
                ++run;
            } else {
                if (run >= l_min)
                    for (int k = j - run; k < j; ++k)
                        marked[static_cast<std::size_t>(i) * n + k] = 1;
                run = 0;
            }
        }
    }
    for (int j = 0; j < n; ++j) {
        int run = 0;
        for (int i = 0; i <= n; ++i) {
            const bool on = i < n && m.at(i, j);
            if (on) {
                ++run;
            } else {
                if (run >= l_min)
                    for (int k = i - run; k < i; ++k)
                        marked[static_cast<std::size_t>(k) * n + j] = 1;
                run = 0;
            }
        }
    }

    int covered = 0;
    for (auto c : marked) covered += c;
    return 100.0 * covered / total;
}

} // namespace gazebench
