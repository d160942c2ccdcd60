#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gazebench/metrics.hpp"
#include "gazebench/rng.hpp"
#include "oracles.hpp"

using namespace gazebench;

namespace {

Scanpath path_of(std::initializer_list<std::pair<double, double>> pts) {
    Scanpath sp;
    sp.stimulus_id = "t";
    double onset = 0.0;
    for (auto [x, y] : pts) {
        sp.fixations.push_back({x, y, 200.0, onset});
        onset += 220.0;
    }
    return sp;
}

RecurrenceMatrix matrix_of(int n, std::initializer_list<std::pair<int, int>> recurrent) {
    RecurrenceMatrix m;
    m.n = n;
    m.rho = 0.04;
    m.cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (auto [i, j] : recurrent) m.cells[static_cast<std::size_t>(i) * n + j] = 1;
    return m;
}

RecurrenceMatrix identity_matrix(int n) {
    RecurrenceMatrix m;
    m.n = n;
    m.rho = 0.04;
    m.cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.cells[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
}

} // namespace

TEST_CASE("dtw: identical paths cost zero") {
    Rng rng(11);
    for (int len : {1, 3, 7}) {
        const Scanpath a = oracle::random_scanpath(rng, len);
        CHECK(dtw(a, a) == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("dtw: single pair is the Euclidean distance") {
    const Scanpath a = path_of({{0.0, 0.0}});
    const Scanpath b = path_of({{0.3, 0.4}});
    CHECK(dtw(a, b) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("dtw: 2x3 warping example") {
    // Expected value confirmed by exhaustive enumeration of the 2x3 grid.
    const Scanpath a = path_of({{0.0, 0.0}, {1.0, 0.0}});
    const Scanpath b = path_of({{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}});
    CHECK(oracle::dtw(a, b) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dtw(a, b) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("dtw: empty path is a precondition error") {
    Scanpath empty;
    empty.stimulus_id = "t";
    const Scanpath b = path_of({{0.2, 0.2}});
    CHECK_THROWS_AS(dtw(empty, b), EmptyInputError);
    CHECK_THROWS_AS(dtw(b, empty), EmptyInputError);
}

TEST_CASE("dtw: equals the exhaustive oracle on random small pairs") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int la = 1 + static_cast<int>(rng.next_double() * 6) % 6;
        const int lb = 1 + static_cast<int>(rng.next_double() * 6) % 6;
        const Scanpath a = oracle::random_scanpath(rng, la);
        const Scanpath b = oracle::random_scanpath(rng, lb);
        CHECK(dtw(a, b) == doctest::Approx(oracle::dtw(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("dtw: symmetric and invariant under pixel-dimension relabeling") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Scanpath a = oracle::random_scanpath(rng, 1 + trial % 6);
        const Scanpath b = oracle::random_scanpath(rng, 1 + (trial * 3) % 6);
        CHECK(dtw(a, b) == doctest::Approx(dtw(b, a)).epsilon(1e-12));
        CHECK(dtw(a, b) >= 0.0);
    }
}

TEST_CASE("dtw: an appended fixation pays at least its best match") {
    // Appending is not monotone in general (the extra row can reroute the
    // whole alignment more cheaply), but every warping path must visit the
    // new row at least once, so the cost keeps a nearest-match floor.
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Scanpath a = oracle::random_scanpath(rng, 1 + trial % 5);
        const Scanpath b = oracle::random_scanpath(rng, 1 + (trial * 7) % 5);
        Scanpath extended = a;
        Fixation extra;
        extra.x = rng.next_double();
        extra.y = rng.next_double();
        extra.onset_ms = a.fixations.back().onset_ms + 300.0;
        extended.fixations.push_back(extra);

        const double grown = oracle::dtw(extended, b);
        CHECK(dtw(extended, b) == doctest::Approx(grown).epsilon(1e-12));

        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& q : b.fixations) nearest = std::min(nearest, oracle::point_dist(extra, q));
        CHECK(grown >= nearest - 1e-12);
        // Against the unextended path itself the cost is exactly the
        // distance from the new point to the old endpoint.
        CHECK(dtw(extended, a) ==
              doctest::Approx(oracle::point_dist(extra, a.fixations.back())).epsilon(1e-12));
    }
}

TEST_CASE("eyenalysis: identity and single-pair examples") {
    const Scanpath a = path_of({{0.0, 0.0}});
    const Scanpath b = path_of({{0.3, 0.4}});
    CHECK(eyenalysis(a, a) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(eyenalysis(a, b) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("eyenalysis: asymmetric-length double mapping") {
    // a = [(0,0),(0.1,0)], b = [(0,0)]: mappings 0, 0.1, 0 over 3 pairs.
    const Scanpath a = path_of({{0.0, 0.0}, {0.1, 0.0}});
    const Scanpath b = path_of({{0.0, 0.0}});
    CHECK(eyenalysis(a, b) == doctest::Approx(0.1 / 3.0).epsilon(1e-12));
}

TEST_CASE("eyenalysis: symmetry, zero self-distance, bounded") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Scanpath a = oracle::random_scanpath(rng, 1 + trial % 8);
        const Scanpath b = oracle::random_scanpath(rng, 1 + (trial * 5) % 8);
        const double ab = eyenalysis(a, b);
        CHECK(ab == doctest::Approx(eyenalysis(b, a)).epsilon(1e-12));
        CHECK(eyenalysis(a, a) == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(ab >= 0.0);
        CHECK(ab <= std::sqrt(2.0));
    }
}

TEST_CASE("eyenalysis: empty path is a precondition error") {
    Scanpath empty;
    const Scanpath b = path_of({{0.2, 0.2}});
    CHECK_THROWS_AS(eyenalysis(empty, b), EmptyInputError);
}

TEST_CASE("cross_recurrence: self-recurrence at tight radius") {
    const Scanpath a = path_of({{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}});
    const RecurrenceMatrix m = cross_recurrence(a, a, {0.01, 2});
    REQUIRE(m.n == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == (i == j));
}

TEST_CASE("cross_recurrence: distance exactly at the radius is recurrent") {
    const Scanpath a = path_of({{0.0, 0.0}});
    const Scanpath b = path_of({{0.3, 0.4}});
    const RecurrenceMatrix m = cross_recurrence(a, b, {0.5, 2});
    REQUIRE(m.n == 1);
    CHECK(m.at(0, 0));
}

TEST_CASE("cross_recurrence: truncates to the shorter path") {
    const Scanpath a = path_of({{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}});
    const Scanpath b =
        path_of({{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}, {0.4, 0.4}, {0.5, 0.5}});
    const RecurrenceMatrix m = cross_recurrence(a, b, {0.04, 2});
    CHECK(m.n == 3);
    // Against the full 3x5 distance table only the first three columns
    // survive; the diagonal of the kept block is recurrent.
    for (int i = 0; i < 3; ++i) CHECK(m.at(i, i));
}

TEST_CASE("cross_recurrence: rho must be positive") {
    const Scanpath a = path_of({{0.1, 0.1}});
    CHECK_THROWS_AS(cross_recurrence(a, a, {0.0, 2}), RangeError);
}

TEST_CASE("determinism/laminarity: identity matrix splits the two metrics") {
    const RecurrenceMatrix m = identity_matrix(3);
    CHECK(determinism(m, 2) == doctest::Approx(100.0));
    CHECK(laminarity(m, 2) == doctest::Approx(0.0));
}

TEST_CASE("determinism: isolated points score zero") {
    const RecurrenceMatrix m = matrix_of(3, {{0, 0}, {1, 2}});
    CHECK(determinism(m, 2) == doctest::Approx(0.0));
}

TEST_CASE("determinism: reversed-order diagonal runs count too") {
    const RecurrenceMatrix m = matrix_of(3, {{0, 2}, {1, 1}, {2, 0}});
    CHECK(determinism(m, 2) == doctest::Approx(100.0));
    CHECK(laminarity(m, 2) == doctest::Approx(0.0));
}

TEST_CASE("determinism/laminarity: all-false matrix scores zero") {
    const RecurrenceMatrix m = matrix_of(3, {});
    CHECK(determinism(m, 2) == doctest::Approx(0.0));
    CHECK(laminarity(m, 2) == doctest::Approx(0.0));
}

TEST_CASE("laminarity: a full row scores 100") {
    const RecurrenceMatrix m = matrix_of(3, {{1, 0}, {1, 1}, {1, 2}});
    CHECK(laminarity(m, 2) == doctest::Approx(100.0));
}

TEST_CASE("determinism/laminarity: all-true matrices score 100") {
    for (int n = 2; n <= 8; ++n) {
        RecurrenceMatrix m;
        m.n = n;
        m.rho = 0.04;
        m.cells.assign(static_cast<std::size_t>(n) * n, 1);
        CHECK(determinism(m, 2) == doctest::Approx(100.0));
        CHECK(laminarity(m, 2) == doctest::Approx(100.0));
    }
}

TEST_CASE("determinism/laminarity: match the run-enumeration oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_double() * 8) % 8;
        const double density = 0.15 + 0.7 * rng.next_double();
        const RecurrenceMatrix m = oracle::random_matrix(rng, n, density);
        CHECK(determinism(m, 2) == oracle::determinism(m, 2));
        CHECK(laminarity(m, 2) == oracle::laminarity(m, 2));
        CHECK(determinism(m, 2) >= 0.0);
        CHECK(determinism(m, 2) <= 100.0);
        CHECK(laminarity(m, 2) >= 0.0);
        CHECK(laminarity(m, 2) <= 100.0);
    }
}

TEST_CASE("determinism/laminarity: l_min = 3 also matches the oracle") {
    Rng rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_double() * 6) % 6;
        const RecurrenceMatrix m = oracle::random_matrix(rng, n, 0.5);
        CHECK(determinism(m, 3) == oracle::determinism(m, 3));
        CHECK(laminarity(m, 3) == oracle::laminarity(m, 3));
    }
}

TEST_CASE("metrics are scale-free: computed from normalized coordinates only") {
    // Scanpaths recorded against different pixel dimensions but identical
    // normalized coordinates must give identical metrics.
    Rng rng(8);
    const Scanpath a = oracle::random_scanpath(rng, 6);
    const Scanpath b = oracle::random_scanpath(rng, 5);
    const double d1 = dtw(a, b);
    const double e1 = eyenalysis(a, b);

    auto roundtrip = [](const Scanpath& sp, int w, int h) {
        Scanpath out = sp;
        for (auto& f : out.fixations) {
            auto [px, py] = denormalize_point(f.x, f.y, w, h);
            auto [nx, ny] = normalize_point(px, py, w, h);
            f.x = nx;
            f.y = ny;
        }
        return out;
    };
    const Scanpath a2 = roundtrip(a, 1280, 1024);
    const Scanpath b2 = roundtrip(b, 1280, 1024);
    CHECK(dtw(a2, b2) == doctest::Approx(d1).epsilon(1e-12));
    CHECK(eyenalysis(a2, b2) == doctest::Approx(e1).epsilon(1e-12));
}
