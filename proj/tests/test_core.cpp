#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gazebench/rng.hpp"
#include "gazebench/types.hpp"

using namespace gazebench;

TEST_CASE("normalize_point: corners and exact ratios") {
    CHECK(normalize_point(0, 0, 1280, 1024) == std::pair{0.0, 0.0});
    CHECK(normalize_point(1280, 1024, 1280, 1024) == std::pair{1.0, 1.0});
    CHECK(normalize_point(640, 256, 1280, 1024) == std::pair{0.5, 0.25});
}

TEST_CASE("normalize_point: rejects out-of-bounds input and bad dims") {
    CHECK_THROWS_AS(normalize_point(-1, 0, 100, 100), RangeError);
    CHECK_THROWS_AS(normalize_point(0, 101, 100, 100), RangeError);
    CHECK_THROWS_AS(normalize_point(0, 0, 0, 100), RangeError);
}

TEST_CASE("normalize_point inverts denormalize_point") {
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const double nx = rng.next_double();
        const double ny = rng.next_double();
        const int w = 1 + static_cast<int>(rng.next_double() * 4000);
        const int h = 1 + static_cast<int>(rng.next_double() * 4000);
        auto [px, py] = denormalize_point(nx, ny, w, h);
        auto [rx, ry] = normalize_point(px, py, w, h);
        CHECK(rx == doctest::Approx(nx).epsilon(1e-12));
        CHECK(ry == doctest::Approx(ny).epsilon(1e-12));
    }
}

TEST_CASE("saliency map validation") {
    SaliencyMap m;
    m.width = 2;
    m.height = 2;
    m.values = {0.0, 0.5, 0.25, 0.0};
    CHECK_NOTHROW(m.validate());
    CHECK(m.total_mass() == doctest::Approx(0.75));
    CHECK(m.at(1, 0) == 0.5);

    m.values = {0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(m.validate(), DegenerateMapError);
    m.values = {0.1, -0.2, 0.3, 0.4};
    CHECK_THROWS_AS(m.validate(), RangeError);
    m.values = {0.1, 0.2, 0.3};
    CHECK_THROWS_AS(m.validate(), RangeError);
}

TEST_CASE("pixel centers map into the open unit square") {
    SaliencyMap m;
    m.width = 4;
    m.height = 2;
    m.values.assign(8, 1.0);
    auto [x0, y0] = m.pixel_center(0, 0);
    auto [x1, y1] = m.pixel_center(3, 1);
    CHECK(x0 == doctest::Approx(0.125));
    CHECK(y0 == doctest::Approx(0.25));
    CHECK(x1 == doctest::Approx(0.875));
    CHECK(y1 == doctest::Approx(0.75));
}

TEST_CASE("condition labels round-trip") {
    CHECK(to_string(QuestionDifficulty::Hard) == "hard");
    CHECK(to_string(NodeCount::Six) == "6 nodes");
    CHECK(difficulty_from_string("Easy") == QuestionDifficulty::Easy);
    CHECK(node_count_from_int(3) == NodeCount::Three);
    CHECK_THROWS_AS(difficulty_from_string("medium"), SchemaError);
    CHECK_THROWS_AS(node_count_from_int(4), SchemaError);
}

TEST_CASE("derive_seed: stable and sensitive to every component") {
    const auto s = derive_seed(0, "s01", 0);
    CHECK(s == derive_seed(0, "s01", 0));
    CHECK(s != derive_seed(1, "s01", 0));
    CHECK(s != derive_seed(0, "s02", 0));
    CHECK(s != derive_seed(0, "s01", 1));
}

TEST_CASE("Rng: reproducible and in-range draws") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) {
        const double u = a.next_double();
        CHECK(u == b.next_double());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    Rng g(7);
    double mean = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) mean += g.next_gaussian();
    mean /= n;
    CHECK(std::abs(mean) < 0.03);
}
