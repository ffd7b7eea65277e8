#include <doctest.h>

#include <cmath>

#include "turn/geometry.hpp"

using namespace turn;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("regular polygon basics") {
    for (int n = 3; n <= 12; ++n) {
        const Polygon p = regular_polygon(n);
        REQUIRE(p.size() == static_cast<std::size_t>(n));
        CHECK(perimeter(p) == doctest::Approx(n).epsilon(1e-12));
        const double expected_area =
            n / (4.0 * std::tan(kPi / n));  // unit side length
        CHECK(signed_area(p) == doctest::Approx(expected_area).epsilon(1e-12));
        CHECK_NOTHROW(validate_polygon(p));
    }
    CHECK_THROWS_AS(regular_polygon(2), ValidationError);
}

TEST_CASE("rectangle and right triangle constructors") {
    const Polygon r = rectangle(3.0);
    CHECK(signed_area(r) == doctest::Approx(3.0));
    CHECK(perimeter(r) == doctest::Approx(8.0));
    CHECK(signed_area(rectangle(0.5)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(rectangle(0.0), ValidationError);
    CHECK_THROWS_AS(rectangle(-2.0), ValidationError);

    const Polygon t = right_triangle(4.0);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == Vec2{0.0, 0.0});
    CHECK(t[1] == Vec2{3.0, 0.0});
    CHECK(t[2] == Vec2{3.0, 4.0});
    CHECK(signed_area(t) == doctest::Approx(6.0));
}

TEST_CASE("validate_polygon rejects bad polygons and names the vertex") {
    Polygon zero_edge{{{0, 0}, {0, 0}, {1, 1}}};
    CHECK_THROWS_WITH_AS(validate_polygon(zero_edge),
                         doctest::Contains("vertex 0"), ValidationError);

    Polygon bowtie{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    CHECK_THROWS_AS(validate_polygon(bowtie), ValidationError);

    Polygon clockwise{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    CHECK_THROWS_AS(validate_polygon(clockwise), ValidationError);

    // Collinear vertices are allowed.
    Polygon collinear{{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}}};
    CHECK_NOTHROW(validate_polygon(collinear));
}

TEST_CASE("normalize_polygon is idempotent and canonical") {
    const Polygon p{{{2, 1}, {5, 1}, {5, 4}, {2, 4}}};
    const Polygon n1 = normalize_polygon(p);
    CHECK(perimeter(n1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(n1[0].x == doctest::Approx(0.0));
    CHECK(n1[0].y == doctest::Approx(0.0));
    CHECK(n1[1].y == doctest::Approx(0.0).epsilon(1e-14));  // first edge on +x
    const Polygon n2 = normalize_polygon(n1);
    for (std::size_t i = 0; i < n1.size(); ++i) {
        CHECK(n2[i].x == doctest::Approx(n1[i].x).epsilon(1e-14));
        CHECK(n2[i].y == doctest::Approx(n1[i].y).epsilon(1e-14));
    }
}

TEST_CASE("perturb_vertex moves exactly one vertex") {
    const Polygon p = regular_polygon(5);
    const Polygon q = perturb_vertex(p, 2, {0.1, -0.2});
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == 2) {
            CHECK(q[i].x == doctest::Approx(p[i].x + 0.1));
            CHECK(q[i].y == doctest::Approx(p[i].y - 0.2));
        } else {
            CHECK(q[i] == p[i]);
        }
    }
}

TEST_CASE("segment intersection predicate") {
    CHECK(segments_intersect({0, 0}, {1, 1}, {0, 1}, {1, 0}));
    CHECK(segments_intersect({0, 0}, {1, 0}, {1, 0}, {2, 1}));   // shared endpoint
    CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {1, 1}));   // T junction
    CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));   // collinear overlap
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));  // collinear gap
}

TEST_CASE("orientation predicate") {
    CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) > 0);
    CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) < 0);
    CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0);
}
