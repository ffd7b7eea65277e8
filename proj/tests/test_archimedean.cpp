#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "turn/archimedean.hpp"
#include "turn/network.hpp"
#include "turn/regular.hpp"

using namespace turn;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("lattice census") {
    const auto names = supported_lattices();
    REQUIRE(names.size() == 4);
    for (const std::string n : {"hex", "4.8.8", "3.12.12", "4.6.12"}) {
        CHECK(lattice_supported(n));
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    }
    CHECK_FALSE(lattice_supported("kagome"));
}

TEST_CASE("fundamental regions have normalized proportions") {
    for (const std::string& name : supported_lattices()) {
        const FundamentalRegion r = fundamental_region(name);
        CHECK(r.lattice_name == name);
        double qsum = 0.0, psum = 0.0;
        for (const auto& [k, q] : r.q) {
            CHECK(k >= 3);
            qsum += q;
        }
        for (const auto& [k, p] : r.p) psum += p;
        CHECK(qsum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(psum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.q.size() == r.p.size());
    }
}

TEST_CASE("fundamental region tile mixes") {
    const FundamentalRegion hex = fundamental_region("hex");
    REQUIRE(hex.q.size() == 1);
    CHECK(hex.q.at(6) == doctest::Approx(1.0));

    const FundamentalRegion sq_oct = fundamental_region("4.8.8");
    CHECK(sq_oct.q.at(4) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sq_oct.q.at(8) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sq_oct.p.at(8) > sq_oct.p.at(4));  // octagons carry more area

    const FundamentalRegion tri_dodec = fundamental_region("3.12.12");
    CHECK(tri_dodec.q.at(3) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(tri_dodec.q.at(12) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const FundamentalRegion truncated = fundamental_region("4.6.12");
    CHECK(truncated.q.at(4) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(truncated.q.at(6) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(truncated.q.at(12) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("exact disorder table to four decimals") {
    struct Row {
        const char* name;
        double d6, d6w, dc, dcw;
    };
    const Row rows[] = {
        {"hex", 0.0, 0.0, 0.3023, 0.3023},
        {"4.8.8", 0.4319, 0.3863, 0.3401, 0.2656},
        {"3.12.12", 0.4363, 0.2806, 0.4534, 0.1837},
        {"4.6.12", 0.2943, 0.2287, 0.3527, 0.2384},
    };
    for (const Row& r : rows) {
        CHECK(exact_disorder(r.name, OrderedShape::hexagon, false) ==
              doctest::Approx(r.d6).epsilon(5e-4));
        CHECK(exact_disorder(r.name, OrderedShape::hexagon, true) ==
              doctest::Approx(r.d6w).epsilon(5e-4));
        CHECK(exact_disorder(r.name, OrderedShape::circle, false) ==
              doctest::Approx(r.dc).epsilon(5e-4));
        CHECK(exact_disorder(r.name, OrderedShape::circle, true) ==
              doctest::Approx(r.dcw).epsilon(5e-4));
        // Every tile is a regular polygon.
        CHECK(exact_disorder(r.name, OrderedShape::regular, false) ==
              doctest::Approx(0.0).epsilon(1e-12));
        CHECK(exact_disorder(r.name, OrderedShape::regular, true) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(exact_disorder("hex", OrderedShape::circle, false) ==
          doctest::Approx(std::sqrt(3.0) * kPi / 18.0).epsilon(1e-12));
}

TEST_CASE("generated lattices consist of unit-side regular tiles") {
    for (const std::string& name : supported_lattices()) {
        const PlanarNetwork net = generate_lattice(name, 6);
        CHECK(net.faces.size() >= 8);
        CHECK_NOTHROW(validate_network(net));
        const FundamentalRegion region = fundamental_region(name);
        for (std::size_t f = 0; f < net.faces.size(); ++f) {
            const int k = face_sides(net, f);
            CHECK(region.q.count(k) == 1);
            const Polygon p = face_polygon(net, f);
            for (std::size_t i = 0; i < p.size(); ++i) {
                const Vec2 d = p[(i + 1) % p.size()] - p[i];
                CHECK(std::sqrt(d.x * d.x + d.y * d.y) ==
                      doctest::Approx(1.0).epsilon(1e-9));
            }
            CHECK(face_distance(net, f, OrderedShape::regular) ==
                  doctest::Approx(0.0).epsilon(1e-7));
        }
    }
}

TEST_CASE("patch disorder approaches the exact lattice value") {
    for (const std::string& name : supported_lattices()) {
        const PlanarNetwork small = generate_lattice(name, 8);
        const PlanarNetwork large = generate_lattice(name, 24);
        const double exact = exact_disorder(name, OrderedShape::hexagon, true);
        const double err_small =
            std::abs(disorder(small, OrderedShape::hexagon, true) - exact);
        const double err_large =
            std::abs(disorder(large, OrderedShape::hexagon, true) - exact);
        CHECK(err_large <= err_small + 1e-12);
        CHECK(err_large < 0.05);
    }
}

TEST_CASE("unknown lattice names are rejected with the supported list") {
    CHECK_THROWS_WITH_AS(generate_lattice("kagome", 4), doctest::Contains("4.6.12"),
                         ValidationError);
    CHECK_THROWS_AS(fundamental_region("square"), ValidationError);
    CHECK_THROWS_AS(exact_disorder("nope", OrderedShape::hexagon, false), ValidationError);
    CHECK_THROWS_AS(generate_lattice("hex", 0), ValidationError);
}
