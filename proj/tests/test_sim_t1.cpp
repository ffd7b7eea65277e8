#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "turn/archimedean.hpp"
#include "turn/sim_common.hpp"
#include "turn/sim_t1.hpp"

using namespace turn;

namespace {

std::vector<int> degrees(const PlanarNetwork& net) {
    std::vector<int> deg(net.vertices.size(), 0);
    for (const auto& [a, b] : net.edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    return deg;
}

// Edges bordered by exactly two faces.
std::vector<std::pair<int, int>> interior_edges(const PlanarNetwork& net) {
    std::map<std::pair<int, int>, int> count;
    for (const auto& f : net.faces) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            if (a > b) std::swap(a, b);
            ++count[{a, b}];
        }
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& [e, c] : count)
        if (c == 2) out.push_back(e);
    return out;
}

std::vector<int> face_size_multiset(const PlanarNetwork& net) {
    std::vector<int> sizes;
    for (const auto& f : net.faces) sizes.push_back(static_cast<int>(f.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

PlanarNetwork grid(int cells_per_side) {
    const int n = cells_per_side + 1;
    std::vector<Vec2> v;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) v.push_back({double(x), double(y)});
    std::vector<std::pair<int, int>> e;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x + 1 < n; ++x) e.emplace_back(y * n + x, y * n + x + 1);
    for (int y = 0; y + 1 < n; ++y)
        for (int x = 0; x < n; ++x) e.emplace_back(y * n + x, y * n + x + n);
    return extract_faces(std::move(v), std::move(e));
}

}  // namespace

TEST_CASE("voronoi_init is deterministic and valid") {
    const PlanarNetwork a = voronoi_init(50, 42);
    const PlanarNetwork b = voronoi_init(50, 42);
    REQUIRE(a.vertices.size() == b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        CHECK(a.vertices[i].x == b.vertices[i].x);
        CHECK(a.vertices[i].y == b.vertices[i].y);
    }
    CHECK(a.edges == b.edges);
    CHECK(a.faces == b.faces);
    CHECK(a.faces.size() == 50);
    CHECK_NOTHROW(validate_network(a));
    CHECK(is_planar_embedding(a));
    CHECK(total_face_area(a) == doctest::Approx(1.0).epsilon(1e-9));
    const PlanarNetwork c = voronoi_init(50, 43);
    bool differs = c.vertices.size() != a.vertices.size();
    for (std::size_t i = 0; !differs && i < a.vertices.size(); ++i)
        differs = a.vertices[i].x != c.vertices[i].x || a.vertices[i].y != c.vertices[i].y;
    CHECK(differs);
    CHECK_THROWS_AS(voronoi_init(3, 1), ValidationError);
}

TEST_CASE("voronoi boundary vertices lie on the unit square") {
    const PlanarNetwork net = voronoi_init(40, 7);
    bool any_boundary = false, any_interior = false;
    for (std::size_t i = 0; i < net.vertices.size(); ++i) {
        const Vec2& v = net.vertices[i];
        const bool on_edge = v.x == 0.0 || v.x == 1.0 || v.y == 0.0 || v.y == 1.0;
        CHECK(net.boundary[i] == on_edge);
        (net.boundary[i] ? any_boundary : any_interior) = true;
    }
    CHECK(any_boundary);
    CHECK(any_interior);
}

TEST_CASE("tutte_embed solves the spring balance exactly") {
    PlanarNetwork net = grid(2);
    net.vertices[4] = {1.37, 0.62};  // displace the single interior vertex
    const PlanarNetwork relaxed = tutte_embed(net);
    CHECK(relaxed.vertices[4].x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(relaxed.vertices[4].y == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tutte_residual(relaxed) <= 1e-9);

    const PlanarNetwork vor = tutte_embed(voronoi_init(80, 3));
    CHECK(tutte_residual(vor) <= 1e-9);
    CHECK(is_planar_embedding(vor));
    // Boundary stays pinned.
    const PlanarNetwork vor0 = voronoi_init(80, 3);
    for (std::size_t i = 0; i < vor.vertices.size(); ++i) {
        if (!vor.boundary[i]) continue;
        CHECK(vor.vertices[i].x == vor0.vertices[i].x);
        CHECK(vor.vertices[i].y == vor0.vertices[i].y);
    }
}

TEST_CASE("t1_move rewires faces with the +1/+1/-1/-1 reaction") {
    PlanarNetwork net = generate_lattice("hex", 5);
    const auto deg = degrees(net);
    int u = -1, v = -1;
    for (const auto& [a, b] : interior_edges(net)) {
        if (net.boundary[static_cast<std::size_t>(a)] ||
            net.boundary[static_cast<std::size_t>(b)])
            continue;
        if (deg[static_cast<std::size_t>(a)] != 3 || deg[static_cast<std::size_t>(b)] != 3)
            continue;
        u = a;
        v = b;
        break;
    }
    REQUIRE(u >= 0);

    const std::vector<int> before = face_size_multiset(net);
    const std::size_t nfaces = net.faces.size();
    const std::size_t nedges = net.edges.size();
    REQUIRE(t1_move(net, u, v) == T1Outcome::applied);
    CHECK(net.faces.size() == nfaces);
    CHECK(net.edges.size() == nedges);

    std::vector<int> after = face_size_multiset(net);
    std::map<int, int> delta;
    for (int s : after) ++delta[s];
    for (int s : before) --delta[s];
    // Two hexagons shrank to 5, two grew to 7.
    CHECK(delta[5] == 2);
    CHECK(delta[7] == 2);
    CHECK(delta[6] == -4);

    // A second application with the same orientation convention rotates the
    // edge onward: side counts return and the state is the original with the
    // two endpoints exchanged.
    const PlanarNetwork snapshot = generate_lattice("hex", 5);
    REQUIRE(t1_move(net, u, v) == T1Outcome::applied);
    CHECK(face_size_multiset(net) == before);
    std::vector<std::pair<int, int>> swapped;
    for (auto [a, b] : snapshot.edges) {
        if (a == u) a = v;
        else if (a == v) a = u;
        if (b == u) b = v;
        else if (b == v) b = u;
        if (a > b) std::swap(a, b);
        swapped.emplace_back(a, b);
    }
    std::sort(swapped.begin(), swapped.end());
    CHECK(net.edges == swapped);
}

TEST_CASE("t1_move rejection codes") {
    PlanarNetwork hex = generate_lattice("hex", 5);
    int bu = -1, bv = -1;
    for (const auto& [a, b] : hex.edges) {
        if (hex.boundary[static_cast<std::size_t>(a)]) {
            bu = a;
            bv = b;
            break;
        }
    }
    REQUIRE(bu >= 0);
    CHECK(t1_move(hex, bu, bv) == T1Outcome::rejected_boundary);

    // Degree-4 interior vertices in a square grid.
    PlanarNetwork g = grid(4);
    CHECK(t1_move(g, 6, 7) == T1Outcome::rejected_not_trivalent);

    // Triangle side face in the truncated hexagonal lattice.
    PlanarNetwork tri = generate_lattice("3.12.12", 6);
    const auto tdeg = degrees(tri);
    int tu = -1, tv = -1;
    for (std::size_t f = 0; f < tri.faces.size(); ++f) {
        if (tri.faces[f].size() != 3) continue;
        for (std::size_t i = 0; i < 3 && tu < 0; ++i) {
            const int a = tri.faces[f][i], b = tri.faces[f][(i + 1) % 3];
            if (!tri.boundary[static_cast<std::size_t>(a)] &&
                !tri.boundary[static_cast<std::size_t>(b)] &&
                tdeg[static_cast<std::size_t>(a)] == 3 &&
                tdeg[static_cast<std::size_t>(b)] == 3) {
                tu = a;
                tv = b;
            }
        }
        if (tu >= 0) break;
    }
    REQUIRE(tu >= 0);
    CHECK(t1_move(tri, tu, tv) == T1Outcome::rejected_small_face);
}

TEST_CASE("merge_close_vertices contracts short edges") {
    // Pentagon with two corners a hair apart.
    PlanarNetwork net = extract_faces(
        {{0, 0}, {1, 0}, {1 + 1e-9, 1e-9}, {0.5, 1}, {-0.2, 0.6}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    REQUIRE(net.faces.size() == 1);
    REQUIRE(net.faces[0].size() == 5);
    CHECK(merge_close_vertices(net, 1e-6) == 1);
    CHECK(net.faces[0].size() == 4);
    CHECK(net.degenerate_sides(0) == 0);
    CHECK(net.edges.size() == 4);

    // Far-apart vertices are untouched.
    PlanarNetwork big = extract_faces({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(merge_close_vertices(big, 1e-6) == 0);
}

TEST_CASE("merge records pre-collapse side counts for degenerate faces") {
    PlanarNetwork net = extract_faces(
        {{0, 0}, {1e-8, 0}, {5e-9, 1e-8}}, {{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(net.faces.size() == 1);
    CHECK(merge_close_vertices(net, 1e-6) == 2);
    CHECK(net.faces[0].size() == 1);
    CHECK(net.degenerate_sides(0) == 3);
}

TEST_CASE("run_t1 is deterministic and traces at the stride") {
    T1Config cfg;
    cfg.num_sites = 40;
    cfg.num_moves = 12;
    cfg.seed = 9;
    cfg.trace_stride = 5;
    const SimulationTrace a = run_t1(cfg);
    const SimulationTrace b = run_t1(cfg);
    CHECK(trace_to_csv(a) == trace_to_csv(b));
    CHECK(a.metadata_json == b.metadata_json);
    // Records at steps 0, 5, 10, 12.
    REQUIRE(a.records.size() == 4);
    CHECK(a.records[0].step == 0);
    CHECK(a.records[1].step == 5);
    CHECK(a.records[2].step == 10);
    CHECK(a.records[3].step == 12);
    for (const TraceRecord& r : a.records) CHECK(r.face_count == 40);
    CHECK(a.metadata_json.find("mt19937_64") != std::string::npos);
    CHECK(a.metadata_json.find("\"interrupted\": false") != std::string::npos);

    T1Config other = cfg;
    other.seed = 10;
    CHECK(trace_to_csv(run_t1(other)) != trace_to_csv(a));
}

TEST_CASE("run_t1 with zero moves emits the initial record only") {
    T1Config cfg;
    cfg.num_sites = 30;
    cfg.num_moves = 0;
    cfg.seed = 2;
    const SimulationTrace t = run_t1(cfg);
    REQUIRE(t.records.size() == 1);
    CHECK(t.records[0].step == 0);
    CHECK(t.records[0].face_count == 30);
}

TEST_CASE("run_t1 honors the stop flag") {
    std::atomic<bool> stop{true};
    T1Config cfg;
    cfg.num_sites = 30;
    cfg.num_moves = 1000;
    cfg.seed = 4;
    cfg.stop = &stop;
    const SimulationTrace t = run_t1(cfg);
    CHECK(t.records.back().step == 0);
    CHECK(t.metadata_json.find("\"interrupted\": true") != std::string::npos);
}

TEST_CASE("run_t1 rejects invalid configs") {
    T1Config cfg;
    cfg.num_sites = 2;
    CHECK_THROWS_AS(run_t1(cfg), ValidationError);
    cfg.num_sites = 30;
    cfg.trace_stride = 0;
    CHECK_THROWS_AS(run_t1(cfg), ValidationError);
}
