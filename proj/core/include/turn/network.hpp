#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "turn/geometry.hpp"

namespace turn {

// Planar polygonal network: straight-line embedded graph plus its interior
// faces as counterclockwise vertex cycles.
struct PlanarNetwork {
    std::vector<Vec2> vertices;
    std::vector<std::pair<int, int>> edges;  // unordered pairs, first < second
    std::vector<std::vector<int>> faces;     // interior faces, ccw
    std::vector<bool> boundary;              // per-vertex flag

    // Original side count for faces collapsed to 1-2 distinct points by
    // vertex merging; 0 for ordinary faces. Empty when no face is degenerate.
    std::vector<int> degenerate_original_sides;

    int degenerate_sides(std::size_t face_id) const {
        return face_id < degenerate_original_sides.size()
                   ? degenerate_original_sides[face_id]
                   : 0;
    }
};

// Recover interior faces of a planar straight-line graph by angularly sorted
// half-edge traversal; the unbounded outer face is dropped. Boundary flags are
// set on vertices of edges bordering only one face.
PlanarNetwork extract_faces(std::vector<Vec2> vertices,
                            std::vector<std::pair<int, int>> edges);

double face_area(const PlanarNetwork& net, std::size_t face_id);
int face_sides(const PlanarNetwork& net, std::size_t face_id);
Polygon face_polygon(const PlanarNetwork& net, std::size_t face_id);

double total_face_area(const PlanarNetwork& net);

// Structural checks: edge/face incidence counts, positive face areas,
// Euler relation V - E + F = 1 for the interior face set. Throws on failure.
void validate_network(const PlanarNetwork& net);

// O(E^2) segment-crossing scan; true when no two edges intersect except at
// shared endpoints.
bool is_planar_embedding(const PlanarNetwork& net);

enum class OrderedShape { regular, hexagon, circle };

struct DisorderReport {
    double D = 0, D_w = 0, D6 = 0, D6_w = 0, Dc = 0, Dc_w = 0;
    // Per face: regular, hexagonal, circular distance and area.
    std::vector<std::array<double, 4>> per_face;
};

// d2 between one face and the ordered shape; degenerate faces (1-2 distinct
// points) use the segment / regular-n-gon approximations.
double face_distance(const PlanarNetwork& net, std::size_t face_id, OrderedShape shape);

// Distance of a face collapsed to `distinct_points` (1 or 2) whose original
// side count was n.
double degenerate_face_distance(int distinct_points, int original_sides, OrderedShape shape);

double disorder(const PlanarNetwork& net, OrderedShape shape, bool weighted,
                bool interior_only = false);

DisorderReport disorder_report(const PlanarNetwork& net, bool interior_only = false);

}  // namespace turn
