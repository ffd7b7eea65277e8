#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace turn {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double a) const { return {x * a, y * a}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

double dot(const Vec2& a, const Vec2& b);
double cross(const Vec2& a, const Vec2& b);
double norm(const Vec2& v);

// Orientation of the triple (a,b,c): >0 left turn, <0 right turn, 0 collinear.
double orient2d(const Vec2& a, const Vec2& b, const Vec2& c);

// Proper or improper intersection of closed segments [a,b] and [c,d].
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simple closed polygon, counterclockwise, at least 3 vertices.
struct Polygon {
    std::vector<Vec2> vertices;

    std::size_t size() const { return vertices.size(); }
    const Vec2& operator[](std::size_t i) const { return vertices[i]; }
};

// Shoelace area (signed; positive for counterclockwise).
double signed_area(const Polygon& p);
double perimeter(const Polygon& p);

// Throws ValidationError naming the offending vertex on zero-length edges,
// self-intersection, or non-positive area. Collinear vertices are allowed.
void validate_polygon(const Polygon& p);

// Scale to unit perimeter, translate the starting vertex to the origin and
// rotate the first edge onto the positive x-axis. Idempotent.
Polygon normalize_polygon(const Polygon& p);

// Move one vertex by delta; everything else unchanged.
Polygon perturb_vertex(const Polygon& p, std::size_t index, const Vec2& delta);

// Regular n-gon with unit side length, first vertex at the origin and first
// edge along the positive x-axis (n >= 3).
Polygon regular_polygon(int n);

// Axis-aligned rectangle with aspect ratio a >= 1 (sides a and 1).
Polygon rectangle(double aspect);

// Right triangle with legs 3 and `leg` along the axes, per-vertex order
// (0,0), (3,0), (3,leg).
Polygon right_triangle(double leg);

}  // namespace turn
