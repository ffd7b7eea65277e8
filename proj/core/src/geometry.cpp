#include "turn/geometry.hpp"

#include <cmath>

namespace turn {

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

double orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

static bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const double d1 = orient2d(c, d, a);
    const double d2 = orient2d(c, d, b);
    const double d3 = orient2d(a, b, c);
    const double d4 = orient2d(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

double signed_area(const Polygon& p) {
    double s = 0.0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = p.vertices[i];
        const Vec2& b = p.vertices[(i + 1) % n];
        s += cross(a, b);
    }
    return 0.5 * s;
}

double perimeter(const Polygon& p) {
    double s = 0.0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        s += norm(p.vertices[(i + 1) % n] - p.vertices[i]);
    return s;
}

void validate_polygon(const Polygon& p) {
    const std::size_t n = p.size();
    if (n < 3)
        throw ValidationError("polygon needs at least 3 vertices, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = p.vertices[(i + 1) % n] - p.vertices[i];
        if (norm(e) == 0.0)
            throw ValidationError("zero-length edge at vertex " + std::to_string(i));
    }
    // Non-adjacent edge pairs must not intersect.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(p.vertices[i], p.vertices[(i + 1) % n],
                                   p.vertices[j], p.vertices[(j + 1) % n]))
                throw ValidationError("self-intersection between edges at vertices " +
                                      std::to_string(i) + " and " + std::to_string(j));
        }
    }
    if (signed_area(p) <= 0.0)
        throw ValidationError("polygon must be counterclockwise (positive area)");
}

Polygon normalize_polygon(const Polygon& p) {
    validate_polygon(p);
    const double per = perimeter(p);
    const Vec2 origin = p.vertices[0];
    const Vec2 first = p.vertices[1] - p.vertices[0];
    const double c = first.x / norm(first);
    const double s = first.y / norm(first);
    Polygon out;
    out.vertices.reserve(p.size());
    for (const Vec2& v : p.vertices) {
        const Vec2 d = v - origin;
        // Rotate by -angle(first), then scale to unit perimeter.
        out.vertices.push_back({(c * d.x + s * d.y) / per, (-s * d.x + c * d.y) / per});
    }
    out.vertices[0] = {0.0, 0.0};
    return out;
}

Polygon perturb_vertex(const Polygon& p, std::size_t index, const Vec2& delta) {
    if (index >= p.size())
        throw ValidationError("vertex index " + std::to_string(index) + " out of range");
    Polygon out = p;
    out.vertices[index] = out.vertices[index] + delta;
    validate_polygon(out);
    return out;
}

Polygon regular_polygon(int n) {
    if (n < 3) throw ValidationError("regular polygon needs n >= 3");
    Polygon out;
    out.vertices.reserve(static_cast<std::size_t>(n));
    // Walk edge by edge; edge i has direction 2*pi*i/n.
    Vec2 v{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        out.vertices.push_back(v);
        const double a = 2.0 * M_PI * i / n;
        v = v + Vec2{std::cos(a), std::sin(a)};
    }
    return out;
}

Polygon rectangle(double aspect) {
    if (aspect <= 0.0) throw ValidationError("rectangle aspect must be positive");
    return Polygon{{{0, 0}, {aspect, 0}, {aspect, 1}, {0, 1}}};
}

Polygon right_triangle(double leg) {
    if (leg <= 0.0) throw ValidationError("triangle leg must be positive");
    return Polygon{{{0, 0}, {3, 0}, {3, leg}}};
}

}  // namespace turn
