#include "turn/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "turn/distance.hpp"
#include "turn/regular.hpp"

namespace turn {

namespace {

Polygon cycle_polygon(const PlanarNetwork& net, const std::vector<int>& cycle) {
    Polygon p;
    p.vertices.reserve(cycle.size());
    for (int v : cycle) p.vertices.push_back(net.vertices[static_cast<std::size_t>(v)]);
    return p;
}

// Count distinct positions in a face cycle (consecutive duplicates collapsed).
int distinct_points(const PlanarNetwork& net, const std::vector<int>& cycle) {
    std::vector<int> uniq;
    for (int v : cycle)
        if (std::find(uniq.begin(), uniq.end(), v) == uniq.end()) uniq.push_back(v);
    return static_cast<int>(uniq.size());
}

}  // namespace

PlanarNetwork extract_faces(std::vector<Vec2> vertices,
                            std::vector<std::pair<int, int>> edges) {
    const int nv = static_cast<int>(vertices.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= nv || u == v)
            throw ValidationError("edge references invalid vertex");
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (int u = 0; u < nv; ++u) {
        auto& nb = adj[static_cast<std::size_t>(u)];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        if (nb.size() < 2)
            throw ValidationError("dangling vertex " + std::to_string(u));
        // ccw angular order around u
        std::sort(nb.begin(), nb.end(), [&](int a, int b) {
            const Vec2 da = vertices[static_cast<std::size_t>(a)] - vertices[static_cast<std::size_t>(u)];
            const Vec2 db = vertices[static_cast<std::size_t>(b)] - vertices[static_cast<std::size_t>(u)];
            return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
        });
    }

    // Walk every directed edge once; face interior kept on the left.
    std::map<std::pair<int, int>, bool> used;
    for (const auto& [u, v] : edges) {
        used[{u, v}] = false;
        used[{v, u}] = false;
    }
    PlanarNetwork net;
    net.vertices = std::move(vertices);
    net.edges = std::move(edges);
    for (auto& [he, flag] : used) {
        if (flag) continue;
        std::vector<int> cycle;
        int u = he.first, v = he.second;
        while (!used[{u, v}]) {
            used[{u, v}] = true;
            cycle.push_back(u);
            const auto& nb = adj[static_cast<std::size_t>(v)];
            // Successor of (u,v): neighbor of v clockwise-next from v->u.
            const auto it = std::find(nb.begin(), nb.end(), u);
            const std::size_t idx = static_cast<std::size_t>(it - nb.begin());
            const int w = nb[(idx + nb.size() - 1) % nb.size()];
            u = v;
            v = w;
        }
        Polygon poly = cycle_polygon(net, cycle);
        if (signed_area(poly) > 0.0) net.faces.push_back(std::move(cycle));
        // Negative-area walk is the outer face: dropped.
    }

    // Boundary: vertices on edges with only one interior face.
    std::map<std::pair<int, int>, int> face_count;
    for (const auto& f : net.faces) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            if (a > b) std::swap(a, b);
            ++face_count[{a, b}];
        }
    }
    net.boundary.assign(net.vertices.size(), false);
    for (const auto& [e, cnt] : face_count) {
        if (cnt == 1) {
            net.boundary[static_cast<std::size_t>(e.first)] = true;
            net.boundary[static_cast<std::size_t>(e.second)] = true;
        }
    }
    return net;
}

double face_area(const PlanarNetwork& net, std::size_t face_id) {
    return signed_area(cycle_polygon(net, net.faces[face_id]));
}

int face_sides(const PlanarNetwork& net, std::size_t face_id) {
    return static_cast<int>(net.faces[face_id].size());
}

Polygon face_polygon(const PlanarNetwork& net, std::size_t face_id) {
    return cycle_polygon(net, net.faces[face_id]);
}

double total_face_area(const PlanarNetwork& net) {
    double total = 0.0;
    for (std::size_t i = 0; i < net.faces.size(); ++i) {
        if (net.degenerate_sides(i) > 0) continue;
        total += face_area(net, i);
    }
    return total;
}

void validate_network(const PlanarNetwork& net) {
    const int nv = static_cast<int>(net.vertices.size());
    std::map<std::pair<int, int>, int> face_count;
    for (std::size_t fi = 0; fi < net.faces.size(); ++fi) {
        const auto& f = net.faces[fi];
        if (net.degenerate_sides(fi) > 0) continue;
        if (f.size() < 3)
            throw ValidationError("face " + std::to_string(fi) + " has fewer than 3 vertices");
        if (face_area(net, fi) <= 0.0)
            throw ValidationError("face " + std::to_string(fi) + " has non-positive area");
        for (std::size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            if (a < 0 || a >= nv || b < 0 || b >= nv)
                throw ValidationError("face " + std::to_string(fi) + " references invalid vertex");
            if (a > b) std::swap(a, b);
            ++face_count[{a, b}];
        }
    }
    for (const auto& [e, cnt] : face_count)
        if (cnt > 2)
            throw ValidationError("edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ") borders " +
                                  std::to_string(cnt) + " faces");
    // Euler relation for a disk-like domain (only meaningful when every vertex
    // and edge belongs to some face).
    std::vector<bool> seen(net.vertices.size(), false);
    for (const auto& f : net.faces)
        for (int v : f) seen[static_cast<std::size_t>(v)] = true;
    const long long V = std::count(seen.begin(), seen.end(), true);
    const long long E = static_cast<long long>(face_count.size());
    const long long F = static_cast<long long>(net.faces.size());
    if (V - E + F != 1)
        throw ValidationError("Euler relation violated: V-E+F = " +
                              std::to_string(V - E + F));
}

bool is_planar_embedding(const PlanarNetwork& net) {
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < net.edges.size(); ++j) {
            const auto [a, b] = net.edges[i];
            const auto [c, d] = net.edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_intersect(net.vertices[static_cast<std::size_t>(a)],
                                   net.vertices[static_cast<std::size_t>(b)],
                                   net.vertices[static_cast<std::size_t>(c)],
                                   net.vertices[static_cast<std::size_t>(d)]))
                return false;
        }
    }
    return true;
}

double degenerate_face_distance(int points, int original_sides, OrderedShape shape) {
    const long long n = std::max<long long>(2, original_sides);
    if (points <= 1) {
        switch (shape) {
            case OrderedShape::regular: return 0.0;
            case OrderedShape::hexagon: return d2_regular_closed(n, 6).distance;
            case OrderedShape::circle: return d2_circle_regular(n);
        }
    }
    switch (shape) {
        case OrderedShape::regular: return d2_segment_vs_regular(n);
        case OrderedShape::hexagon: return d2_segment_vs_regular(6);
        case OrderedShape::circle: return d2_segment_vs_circle();
    }
    return 0.0;
}

double face_distance(const PlanarNetwork& net, std::size_t face_id, OrderedShape shape) {
    const int orig = net.degenerate_sides(face_id);
    if (orig > 0)
        return degenerate_face_distance(distinct_points(net, net.faces[face_id]), orig, shape);
    Polygon poly = face_polygon(net, face_id);
    // Fully collapsed needles (zero-width faces from spring-network collapse)
    // keep 3+ distinct collinear points; score them like 2-point faces.
    if (2.0 * std::abs(signed_area(poly)) < 1e-9 * perimeter(poly))
        return degenerate_face_distance(2, face_sides(net, face_id), shape);
    try {
        switch (shape) {
            case OrderedShape::regular:
                return d2_vs_regular(turning_function(normalize_polygon(poly)),
                                     face_sides(net, face_id))
                    .distance;
            case OrderedShape::hexagon:
                return d2_vs_regular(turning_function(normalize_polygon(poly)), 6).distance;
            case OrderedShape::circle:
                return d2_circle_polygon(trace_from_polygon(poly));
        }
    } catch (const ValidationError& e) {
        throw ValidationError("face " + std::to_string(face_id) + ": " + e.what());
    }
    return 0.0;
}

namespace {

bool face_included(const PlanarNetwork& net, std::size_t fi, bool interior_only) {
    if (!interior_only) return true;
    for (int v : net.faces[fi])
        if (net.boundary[static_cast<std::size_t>(v)]) return false;
    return true;
}

}  // namespace

double disorder(const PlanarNetwork& net, OrderedShape shape, bool weighted,
                bool interior_only) {
    double sum = 0.0, wsum = 0.0;
    long long count = 0;
    for (std::size_t fi = 0; fi < net.faces.size(); ++fi) {
        if (!face_included(net, fi, interior_only)) continue;
        const double d = face_distance(net, fi, shape);
        const double a = net.degenerate_sides(fi) > 0 ? 0.0 : std::max(0.0, face_area(net, fi));
        sum += d;
        wsum += a * d;
        ++count;
    }
    if (count == 0) throw ValidationError("disorder over empty face set");
    if (!weighted) return sum / static_cast<double>(count);
    double total = 0.0;
    for (std::size_t fi = 0; fi < net.faces.size(); ++fi)
        if (face_included(net, fi, interior_only) && net.degenerate_sides(fi) == 0)
            total += std::max(0.0, face_area(net, fi));
    return wsum / total;  // areas renormalized so the domain has unit area
}

DisorderReport disorder_report(const PlanarNetwork& net, bool interior_only) {
    DisorderReport rep;
    double total_area = 0.0;
    long long count = 0;
    for (std::size_t fi = 0; fi < net.faces.size(); ++fi) {
        if (!face_included(net, fi, interior_only)) continue;
        const double dr = face_distance(net, fi, OrderedShape::regular);
        const double d6 = face_distance(net, fi, OrderedShape::hexagon);
        const double dc = face_distance(net, fi, OrderedShape::circle);
        const double a = net.degenerate_sides(fi) > 0 ? 0.0 : std::max(0.0, face_area(net, fi));
        rep.per_face.push_back({dr, d6, dc, a});
        rep.D += dr;
        rep.D6 += d6;
        rep.Dc += dc;
        rep.D_w += a * dr;
        rep.D6_w += a * d6;
        rep.Dc_w += a * dc;
        total_area += a;
        ++count;
    }
    if (count == 0) throw ValidationError("disorder over empty face set");
    rep.D /= static_cast<double>(count);
    rep.D6 /= static_cast<double>(count);
    rep.Dc /= static_cast<double>(count);
    rep.D_w /= total_area;
    rep.D6_w /= total_area;
    rep.Dc_w /= total_area;
    return rep;
}

}  // namespace turn
