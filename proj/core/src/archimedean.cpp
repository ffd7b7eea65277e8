#include "turn/archimedean.hpp"

#include <cmath>
#include <unordered_map>

#include "turn/regular.hpp"

namespace turn {

namespace {

constexpr double kWeldTol = 1e-6;

struct Welder {
    std::vector<Vec2> vertices;
    std::unordered_map<long long, int> index;

    static long long key(long long kx, long long ky) { return kx * 2000003LL + ky; }

    int id(const Vec2& p) {
        const long long kx = llround(p.x / kWeldTol);
        const long long ky = llround(p.y / kWeldTol);
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = index.find(key(kx + dx, ky + dy));
                if (it == index.end()) continue;
                const Vec2& q = vertices[static_cast<std::size_t>(it->second)];
                if (std::abs(q.x - p.x) < kWeldTol && std::abs(q.y - p.y) < kWeldTol)
                    return it->second;
            }
        }
        vertices.push_back(p);
        index[key(kx, ky)] = static_cast<int>(vertices.size()) - 1;
        return static_cast<int>(vertices.size()) - 1;
    }
};

std::vector<Vec2> regular_tile(const Vec2& c, double R, double angle0_deg, int sides) {
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(sides));
    for (int k = 0; k < sides; ++k) {
        const double a = (angle0_deg + 360.0 * k / sides) * M_PI / 180.0;
        out.push_back({c.x + R * std::cos(a), c.y + R * std::sin(a)});
    }
    return out;
}

bool inside_square(const std::vector<Vec2>& tile, double w) {
    for (const Vec2& p : tile)
        if (std::abs(p.x) > w || std::abs(p.y) > w) return false;
    return true;
}

// Generator tiles whose union of edges carries the whole tiling; the
// remaining tiles (squares of 4.8.8 / 4.6.12, triangles of 3.12.12) emerge
// from the face walk.
std::vector<std::vector<Vec2>> generator_tiles(const std::string& name, double w) {
    std::vector<std::vector<Vec2>> tiles;
    const double R8 = 1.0 / (2.0 * std::sin(M_PI / 8.0));
    const double R12 = 1.0 / (2.0 * std::sin(M_PI / 12.0));
    auto sweep = [&](const Vec2& a1, const Vec2& a2, auto&& emit) {
        const double reach = w + 8.0;
        const int range = static_cast<int>(reach / std::min(norm(a1), norm(a2))) + 3;
        for (int i = -range; i <= range; ++i)
            for (int j = -range; j <= range; ++j)
                emit(Vec2{i * a1.x + j * a2.x, i * a1.y + j * a2.y});
    };
    if (name == "hex") {
        const double s3 = std::sqrt(3.0);
        sweep({1.5, s3 / 2.0}, {0.0, s3}, [&](const Vec2& c) {
            auto t = regular_tile(c, 1.0, 0.0, 6);
            if (inside_square(t, w)) tiles.push_back(std::move(t));
        });
    } else if (name == "4.8.8") {
        const double T = 1.0 + std::sqrt(2.0);
        sweep({T, 0.0}, {0.0, T}, [&](const Vec2& c) {
            auto t = regular_tile(c, R8, 22.5, 8);
            if (inside_square(t, w)) tiles.push_back(std::move(t));
        });
    } else if (name == "3.12.12") {
        const double s = 2.0 + std::sqrt(3.0);
        sweep({s, 0.0}, {s * 0.5, s * std::sqrt(3.0) / 2.0}, [&](const Vec2& c) {
            auto t = regular_tile(c, R12, 15.0, 12);
            if (inside_square(t, w)) tiles.push_back(std::move(t));
        });
    } else if (name == "4.6.12") {
        const double s = 3.0 + std::sqrt(3.0);
        const Vec2 a1{s, 0.0}, a2{s * 0.5, s * std::sqrt(3.0) / 2.0};
        sweep(a1, a2, [&](const Vec2& c) {
            auto t = regular_tile(c, R12, 15.0, 12);
            if (inside_square(t, w)) tiles.push_back(std::move(t));
            for (double f : {1.0 / 3.0, 2.0 / 3.0}) {
                const Vec2 h{c.x + f * (a1.x + a2.x), c.y + f * (a1.y + a2.y)};
                auto hexv = regular_tile(h, 1.0, 0.0, 6);
                if (inside_square(hexv, w)) tiles.push_back(std::move(hexv));
            }
        });
    } else {
        throw ValidationError("unknown lattice '" + name + "'; supported: hex, 4.8.8, 3.12.12, 4.6.12");
    }
    return tiles;
}

}  // namespace

bool lattice_supported(const std::string& name) {
    return name == "hex" || name == "4.8.8" || name == "3.12.12" || name == "4.6.12";
}

std::vector<std::string> supported_lattices() {
    return {"hex", "4.8.8", "3.12.12", "4.6.12"};
}

PlanarNetwork generate_lattice(const std::string& name, int half_width) {
    if (half_width < 1) throw ValidationError("half_width must be >= 1");
    const auto tiles = generator_tiles(name, static_cast<double>(half_width));
    if (tiles.empty())
        throw ValidationError("half_width " + std::to_string(half_width) +
                              " too small for lattice " + name);
    Welder welder;
    std::vector<std::pair<int, int>> edges;
    for (const auto& tile : tiles) {
        std::vector<int> ids;
        ids.reserve(tile.size());
        for (const Vec2& p : tile) ids.push_back(welder.id(p));
        for (std::size_t i = 0; i < ids.size(); ++i) {
            int a = ids[i], b = ids[(i + 1) % ids.size()];
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        }
    }
    return extract_faces(std::move(welder.vertices), std::move(edges));
}

FundamentalRegion fundamental_region(const std::string& name) {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    FundamentalRegion r;
    r.lattice_name = name;
    if (name == "hex") {
        r.q[6] = 1.0;
        r.p[6] = 1.0;
    } else if (name == "4.8.8") {
        r.q[4] = 0.5;
        r.q[8] = 0.5;
        r.p[4] = 3.0 - 2.0 * s2;
        r.p[8] = 2.0 * s2 - 2.0;
    } else if (name == "3.12.12") {
        r.q[3] = 2.0 / 3.0;
        r.q[12] = 1.0 / 3.0;
        r.p[3] = 7.0 - 4.0 * s3;
        r.p[12] = 4.0 * s3 - 6.0;
    } else if (name == "4.6.12") {
        r.q[4] = 0.5;
        r.q[6] = 1.0 / 3.0;
        r.q[12] = 1.0 / 6.0;
        r.p[4] = (2.0 * s3 - 3.0) / 3.0;
        r.p[6] = 2.0 - s3;
        r.p[12] = s3 / 3.0;
    } else {
        throw ValidationError("unknown lattice '" + name + "'; supported: hex, 4.8.8, 3.12.12, 4.6.12");
    }
    return r;
}

double exact_disorder(const FundamentalRegion& region, OrderedShape shape, bool weighted) {
    if (shape == OrderedShape::regular) return 0.0;
    const auto& props = weighted ? region.p : region.q;
    double total = 0.0;
    for (const auto& [k, prop] : props) {
        const double d = shape == OrderedShape::hexagon ? d2_regular_closed(k, 6).distance
                                                        : d2_circle_regular(k);
        total += prop * d;
    }
    return total;
}

double exact_disorder(const std::string& name, OrderedShape shape, bool weighted) {
    return exact_disorder(fundamental_region(name), shape, weighted);
}

}  // namespace turn
