#include "turn/sim_t1.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <json.hpp>

#include "turn/io.hpp"

namespace turn {

namespace {

// Sutherland-Hodgman clip of a convex cell by the half-plane n.x <= off.
Polygon clip_halfplane(const Polygon& poly, const Vec2& n, double off) {
    Polygon out;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % m];
        const double da = dot(n, a) - off;
        const double db = dot(n, b) - off;
        if (da <= 0.0) out.vertices.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            const double t = da / (da - db);
            out.vertices.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return out;
}

constexpr double kVoronoiWeld = 1e-9;

double snap_unit(double v) {
    if (std::abs(v) < kVoronoiWeld) return 0.0;
    if (std::abs(v - 1.0) < kVoronoiWeld) return 1.0;
    return v;
}

struct Welder {
    double tol;
    std::vector<Vec2> vertices;
    std::unordered_map<long long, int> index;

    explicit Welder(double t) : tol(t) {}
    static long long key(long long kx, long long ky) { return kx * 2000003LL + ky; }

    int id(const Vec2& p) {
        const long long kx = llround(p.x / tol);
        const long long ky = llround(p.y / tol);
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = index.find(key(kx + dx, ky + dy));
                if (it == index.end()) continue;
                const Vec2& q = vertices[static_cast<std::size_t>(it->second)];
                if (std::abs(q.x - p.x) < tol && std::abs(q.y - p.y) < tol) return it->second;
            }
        }
        vertices.push_back(p);
        index[key(kx, ky)] = static_cast<int>(vertices.size()) - 1;
        return static_cast<int>(vertices.size()) - 1;
    }
};

std::vector<Polygon> voronoi_cells(const std::vector<Vec2>& sites) {
    const std::size_t n = sites.size();
    std::vector<Polygon> cells(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i < n; ++i) {
        Polygon cell{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const Vec2 da = sites[a] - sites[i], db = sites[b] - sites[i];
            return dot(da, da) < dot(db, db);
        });
        for (std::size_t j : order) {
            if (j == i) continue;
            const Vec2 d = sites[j] - sites[i];
            const double dist2 = dot(d, d);
            double rmax2 = 0.0;
            for (const Vec2& v : cell.vertices) {
                const Vec2 dv = v - sites[i];
                rmax2 = std::max(rmax2, dot(dv, dv));
            }
            if (dist2 > 4.0 * rmax2) break;  // bisector cannot reach the cell
            cell = clip_halfplane(cell, d, 0.5 * (dot(d, sites[j]) + dot(d, sites[i])));
            if (cell.size() < 3) break;
        }
        cells[i] = std::move(cell);
    }
    return cells;
}

std::vector<std::vector<int>> adjacency(const PlanarNetwork& net) {
    std::vector<std::vector<int>> adj(net.vertices.size());
    for (const auto& [a, b] : net.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

// Face containing the directed arc u->v, or -1.
int find_face_with_arc(const PlanarNetwork& net, int u, int v) {
    for (std::size_t fi = 0; fi < net.faces.size(); ++fi) {
        const auto& f = net.faces[fi];
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == u && f[(i + 1) % f.size()] == v) return static_cast<int>(fi);
    }
    return -1;
}

bool has_edge(const PlanarNetwork& net, int a, int b) {
    if (a > b) std::swap(a, b);
    return std::binary_search(net.edges.begin(), net.edges.end(), std::make_pair(a, b));
}

void remove_edge(PlanarNetwork& net, int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(net.edges.begin(), net.edges.end(), std::make_pair(a, b));
    if (it != net.edges.end() && *it == std::make_pair(a, b)) net.edges.erase(it);
}

void add_edge(PlanarNetwork& net, int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(net.edges.begin(), net.edges.end(), std::make_pair(a, b));
    net.edges.insert(it, {a, b});
}

// Collapse consecutive duplicate indices (cyclically).
void tidy_cycle(std::vector<int>& f) {
    std::vector<int> out;
    for (int v : f)
        if (out.empty() || out.back() != v) out.push_back(v);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    f = std::move(out);
}

int distinct_count(const std::vector<int>& f) {
    std::vector<int> u;
    for (int v : f)
        if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
    return static_cast<int>(u.size());
}

}  // namespace

PlanarNetwork voronoi_init(int num_sites, std::uint64_t seed) {
    if (num_sites < 4) throw ValidationError("voronoi_init requires num_sites >= 4");
    Rng rng(seed);
    std::vector<Vec2> sites(static_cast<std::size_t>(num_sites));
    for (auto& s : sites) s = {uniform_unit(rng), uniform_unit(rng)};

    for (int attempt = 0; attempt < 10; ++attempt) {
        const auto cells = voronoi_cells(sites);
        Welder welder(kVoronoiWeld);
        PlanarNetwork net;
        std::set<std::pair<int, int>> edge_set;
        bool degenerate = false;
        for (const Polygon& cell : cells) {
            if (cell.size() < 3) {
                degenerate = true;
                break;
            }
            std::vector<int> cycle;
            for (const Vec2& p : cell.vertices)
                cycle.push_back(welder.id({snap_unit(p.x), snap_unit(p.y)}));
            tidy_cycle(cycle);
            if (distinct_count(cycle) < 3 ||
                static_cast<int>(cycle.size()) != distinct_count(cycle)) {
                degenerate = true;
                break;
            }
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
                if (a > b) std::swap(a, b);
                edge_set.insert({a, b});
            }
            net.faces.push_back(std::move(cycle));
        }
        if (!degenerate) {
            net.vertices = welder.vertices;
            net.edges.assign(edge_set.begin(), edge_set.end());
            net.boundary.assign(net.vertices.size(), false);
            for (std::size_t i = 0; i < net.vertices.size(); ++i) {
                const Vec2& v = net.vertices[i];
                if (v.x == 0.0 || v.x == 1.0 || v.y == 0.0 || v.y == 1.0)
                    net.boundary[i] = true;
            }
            validate_network(net);
            return net;
        }
        // Nearly coincident cell corners collapsed a cell: jitter and retry.
        for (auto& s : sites) {
            s.x = std::clamp(s.x + (uniform_unit(rng) - 0.5) * 2e-9, 0.0, 1.0);
            s.y = std::clamp(s.y + (uniform_unit(rng) - 0.5) * 2e-9, 0.0, 1.0);
        }
    }
    throw ValidationError("voronoi_init: degenerate site configuration persists after jitter");
}

PlanarNetwork tutte_embed(const PlanarNetwork& net) {
    const auto adj = adjacency(net);
    std::vector<int> interior;  // live interior vertices
    std::vector<int> slot(net.vertices.size(), -1);
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        if (adj[v].empty() || net.boundary[v]) continue;
        slot[v] = static_cast<int>(interior.size());
        interior.push_back(static_cast<int>(v));
    }
    const int m = static_cast<int>(interior.size());
    if (m == 0) return net;

    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
    for (int r = 0; r < m; ++r) {
        const std::size_t v = static_cast<std::size_t>(interior[static_cast<std::size_t>(r)]);
        trip.emplace_back(r, r, static_cast<double>(adj[v].size()));
        for (int w : adj[v]) {
            if (slot[static_cast<std::size_t>(w)] >= 0) {
                trip.emplace_back(r, slot[static_cast<std::size_t>(w)], -1.0);
            } else {
                bx(r) += net.vertices[static_cast<std::size_t>(w)].x;
                by(r) += net.vertices[static_cast<std::size_t>(w)].y;
            }
        }
    }
    Eigen::SparseMatrix<double> L(m, m);
    L.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(L);
    if (solver.info() != Eigen::Success)
        throw ValidationError("tutte_embed: singular spring system (interior component disconnected from boundary)");
    const Eigen::VectorXd x = solver.solve(bx);
    const Eigen::VectorXd y = solver.solve(by);

    PlanarNetwork out = net;
    for (int r = 0; r < m; ++r) {
        out.vertices[static_cast<std::size_t>(interior[static_cast<std::size_t>(r)])] = {x(r), y(r)};
    }
    const double res = tutte_residual(out);
    if (!(res <= 1e-9))
        throw ValidationError("tutte_embed: residual " + format_double(res) +
                              " exceeds 1e-9 (disconnected interior component?)");
    return out;
}

double tutte_residual(const PlanarNetwork& net) {
    const auto adj = adjacency(net);
    double worst = 0.0;
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        if (net.boundary[v] || adj[v].empty()) continue;
        Vec2 r = net.vertices[v] * static_cast<double>(adj[v].size());
        for (int w : adj[v]) r = r - net.vertices[static_cast<std::size_t>(w)];
        worst = std::max({worst, std::abs(r.x), std::abs(r.y)});
    }
    return worst;
}

T1Outcome t1_move(PlanarNetwork& net, int u, int v) {
    if (net.boundary[static_cast<std::size_t>(u)] || net.boundary[static_cast<std::size_t>(v)])
        return T1Outcome::rejected_boundary;
    const int f1 = find_face_with_arc(net, u, v);
    const int f2 = find_face_with_arc(net, v, u);
    if (f1 < 0 || f2 < 0) return T1Outcome::rejected_boundary;

    const auto adj = adjacency(net);
    if (adj[static_cast<std::size_t>(u)].size() != 3 || adj[static_cast<std::size_t>(v)].size() != 3)
        return T1Outcome::rejected_not_trivalent;

    auto& F1 = net.faces[static_cast<std::size_t>(f1)];
    auto& F2 = net.faces[static_cast<std::size_t>(f2)];
    if (F1.size() < 4 || F2.size() < 4) return T1Outcome::rejected_small_face;

    // F1 = [..., a, u, v, c, ...], F2 = [..., d, v, u, b, ...]
    const auto arc_pos = [](const std::vector<int>& f, int s, int t) {
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == s && f[(i + 1) % f.size()] == t) return i;
        return f.size();
    };
    const std::size_t i1 = arc_pos(F1, u, v);
    const std::size_t i2 = arc_pos(F2, v, u);
    const int a = F1[(i1 + F1.size() - 1) % F1.size()];
    const int c = F1[(i1 + 2) % F1.size()];
    const int d = F2[(i2 + F2.size() - 1) % F2.size()];
    const int b = F2[(i2 + 2) % F2.size()];

    // The side faces that touch only one endpoint.
    int fu = -1, fv = -1;
    for (std::size_t fi = 0; fi < net.faces.size(); ++fi) {
        if (static_cast<int>(fi) == f1 || static_cast<int>(fi) == f2) continue;
        const auto& f = net.faces[fi];
        const bool has_u = std::find(f.begin(), f.end(), u) != f.end();
        const bool has_v = std::find(f.begin(), f.end(), v) != f.end();
        if (has_u && !has_v) fu = static_cast<int>(fi);
        if (has_v && !has_u) fv = static_cast<int>(fi);
    }
    if (fu < 0 || fv < 0) return T1Outcome::rejected_boundary;
    if (has_edge(net, v, a) || has_edge(net, u, d)) return T1Outcome::rejected_nonsimple;

    // Apply: F1 drops u, F2 drops v, F_u gains v next to a, F_v gains u next to d.
    F1.erase(F1.begin() + static_cast<std::ptrdiff_t>(i1));
    const std::size_t j2 = arc_pos(F2, v, u);
    F2.erase(F2.begin() + static_cast<std::ptrdiff_t>(j2));

    auto insert_next_to = [](std::vector<int>& f, int pivot, int anchor, int newcomer) {
        // Insert `newcomer` between `pivot` and its neighbor `anchor`.
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] != pivot) continue;
            if (f[(i + 1) % f.size()] == anchor) {
                f.insert(f.begin() + static_cast<std::ptrdiff_t>(i) + 1, newcomer);
                return true;
            }
            if (f[(i + f.size() - 1) % f.size()] == anchor) {
                f.insert(f.begin() + static_cast<std::ptrdiff_t>(i), newcomer);
                return true;
            }
        }
        return false;
    };
    if (!insert_next_to(net.faces[static_cast<std::size_t>(fu)], u, a, v) ||
        !insert_next_to(net.faces[static_cast<std::size_t>(fv)], v, d, u))
        throw ValidationError("t1_move: inconsistent face structure");

    remove_edge(net, u, a);
    remove_edge(net, v, d);
    add_edge(net, v, a);
    add_edge(net, u, d);
    return T1Outcome::applied;
}

int merge_close_vertices(PlanarNetwork& net, double tol) {
    // Side counts before this merging pass, for the degenerate-face policy.
    std::vector<int> sides_at_entry(net.faces.size());
    for (std::size_t fi = 0; fi < net.faces.size(); ++fi)
        sides_at_entry[fi] = distinct_count(net.faces[fi]);

    int merges = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        // Contract the first edge shorter than the tolerance.
        int keep = -1, drop = -1;
        for (const auto& [a, b] : net.edges) {
            const Vec2 d = net.vertices[static_cast<std::size_t>(a)] -
                           net.vertices[static_cast<std::size_t>(b)];
            if (std::abs(d.x) < tol && std::abs(d.y) < tol && norm(d) < tol) {
                keep = a;
                drop = b;
                break;
            }
        }
        if (keep < 0) break;

        // Pinned position wins; otherwise keep the lower index.
        if (net.boundary[static_cast<std::size_t>(drop)] &&
            !net.boundary[static_cast<std::size_t>(keep)])
            std::swap(keep, drop);
        net.boundary[static_cast<std::size_t>(keep)] =
            net.boundary[static_cast<std::size_t>(keep)] ||
            net.boundary[static_cast<std::size_t>(drop)];

        if (net.degenerate_original_sides.empty())
            net.degenerate_original_sides.assign(net.faces.size(), 0);
        for (std::size_t fi = 0; fi < net.faces.size(); ++fi) {
            auto& f = net.faces[fi];
            if (std::find(f.begin(), f.end(), drop) == f.end()) continue;
            for (int& v : f)
                if (v == drop) v = keep;
            // Keep the first occurrence of every index; a contraction can
            // pinch a face that visited both endpoints.
            std::vector<int> out;
            for (int v : f)
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            f = std::move(out);
            if (static_cast<int>(f.size()) < 3 && net.degenerate_original_sides[fi] == 0)
                net.degenerate_original_sides[fi] = sides_at_entry[fi];
        }
        std::set<std::pair<int, int>> edge_set;
        for (auto [a, b] : net.edges) {
            if (a == drop) a = keep;
            if (b == drop) b = keep;
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            edge_set.insert({a, b});
        }
        net.edges.assign(edge_set.begin(), edge_set.end());
        ++merges;
        changed = true;
    }
    return merges;
}

SimulationTrace run_t1(const T1Config& cfg) {
    if (cfg.num_sites < 4 || cfg.num_moves < 0 || cfg.trace_stride < 1 ||
        cfg.merge_tolerance <= 0.0)
        throw ValidationError("invalid T1 config");
    Rng rng(cfg.seed);
    // Separate stream for site generation so edge draws do not depend on
    // how many random numbers the Voronoi stage consumed.
    PlanarNetwork net = voronoi_init(cfg.num_sites, cfg.seed);
    net = tutte_embed(net);
    merge_close_vertices(net, cfg.merge_tolerance);

    SimulationTrace trace;
    trace.records.push_back(make_record(0, net));

    long long accepted = 0, rejected = 0;
    long long snapshot_count = 0;
    auto maybe_snapshot = [&]() {
        if (cfg.snapshot_dir.empty() || cfg.snapshot_stride < 1) return;
        if (static_cast<long long>(trace.records.size() - 1) % cfg.snapshot_stride != 0) return;
        write_network_json(net, cfg.snapshot_dir + "/snapshot_" +
                                    std::to_string(trace.records.back().step) + ".json");
        ++snapshot_count;
    };
    maybe_snapshot();

    // Interior edges (two incident faces), canonical order.
    auto interior_edges = [&]() {
        std::map<std::pair<int, int>, int> count;
        for (const auto& f : net.faces) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                int a = f[i], b = f[(i + 1) % f.size()];
                if (a == b) continue;
                if (a > b) std::swap(a, b);
                ++count[{a, b}];
            }
        }
        std::vector<std::pair<int, int>> out;
        for (const auto& [e, c] : count)
            if (c == 2) out.push_back(e);
        return out;
    };

    std::vector<std::pair<int, int>> candidates = interior_edges();
    const long long max_attempts = 10000 * std::max<long long>(1, cfg.num_moves);
    long long attempts = 0;
    bool interrupted = false;
    while (accepted < cfg.num_moves) {
        if (cfg.stop && cfg.stop->load()) {
            interrupted = true;
            break;
        }
        if (++attempts > max_attempts)
            throw ValidationError("run_t1: no applicable T1 edge found");
        const auto [u, v] = candidates[uniform_index(rng, candidates.size())];
        if (t1_move(net, u, v) != T1Outcome::applied) {
            ++rejected;
            continue;
        }
        net = tutte_embed(net);
        merge_close_vertices(net, cfg.merge_tolerance);
        ++accepted;
        candidates = interior_edges();
        if (accepted % cfg.trace_stride == 0 || accepted == cfg.num_moves) {
            trace.records.push_back(make_record(accepted, net));
            maybe_snapshot();
        }
    }

    nlohmann::json meta;
    meta["process"] = "t1";
    meta["num_sites"] = cfg.num_sites;
    meta["num_moves"] = cfg.num_moves;
    meta["seed"] = cfg.seed;
    meta["merge_tolerance"] = cfg.merge_tolerance;
    meta["trace_stride"] = cfg.trace_stride;
    meta["rng"] = kRngSpec;
    meta["rejected_draws"] = rejected;
    meta["snapshots"] = snapshot_count;
    meta["interrupted"] = interrupted;
    if (interrupted && (trace.records.empty() || trace.records.back().step != accepted))
        trace.records.push_back(make_record(accepted, net));
    meta["notes"] = "steps count accepted moves; rejected draws do not advance the step counter";
    trace.metadata_json = meta.dump(2) + "\n";
    return trace;
}

}  // namespace turn
