#include "turn/sim_rupture.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "turn/io.hpp"

namespace turn {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::vector<int>> adjacency(const PlanarNetwork& net) {
    std::vector<std::vector<int>> adj(net.vertices.size());
    for (const auto& [a, b] : net.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

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

// True when the chord (p,q) touches any edge not incident to a removed vertex
// and not sharing an endpoint with the chord.
bool chord_blocked(const PlanarNetwork& net, int p, int q, int u, int v) {
    const Vec2& P = net.vertices[static_cast<std::size_t>(p)];
    const Vec2& Q = net.vertices[static_cast<std::size_t>(q)];
    for (const auto& [a, b] : net.edges) {
        if (a == u || a == v || b == u || b == v) continue;
        if (a == p || a == q || b == p || b == q) continue;
        if (segments_intersect(P, Q, net.vertices[static_cast<std::size_t>(a)],
                               net.vertices[static_cast<std::size_t>(b)]))
            return true;
    }
    return false;
}

}  // namespace

PlanarNetwork hexagonal_patch(int target_cells, int* rows_out, int* cols_out) {
    if (target_cells < 1) throw ValidationError("hexagonal_patch needs target_cells >= 1");
    const int cols = std::max(1, static_cast<int>(std::lround(std::sqrt(
                                     static_cast<double>(target_cells)))));
    const int rows = (target_cells + cols - 1) / cols;
    if (rows_out) *rows_out = rows;
    if (cols_out) *cols_out = cols;

    const Vec2 a1{1.5, std::sqrt(3.0) / 2.0};
    const Vec2 a2{0.0, std::sqrt(3.0)};
    const double tol = 1e-6;
    std::vector<Vec2> vertices;
    std::unordered_map<long long, int> index;
    const auto vertex_id = [&](const Vec2& p) {
        const long long kx = llround(p.x / tol);
        const long long ky = llround(p.y / tol);
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = index.find((kx + dx) * 2000003LL + (ky + dy));
                if (it == index.end()) continue;
                const Vec2& q = vertices[static_cast<std::size_t>(it->second)];
                if (std::abs(q.x - p.x) < tol && std::abs(q.y - p.y) < tol) return it->second;
            }
        }
        vertices.push_back(p);
        index[kx * 2000003LL + ky] = static_cast<int>(vertices.size()) - 1;
        return static_cast<int>(vertices.size()) - 1;
    };

    std::set<std::pair<int, int>> edge_set;
    int placed = 0;
    for (int i = 0; i < cols && placed < target_cells; ++i) {
        for (int j = 0; j < rows && placed < target_cells; ++j, ++placed) {
            const Vec2 c = a1 * static_cast<double>(i) + a2 * static_cast<double>(j);
            int ids[6];
            for (int k = 0; k < 6; ++k) {
                const double ang = kPi / 3.0 * k;
                ids[k] = vertex_id({c.x + std::cos(ang), c.y + std::sin(ang)});
            }
            for (int k = 0; k < 6; ++k) {
                int s = ids[k], t = ids[(k + 1) % 6];
                if (s > t) std::swap(s, t);
                edge_set.insert({s, t});
            }
        }
    }
    PlanarNetwork net = extract_faces(
        std::move(vertices), std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
    if (static_cast<int>(net.faces.size()) != target_cells)
        throw ValidationError("hexagonal_patch: face extraction produced " +
                              std::to_string(net.faces.size()) + " cells, expected " +
                              std::to_string(target_cells));
    return net;
}

RuptureOutcome rupture_move(PlanarNetwork& net, int u, int v) {
    if (net.boundary[static_cast<std::size_t>(u)] || net.boundary[static_cast<std::size_t>(v)])
        return RuptureOutcome::rejected_boundary;
    const int f1 = find_face_with_arc(net, u, v);
    const int f2 = find_face_with_arc(net, v, u);
    if (f1 < 0 || f2 < 0) return RuptureOutcome::rejected_boundary;

    const auto adj = adjacency(net);
    if (adj[static_cast<std::size_t>(u)].size() != 3 || adj[static_cast<std::size_t>(v)].size() != 3)
        return RuptureOutcome::rejected_not_trivalent;

    const auto& F1 = net.faces[static_cast<std::size_t>(f1)];
    const auto& F2 = net.faces[static_cast<std::size_t>(f2)];
    const std::size_t n1 = F1.size(), n2 = F2.size();
    if (static_cast<int>(n1 + n2) - 4 < 3) return RuptureOutcome::rejected_small_face;

    const auto arc_pos = [](const std::vector<int>& f, int s, int t) {
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == s && f[(i + 1) % f.size()] == t) return i;
        return f.size();
    };
    const std::size_t i1 = arc_pos(F1, u, v);
    const std::size_t i2 = arc_pos(F2, v, u);
    // F1 = [..., a, u, v, c, ...]; F2 = [..., d, v, u, b, ...]
    const int a = F1[(i1 + n1 - 1) % n1];
    const int c = F1[(i1 + 2) % n1];
    const int d = F2[(i2 + n2 - 1) % n2];
    const int b = F2[(i2 + 2) % n2];

    const int fu = find_face_with_arc(net, u, a);
    const int fv = find_face_with_arc(net, v, d);
    if (fu < 0 || fv < 0) return RuptureOutcome::rejected_boundary;
    if (net.faces[static_cast<std::size_t>(fu)].size() < 4 ||
        net.faces[static_cast<std::size_t>(fv)].size() < 4)
        return RuptureOutcome::rejected_small_face;

    // Merged cycle: F1 from c around to a, then F2 from b around to d, joined
    // by the new chords (a,b) and (d,c).
    std::vector<int> merged;
    merged.reserve(n1 + n2 - 4);
    for (std::size_t k = 0; k < n1 - 2; ++k) merged.push_back(F1[(i1 + 2 + k) % n1]);
    for (std::size_t k = 0; k < n2 - 2; ++k) merged.push_back(F2[(i2 + 2 + k) % n2]);
    {
        std::vector<int> sorted = merged;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return RuptureOutcome::rejected_nonsimple;
    }
    if (has_edge(net, a, b) || has_edge(net, c, d)) return RuptureOutcome::rejected_nonsimple;
    if (chord_blocked(net, a, b, u, v) || chord_blocked(net, c, d, u, v))
        return RuptureOutcome::rejected_nonsimple;
    if (a != c && a != d && b != c && b != d &&
        segments_intersect(net.vertices[static_cast<std::size_t>(a)],
                           net.vertices[static_cast<std::size_t>(b)],
                           net.vertices[static_cast<std::size_t>(c)],
                           net.vertices[static_cast<std::size_t>(d)]))
        return RuptureOutcome::rejected_nonsimple;

    // Apply.
    auto& Fu = net.faces[static_cast<std::size_t>(fu)];
    Fu.erase(std::find(Fu.begin(), Fu.end(), u));
    auto& Fv = net.faces[static_cast<std::size_t>(fv)];
    Fv.erase(std::find(Fv.begin(), Fv.end(), v));
    net.faces[static_cast<std::size_t>(f1)] = std::move(merged);
    net.faces.erase(net.faces.begin() + f2);
    if (!net.degenerate_original_sides.empty())
        net.degenerate_original_sides.erase(net.degenerate_original_sides.begin() + f2);

    remove_edge(net, u, v);
    remove_edge(net, u, a);
    remove_edge(net, u, b);
    remove_edge(net, v, c);
    remove_edge(net, v, d);
    add_edge(net, a, b);
    add_edge(net, c, d);
    return RuptureOutcome::applied;
}

SimulationTrace run_rupture(const RuptureConfig& cfg) {
    if (cfg.target_cells < 1 || cfg.num_ruptures < 0 || cfg.trace_stride < 1)
        throw ValidationError("invalid rupture config");
    int rows = 0, cols = 0;
    PlanarNetwork net = hexagonal_patch(cfg.target_cells, &rows, &cols);
    Rng rng(cfg.seed);

    SimulationTrace trace;
    trace.records.push_back(make_record(0, net));
    auto maybe_snapshot = [&]() {
        if (cfg.snapshot_dir.empty() || cfg.snapshot_stride < 1) return;
        if (static_cast<long long>(trace.records.size() - 1) % cfg.snapshot_stride != 0) return;
        write_network_json(net, cfg.snapshot_dir + "/snapshot_" +
                                    std::to_string(trace.records.back().step) + ".json");
    };
    maybe_snapshot();

    auto interior_edges = [&]() {
        std::map<std::pair<int, int>, int> count;
        for (const auto& f : net.faces) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                int s = f[i], t = f[(i + 1) % f.size()];
                if (s > t) std::swap(s, t);
                ++count[{s, t}];
            }
        }
        std::vector<std::pair<int, int>> out;
        for (const auto& [e, n] : count)
            if (n == 2) out.push_back(e);
        return out;
    };

    std::vector<std::pair<int, int>> candidates = interior_edges();
    long long accepted = 0, rejected = 0;
    const long long max_attempts = 10000 * std::max<long long>(1, cfg.num_ruptures);
    long long attempts = 0;
    bool interrupted = false;
    while (accepted < cfg.num_ruptures) {
        if (cfg.stop && cfg.stop->load()) {
            interrupted = true;
            break;
        }
        if (candidates.empty() || ++attempts > max_attempts)
            throw ValidationError("run_rupture: no applicable interior edge after " +
                                  std::to_string(accepted) + " ruptures");
        const auto [u, v] = candidates[uniform_index(rng, candidates.size())];
        if (rupture_move(net, u, v) != RuptureOutcome::applied) {
            ++rejected;
            continue;
        }
        ++accepted;
        candidates = interior_edges();
        if (accepted % cfg.trace_stride == 0 || accepted == cfg.num_ruptures) {
            trace.records.push_back(make_record(accepted, net));
            maybe_snapshot();
        }
    }

    nlohmann::json meta;
    meta["process"] = "rupture";
    meta["target_cells"] = cfg.target_cells;
    meta["patch_rows"] = rows;
    meta["patch_cols"] = cols;
    meta["num_ruptures"] = cfg.num_ruptures;
    meta["seed"] = cfg.seed;
    meta["trace_stride"] = cfg.trace_stride;
    meta["rng"] = kRngSpec;
    meta["rejected_draws"] = rejected;
    meta["interrupted"] = interrupted;
    if (interrupted && (trace.records.empty() || trace.records.back().step != accepted))
        trace.records.push_back(make_record(accepted, net));
    meta["notes"] = "steps count accepted ruptures; rejected draws do not advance the step counter";
    trace.metadata_json = meta.dump(2) + "\n";
    return trace;
}

}  // namespace turn
