#pragma once

#include <atomic>
#include <cstdint>

#include "turn/network.hpp"
#include "turn/sim_common.hpp"

namespace turn {

struct T1Config {
    int num_sites = 1000;
    long long num_moves = 3000;
    std::uint64_t seed = 1;
    double merge_tolerance = 1e-6;
    long long trace_stride = 10;
    std::string snapshot_dir;     // empty = no snapshots
    long long snapshot_stride = 0;  // in records
    const std::atomic<bool>* stop = nullptr;  // cooperative interruption
};

// Clipped Voronoi diagram of uniform-random sites on the unit square;
// boundary vertices flagged (pinned). Degenerate site sets are jittered by
// 1e-9 and retried (recorded in run metadata).
PlanarNetwork voronoi_init(int num_sites, std::uint64_t seed);

// Interior vertices moved to the mean of their graph neighbors (spring force
// balance with pinned boundary); topology unchanged. Throws when an interior
// component is disconnected from the boundary.
PlanarNetwork tutte_embed(const PlanarNetwork& net);

// Max-norm residual of the force-balance system (0 for a fresh embed).
double tutte_residual(const PlanarNetwork& net);

enum class T1Outcome {
    applied,
    rejected_boundary,
    rejected_not_trivalent,
    rejected_small_face,
    rejected_nonsimple,
};

// Rewire interior edge (u,v): its two side faces lose a side, the two faces
// meeting only u or only v gain one. Geometry untouched (re-embed separately).
T1Outcome t1_move(PlanarNetwork& net, int u, int v);

// Identify vertex pairs closer than tol; cascades until stable. Faces that
// collapse below 3 distinct points get their pre-merge side count recorded.
// Returns the number of merges performed.
int merge_close_vertices(PlanarNetwork& net, double tol);

SimulationTrace run_t1(const T1Config& config);

}  // namespace turn
