#pragma once

#include <atomic>
#include <cstdint>

#include "turn/network.hpp"
#include "turn/sim_common.hpp"

namespace turn {

struct RuptureConfig {
    int target_cells = 1067;
    long long num_ruptures = 900;
    std::uint64_t seed = 1;
    long long trace_stride = 10;
    std::string snapshot_dir;       // empty = no snapshots
    long long snapshot_stride = 0;  // in records
    const std::atomic<bool>* stop = nullptr;  // cooperative interruption
};

// Unit-side hexagonal patch with exactly `target_cells` cells, filled
// column-major over a near-square grid (the last column may be partial).
PlanarNetwork hexagonal_patch(int target_cells, int* rows_out = nullptr,
                              int* cols_out = nullptr);

enum class RuptureOutcome {
    applied,
    rejected_boundary,
    rejected_not_trivalent,
    rejected_small_face,
    rejected_nonsimple,
};

// Remove interior edge (u,v) together with u, v and their edges; the two
// incident faces merge (sides i+j-4) via the straight chords joining u's and
// v's remaining neighbors, and the two flanking faces each lose one side.
// Vertex positions are frozen. Rejected if any resulting face would have
// fewer than 3 sides or the merged face would be non-simple.
RuptureOutcome rupture_move(PlanarNetwork& net, int u, int v);

SimulationTrace run_rupture(const RuptureConfig& config);

}  // namespace turn
