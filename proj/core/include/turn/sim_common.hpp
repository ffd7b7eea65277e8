#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "turn/network.hpp"

namespace turn {

// All stochastic draws go through these helpers so traces are reproducible
// across platforms: std::mt19937_64 with fixed output mappings (the standard
// pins the generator's output sequence; the distributions are ours).
using Rng = std::mt19937_64;

inline constexpr const char* kRngSpec = "mt19937_64; index by multiply-shift rejection; double = (x >> 11) * 2^-53";

// Uniform index in [0, n) by rejection on the top bits.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

// Uniform double in [0, 1).
double uniform_unit(Rng& rng);

struct TraceRecord {
    long long step = 0;
    DisorderReport disorders;
    long long face_count = 0;
    double min_area = 0.0;
    double max_area = 0.0;
};

struct SimulationTrace {
    std::vector<TraceRecord> records;
    std::string metadata_json;  // config, RNG spec, notes
};

// CSV: step,D,D_w,D6,D6_w,Dc,Dc_w,faces,min_area,max_area
std::string trace_to_csv(const SimulationTrace& trace);
void write_trace(const SimulationTrace& trace, const std::string& csv_path,
                 const std::string& metadata_path);

TraceRecord make_record(long long step, const PlanarNetwork& net);

}  // namespace turn
