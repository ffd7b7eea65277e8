#pragma once

#include <map>
#include <string>

#include "turn/network.hpp"

namespace turn {

// Tile-count (q_k) and area-weighted (p_k) proportions per k-gon of one
// fundamental region of a vertex-transitive tiling.
struct FundamentalRegion {
    std::string lattice_name;
    std::map<int, double> q;  // side count -> count proportion
    std::map<int, double> p;  // side count -> area proportion
};

// Supported names: "hex", "4.8.8", "3.12.12", "4.6.12".
bool lattice_supported(const std::string& name);
std::vector<std::string> supported_lattices();

// Vertex-transitive tiling with unit side length clipped to the square
// [-half_width, half_width]^2; tiles crossing the boundary are dropped.
PlanarNetwork generate_lattice(const std::string& name, int half_width);

FundamentalRegion fundamental_region(const std::string& name);

// Lattice-limit disorder: sum of (q_k or p_k) * d2(R_k, shape) over the
// fundamental region. The regular family is identically zero.
double exact_disorder(const std::string& name, OrderedShape shape, bool weighted);
double exact_disorder(const FundamentalRegion& region, OrderedShape shape, bool weighted);

}  // namespace turn
