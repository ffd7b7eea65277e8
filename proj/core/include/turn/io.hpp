#pragma once

#include <string>

#include "turn/geometry.hpp"
#include "turn/network.hpp"

namespace turn {

struct PolygonFile {
    Polygon polygon;
    bool reversed_from_clockwise = false;
};

// {"vertices": [[x,y], ...]}; clockwise input is auto-reversed and flagged.
PolygonFile read_polygon_json(const std::string& path);
PolygonFile parse_polygon_json(const std::string& text);
void write_polygon_json(const Polygon& p, const std::string& path);

// {"vertices": [...], "edges": [...], "faces": [...] (optional), "boundary": [...]}
PlanarNetwork read_network_json(const std::string& path);
PlanarNetwork parse_network_json(const std::string& text);
std::string network_to_json(const PlanarNetwork& net);
void write_network_json(const PlanarNetwork& net, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Shortest round-trip formatting for doubles (deterministic output files).
std::string format_double(double v);

}  // namespace turn
