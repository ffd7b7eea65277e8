#include "turn/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace turn {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

namespace {

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("malformed JSON");
    return j;
}

}  // namespace

PolygonFile parse_polygon_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ValidationError("polygon JSON needs a \"vertices\" array");
    PolygonFile out;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw ValidationError("polygon vertex must be [x, y]");
        out.polygon.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    if (out.polygon.size() >= 3 && signed_area(out.polygon) < 0.0) {
        std::reverse(out.polygon.vertices.begin(), out.polygon.vertices.end());
        out.reversed_from_clockwise = true;
    }
    validate_polygon(out.polygon);
    return out;
}

PolygonFile read_polygon_json(const std::string& path) {
    try {
        return parse_polygon_json(read_file(path));
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_polygon_json(const Polygon& p, const std::string& path) {
    json j;
    j["vertices"] = json::array();
    for (const Vec2& v : p.vertices) j["vertices"].push_back({v.x, v.y});
    write_file(path, j.dump(2) + "\n");
}

PlanarNetwork parse_network_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("network JSON needs \"vertices\" and \"edges\"");
    std::vector<Vec2> vertices;
    for (const auto& v : j["vertices"]) vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());

    if (!j.contains("faces")) return extract_faces(std::move(vertices), std::move(edges));

    PlanarNetwork net;
    net.vertices = std::move(vertices);
    net.edges = std::move(edges);
    for (auto& [a, b] : net.edges)
        if (a > b) std::swap(a, b);
    for (const auto& f : j["faces"]) {
        std::vector<int> cycle;
        for (const auto& v : f) cycle.push_back(v.get<int>());
        net.faces.push_back(std::move(cycle));
    }
    net.boundary.assign(net.vertices.size(), false);
    if (j.contains("boundary"))
        for (const auto& i : j["boundary"])
            net.boundary[i.get<std::size_t>()] = true;
    if (j.contains("degenerate_original_sides"))
        for (const auto& s : j["degenerate_original_sides"])
            net.degenerate_original_sides.push_back(s.get<int>());
    validate_network(net);
    return net;
}

PlanarNetwork read_network_json(const std::string& path) {
    try {
        return parse_network_json(read_file(path));
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string network_to_json(const PlanarNetwork& net) {
    json j;
    j["vertices"] = json::array();
    for (const Vec2& v : net.vertices) j["vertices"].push_back({v.x, v.y});
    j["edges"] = json::array();
    for (const auto& [a, b] : net.edges) j["edges"].push_back({a, b});
    j["faces"] = net.faces;
    j["boundary"] = json::array();
    for (std::size_t i = 0; i < net.boundary.size(); ++i)
        if (net.boundary[i]) j["boundary"].push_back(i);
    if (!net.degenerate_original_sides.empty())
        j["degenerate_original_sides"] = net.degenerate_original_sides;
    return j.dump(2) + "\n";
}

void write_network_json(const PlanarNetwork& net, const std::string& path) {
    write_file(path, network_to_json(net));
}

}  // namespace turn
