#include <atomic>
#include <cmath>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turn/archimedean.hpp"
#include "turn/distance.hpp"
#include "turn/io.hpp"
#include "turn/network.hpp"
#include "turn/regular.hpp"
#include "turn/sim_rupture.hpp"
#include "turn/sim_t1.hpp"
#include "turn/turning_function.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

std::atomic<bool> g_stop{false};
void on_sigint(int) { g_stop.store(true); }

std::string sig17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Every run that produces files records how to reproduce it bit-for-bit.
struct Manifest {
    json j;

    Manifest(const std::string& subcommand, const std::vector<std::string>& argv) {
        j["tool"] = "turning";
        j["version"] = kVersion;
        j["subcommand"] = subcommand;
        j["argv"] = argv;
        j["inputs"] = json::object();
        j["outputs"] = json::array();
        j["options"] = json::object();
    }
    void input(const std::string& path) {
        j["inputs"][path] = fnv1a64_hex(turn::read_file(path));
    }
    void output(const std::string& path) { j["outputs"].push_back(path); }
    template <class T>
    void option(const std::string& key, const T& value) {
        j["options"][key] = value;
    }
    // Default location: next to the first output file.
    void write(std::string path) {
        if (path.empty()) {
            if (j["outputs"].empty()) return;
            path = std::filesystem::path(j["outputs"][0].get<std::string>())
                       .replace_extension(".manifest.json")
                       .string();
        }
        turn::write_file(path, j.dump(2) + "\n");
    }
};

// ---------------------------------------------------------------- distance

void print_result(bool as_json, const json& fields) {
    if (as_json) {
        std::cout << fields.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : fields.items()) {
        if (v.is_number_float())
            std::cout << k << " = " << sig17(v.get<double>()) << "\n";
        else
            std::cout << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

void rect_sweep(const std::string& spec, const std::string& out_path, Manifest& manifest) {
    double a0 = 0, a1 = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    in >> a0 >> c1 >> a1 >> c2 >> step;
    if (!in || c1 != ':' || c2 != ':' || step <= 0.0 || a1 < a0 || a0 < 1.0)
        throw turn::ValidationError("--rect-sweep expects A0:A1:STEP with 1 <= A0 <= A1, STEP > 0");
    std::ostringstream csv;
    csv << "aspect,d_R4,d_R6,d_C\n";
    const long long count = static_cast<long long>(std::floor((a1 - a0) / step + 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) {
        const double a = a0 + static_cast<double>(i) * step;
        const turn::TurningFunction f = turn::turning_function(turn::rectangle(a));
        csv << sig17(a) << ',' << sig17(turn::d2_vs_regular(f, 4).distance) << ','
            << sig17(turn::d2_vs_regular(f, 6).distance) << ',' << sig17(turn::d2_vs_circle(f))
            << '\n';
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        turn::write_file(out_path, csv.str());
        manifest.output(out_path);
    }
}

int cmd_distance(const std::vector<std::string>& poly_paths_ab, const std::string& poly_path,
                 const std::vector<long long>& regulars, bool circle, bool segment, double p,
                 bool as_json, const std::string& sweep, const std::string& out_path,
                 const std::string& manifest_path, const std::vector<std::string>& argv) {
    Manifest manifest("distance", argv);
    if (!sweep.empty()) {
        rect_sweep(sweep, out_path, manifest);
        manifest.option("rect_sweep", sweep);
        manifest.write(manifest_path);
        return 0;
    }
    json out;
    out["p"] = p;
    if (regulars.size() == 2 && !circle && !segment) {
        if (p != 2.0) throw turn::ValidationError("closed forms are p = 2 only");
        const auto r = turn::d2_regular_closed(regulars[0], regulars[1]);
        out["distance"] = r.distance;
        out["formula"] = turn::to_string(r.formula);
        out["n"] = regulars[0];
        out["k"] = regulars[1];
    } else if (circle && regulars.size() == 1 && !segment) {
        out["distance"] = turn::d2_circle_regular(regulars[0]);
        out["formula"] = "circle-regular";
        out["n"] = regulars[0];
    } else if (circle && !poly_path.empty()) {
        manifest.input(poly_path);
        const turn::Polygon poly = turn::read_polygon_json(poly_path).polygon;
        out["distance"] = turn::d2_circle_polygon(turn::trace_from_polygon(poly));
        out["formula"] = "circle-polygon";
    } else if (segment && regulars.size() == 1) {
        out["distance"] = turn::d2_segment_vs_regular(regulars[0]);
        out["formula"] = "segment-regular";
        out["n"] = regulars[0];
    } else if (segment && circle) {
        out["distance"] = turn::d2_segment_vs_circle();
        out["formula"] = "segment-circle";
    } else if (poly_paths_ab.size() == 2) {
        manifest.input(poly_paths_ab[0]);
        manifest.input(poly_paths_ab[1]);
        const turn::Polygon a = turn::read_polygon_json(poly_paths_ab[0]).polygon;
        const turn::Polygon b = turn::read_polygon_json(poly_paths_ab[1]).polygon;
        const auto r = turn::dp_general(a, b, p);
        out["distance"] = r.distance;
        out["t"] = r.optimal_shift_t;
        out["theta"] = r.optimal_rotation_theta;
    } else {
        throw turn::ValidationError(
            "distance needs --poly-a/--poly-b, --regular N --regular K, --circle with "
            "--regular/--poly/--segment, or --segment --regular N");
    }
    print_result(as_json, out);
    manifest.write(manifest_path);
    return 0;
}

// ---------------------------------------------------------------- disorder

int cmd_disorder(const std::string& network_path, bool interior_only,
                 const std::string& per_face_path, bool as_json,
                 const std::string& manifest_path, const std::vector<std::string>& argv) {
    Manifest manifest("disorder", argv);
    manifest.input(network_path);
    const turn::PlanarNetwork net = turn::read_network_json(network_path);
    const turn::DisorderReport rep = turn::disorder_report(net, interior_only);
    json out;
    out["D"] = rep.D;
    out["D_w"] = rep.D_w;
    out["D6"] = rep.D6;
    out["D6_w"] = rep.D6_w;
    out["Dc"] = rep.Dc;
    out["Dc_w"] = rep.Dc_w;
    out["faces"] = rep.per_face.size();
    print_result(as_json, out);
    if (!per_face_path.empty()) {
        std::ostringstream csv;
        csv << "face,d_regular,d_hexagon,d_circle,area\n";
        for (std::size_t i = 0; i < rep.per_face.size(); ++i) {
            const auto& r = rep.per_face[i];
            csv << i << ',' << sig17(r[0]) << ',' << sig17(r[1]) << ',' << sig17(r[2]) << ','
                << sig17(r[3]) << '\n';
        }
        turn::write_file(per_face_path, csv.str());
        manifest.output(per_face_path);
    }
    manifest.write(manifest_path);
    return 0;
}

// ----------------------------------------------------------------- lattice

struct ExactEntry {
    const char* measure;
    const char* radical;
    double value;
};

std::vector<ExactEntry> exact_entries(const std::string& name) {
    using turn::OrderedShape;
    const auto region = turn::fundamental_region(name);
    const double d6u = turn::exact_disorder(region, OrderedShape::hexagon, false);
    const double d6w = turn::exact_disorder(region, OrderedShape::hexagon, true);
    const double dcu = turn::exact_disorder(region, OrderedShape::circle, false);
    const double dcw = turn::exact_disorder(region, OrderedShape::circle, true);
    if (name == "hex")
        return {{"D6", "0", d6u},
                {"D6_w", "0", d6w},
                {"Dc", "sqrt(3)*pi/18", dcu},
                {"Dc_w", "sqrt(3)*pi/18", dcw}};
    if (name == "4.8.8")
        return {{"D6", "pi*(2*sqrt(33) + sqrt(69))/144", d6u},
                {"D6_w", "(3 - 2*sqrt(2))*sqrt(33)*pi/36 + (2*sqrt(2) - 2)*sqrt(69)*pi/72", d6w},
                {"Dc", "sqrt(3)*pi/16", dcu},
                {"Dc_w", "(3 - 2*sqrt(2))*sqrt(3)*pi/12 + (2*sqrt(2) - 2)*sqrt(3)*pi/24", dcw}};
    if (name == "3.12.12")
        return {{"D6", "5*pi/36", d6u},
                {"D6_w", "(7 - 4*sqrt(3))*pi/6 + (4*sqrt(3) - 6)*pi/12", d6w},
                {"Dc", "(2/3)*sqrt(3)*pi/9 + (1/3)*sqrt(3)*pi/36", dcu},
                {"Dc_w", "(7 - 4*sqrt(3))*sqrt(3)*pi/9 + (4*sqrt(3) - 6)*sqrt(3)*pi/36", dcw}};
    if (name == "4.6.12")
        return {{"D6", "pi*(sqrt(33) + 1)/72", d6u},
                {"D6_w", "((2*sqrt(3) - 3)/3)*sqrt(33)*pi/36 + (sqrt(3)/3)*pi/12", d6w},
                {"Dc", "(1/2)*sqrt(3)*pi/12 + (1/3)*sqrt(3)*pi/18 + (1/6)*sqrt(3)*pi/36", dcu},
                {"Dc_w",
                 "((2*sqrt(3) - 3)/3)*sqrt(3)*pi/12 + (2 - sqrt(3))*sqrt(3)*pi/18 + "
                 "(sqrt(3)/3)*sqrt(3)*pi/36",
                 dcw}};
    throw turn::ValidationError("unknown lattice: " + name);
}

int cmd_lattice_exact(const std::string& name, bool as_json,
                      const std::vector<std::string>& argv,
                      const std::string& manifest_path) {
    json out;
    out["lattice"] = name;
    out["D"] = 0.0;
    out["D_w"] = 0.0;
    for (const auto& e : exact_entries(name)) {
        if (as_json) {
            out[e.measure] = e.value;
            out[std::string(e.measure) + "_radical"] = e.radical;
        } else {
            std::cout << e.measure << " = " << sig17(e.value) << "  [" << e.radical << "]\n";
        }
    }
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << "D = 0  [0]\nD_w = 0  [0]\n";
    Manifest manifest("lattice exact", argv);
    manifest.option("name", name);
    manifest.write(manifest_path);
    return 0;
}

int cmd_lattice_generate(const std::string& name, int size, const std::string& out_path,
                         const std::vector<std::string>& argv, const std::string& manifest_path) {
    const turn::PlanarNetwork net = turn::generate_lattice(name, size);
    turn::write_network_json(net, out_path);
    std::cerr << "wrote " << net.faces.size() << " faces, " << net.vertices.size()
              << " vertices to " << out_path << "\n";
    Manifest manifest("lattice generate", argv);
    manifest.option("name", name);
    manifest.option("size", size);
    manifest.output(out_path);
    manifest.write(manifest_path);
    return 0;
}

// ---------------------------------------------------------------- simulate

void write_sim_outputs(const turn::SimulationTrace& trace, const std::string& trace_path,
                       Manifest& manifest, const std::string& manifest_path) {
    const std::string meta_path =
        std::filesystem::path(trace_path).replace_extension(".meta.json").string();
    turn::write_trace(trace, trace_path, meta_path);
    manifest.output(trace_path);
    manifest.output(meta_path);
    manifest.write(manifest_path);
    std::cerr << "wrote " << trace.records.size() << " records to " << trace_path << "\n";
}

int cmd_simulate_t1(const turn::T1Config& cfg, const std::string& trace_path,
                    const std::vector<std::string>& argv, const std::string& manifest_path) {
    Manifest manifest("simulate t1", argv);
    manifest.option("cells", cfg.num_sites);
    manifest.option("moves", cfg.num_moves);
    manifest.option("seed", cfg.seed);
    manifest.option("stride", cfg.trace_stride);
    const turn::SimulationTrace trace = turn::run_t1(cfg);
    write_sim_outputs(trace, trace_path, manifest, manifest_path);
    return 0;
}

int cmd_simulate_rupture(const turn::RuptureConfig& cfg, const std::string& trace_path,
                         const std::vector<std::string>& argv,
                         const std::string& manifest_path) {
    Manifest manifest("simulate rupture", argv);
    manifest.option("cells", cfg.target_cells);
    manifest.option("ruptures", cfg.num_ruptures);
    manifest.option("seed", cfg.seed);
    manifest.option("stride", cfg.trace_stride);
    const turn::SimulationTrace trace = turn::run_rupture(cfg);
    write_sim_outputs(trace, trace_path, manifest, manifest_path);
    return 0;
}

// -------------------------------------------------------------------- plot

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Table read_csv(const std::string& path) {
    std::istringstream in(turn::read_file(path));
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw turn::ValidationError(path + ": empty file");
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream rs(line);
        std::vector<double> row;
        while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != t.header.size())
            throw turn::ValidationError(path + ": ragged CSV row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

int cmd_plot(const std::string& trace_path, const std::string& out_path,
             std::string columns_arg, const std::vector<std::string>& argv,
             const std::string& manifest_path) {
    const Table t = read_csv(trace_path);
    if (t.rows.empty()) throw turn::ValidationError(trace_path + ": trace has no data rows");
    if (columns_arg.empty()) columns_arg = "D,D_w,D6,D6_w,Dc,Dc_w";
    std::vector<std::string> names;
    {
        std::istringstream cs(columns_arg);
        std::string c;
        while (std::getline(cs, c, ',')) names.push_back(c);
    }
    const auto col_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            if (t.header[i] == name) return i;
        throw turn::ValidationError("column not in trace: " + name);
    };
    const std::size_t xcol = col_index(t.header.front() == "step" ? "step" : t.header.front());
    std::vector<std::size_t> cols;
    for (const auto& n : names) cols.push_back(col_index(n));

    double xmin = t.rows.front()[xcol], xmax = xmin, ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const auto& r : t.rows) {
        xmin = std::min(xmin, r[xcol]);
        xmax = std::max(xmax, r[xcol]);
        for (std::size_t c : cols) {
            if (first) ymin = ymax = r[c];
            first = false;
            ymin = std::min(ymin, r[c]);
            ymax = std::max(ymax, r[c]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    const double W = 800, H = 500, ml = 70, mr = 160, mt = 20, mb = 50;
    const auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    const auto Y = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };
    const char* palette[6] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n"
        << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << W - ml - mr
        << "\" height=\"" << H - mt - mb << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double fy = ymin + (ymax - ymin) * i / 5.0;
        char lbl[32];
        svg << "<line x1=\"" << X(fx) << "\" y1=\"" << H - mb << "\" x2=\"" << X(fx)
            << "\" y2=\"" << H - mb + 5 << "\" stroke=\"black\"/>\n";
        std::snprintf(lbl, sizeof lbl, "%.4g", fx);
        svg << "<text x=\"" << X(fx) << "\" y=\"" << H - mb + 18
            << "\" text-anchor=\"middle\">" << lbl << "</text>\n";
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << Y(fy) << "\" x2=\"" << ml << "\" y2=\""
            << Y(fy) << "\" stroke=\"black\"/>\n";
        std::snprintf(lbl, sizeof lbl, "%.4g", fy);
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << Y(fy) + 4
            << "\" text-anchor=\"end\">" << lbl << "</text>\n";
    }
    svg << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 10
        << "\" text-anchor=\"middle\">" << t.header[xcol] << "</text>\n";
    for (std::size_t s = 0; s < cols.size(); ++s) {
        svg << "<polyline fill=\"none\" stroke=\"" << palette[s % 6]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& r : t.rows) svg << X(r[xcol]) << ',' << Y(r[cols[s]]) << ' ';
        svg << "\"/>\n";
        const double ly = mt + 16 + 18 * static_cast<double>(s);
        svg << "<line x1=\"" << W - mr + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - mr + 36
            << "\" y2=\"" << ly - 4 << "\" stroke=\"" << palette[s % 6]
            << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << W - mr + 42 << "\" y=\"" << ly << "\">" << names[s]
            << "</text>\n";
    }
    svg << "</svg>\n";
    turn::write_file(out_path, svg.str());

    Manifest manifest("plot", argv);
    manifest.input(trace_path);
    manifest.option("columns", columns_arg);
    manifest.output(out_path);
    manifest.write(manifest_path);
    return 0;
}

int run_cli(const std::vector<std::string>& argv);

int cmd_rerun(const std::string& manifest_file) {
    const json m = json::parse(turn::read_file(manifest_file));
    if (!m.contains("argv")) throw turn::ValidationError(manifest_file + ": no argv recorded");
    std::vector<std::string> argv;
    for (const auto& a : m["argv"]) argv.push_back(a.get<std::string>());
    return run_cli(argv);
}

// ------------------------------------------------------------------ parser

int run_cli(const std::vector<std::string>& argv) {
    CLI::App app{"turning distances, network disorders and disorder-generating simulations"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // distance
    auto* dist = app.add_subcommand("distance", "p-turning distance between two shapes");
    std::string poly_path, sweep, out_path, manifest_path;
    std::vector<long long> regulars;
    bool circle = false, segment = false, as_json = false;
    double p = 2.0;
    std::string poly_a, poly_b;
    dist->add_option("--poly-a", poly_a, "polygon JSON file");
    dist->add_option("--poly-b", poly_b, "polygon JSON file");
    dist->add_option("--poly", poly_path, "polygon JSON file (with --circle)");
    dist->add_option("--regular", regulars, "regular n-gon (repeat for a pair)")
        ->expected(0, 2);
    dist->add_flag("--circle", circle, "compare against the circle");
    dist->add_flag("--segment", segment, "compare against the degenerate 2-gon");
    dist->add_option("--p", p, "L^p exponent (>= 1)")->default_val(2.0);
    dist->add_flag("--json", as_json, "machine-readable output");
    dist->add_option("--rect-sweep", sweep, "aspect-ratio sweep A0:A1:STEP -> CSV");
    dist->add_option("--out", out_path, "CSV output for --rect-sweep");
    dist->add_option("--manifest", manifest_path, "manifest path override");

    // disorder
    auto* dis = app.add_subcommand("disorder", "six turning disorders of a network");
    std::string network_path, per_face_path, dis_manifest;
    bool interior_only = false, dis_json = false;
    dis->add_option("--network", network_path, "network JSON file")->required();
    dis->add_flag("--interior-only", interior_only, "skip faces touching the boundary");
    dis->add_option("--per-face", per_face_path, "per-face CSV output");
    dis->add_flag("--json", dis_json, "machine-readable output");
    dis->add_option("--manifest", dis_manifest, "manifest path override");

    // lattice
    auto* lat = app.add_subcommand("lattice", "vertex-transitive lattice tools");
    lat->require_subcommand(1);
    auto* lat_gen = lat->add_subcommand("generate", "write a lattice patch as network JSON");
    std::string lat_name, lat_out, lat_manifest;
    int lat_size = 10;
    lat_gen->add_option("--name", lat_name, "hex | 4.8.8 | 3.12.12 | 4.6.12")->required();
    lat_gen->add_option("--size", lat_size, "half-width of the clipping square")->required();
    lat_gen->add_option("--out", lat_out, "output network JSON")->required();
    lat_gen->add_option("--manifest", lat_manifest, "manifest path override");
    auto* lat_exact = lat->add_subcommand("exact", "print lattice-limit disorders");
    std::string exact_name, exact_manifest;
    bool exact_json = false;
    lat_exact->add_option("--name", exact_name, "hex | 4.8.8 | 3.12.12 | 4.6.12")->required();
    lat_exact->add_flag("--json", exact_json, "machine-readable output");
    lat_exact->add_option("--manifest", exact_manifest, "manifest path override");

    // simulate
    auto* sim = app.add_subcommand("simulate", "disorder-generating network processes");
    sim->require_subcommand(1);
    auto* t1 = sim->add_subcommand("t1", "T1 moves with spring re-embedding");
    turn::T1Config t1cfg;
    std::string t1_trace, t1_manifest;
    t1->add_option("--cells", t1cfg.num_sites, "initial cell count")->default_val(1000);
    t1->add_option("--moves", t1cfg.num_moves, "accepted T1 moves")->default_val(3000);
    t1->add_option("--seed", t1cfg.seed, "RNG seed")->default_val(1);
    t1->add_option("--stride", t1cfg.trace_stride, "record every K accepted moves")
        ->default_val(10);
    t1->add_option("--merge-tol", t1cfg.merge_tolerance, "vertex merge tolerance")
        ->default_val(1e-6);
    t1->add_option("--snapshots", t1cfg.snapshot_dir, "snapshot directory");
    t1->add_option("--snapshot-stride", t1cfg.snapshot_stride, "snapshot every K records")
        ->default_val(1);
    t1->add_option("--trace", t1_trace, "trace CSV output")->required();
    t1->add_option("--manifest", t1_manifest, "manifest path override");
    auto* rup = sim->add_subcommand("rupture", "edge rupture on a frozen hexagonal patch");
    turn::RuptureConfig rcfg;
    std::string rup_trace, rup_manifest;
    rup->add_option("--cells", rcfg.target_cells, "initial cell count")->default_val(1067);
    rup->add_option("--ruptures", rcfg.num_ruptures, "accepted ruptures")->default_val(900);
    rup->add_option("--seed", rcfg.seed, "RNG seed")->default_val(1);
    rup->add_option("--stride", rcfg.trace_stride, "record every K accepted ruptures")
        ->default_val(10);
    rup->add_option("--snapshots", rcfg.snapshot_dir, "snapshot directory");
    rup->add_option("--snapshot-stride", rcfg.snapshot_stride, "snapshot every K records")
        ->default_val(1);
    rup->add_option("--trace", rup_trace, "trace CSV output")->required();
    rup->add_option("--manifest", rup_manifest, "manifest path override");

    // plot
    auto* plot = app.add_subcommand("plot", "trace CSV -> self-contained SVG");
    std::string plot_trace, plot_out, plot_cols, plot_manifest;
    plot->add_option("--trace", plot_trace, "trace CSV file")->required();
    plot->add_option("--out", plot_out, "SVG output")->required();
    plot->add_option("--columns", plot_cols, "comma-separated column names");
    plot->add_option("--manifest", plot_manifest, "manifest path override");

    // rerun
    auto* rerun = app.add_subcommand("rerun", "replay a recorded manifest");
    std::string rerun_manifest;
    rerun->add_option("manifest", rerun_manifest, "manifest JSON file")->required();

    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (dist->parsed()) {
        std::vector<std::string> ab;
        if (!poly_a.empty()) ab.push_back(poly_a);
        if (!poly_b.empty()) ab.push_back(poly_b);
        return cmd_distance(ab, poly_path, regulars, circle, segment, p, as_json, sweep,
                            out_path, manifest_path, argv);
    }
    if (dis->parsed())
        return cmd_disorder(network_path, interior_only, per_face_path, dis_json, dis_manifest,
                            argv);
    if (lat->parsed()) {
        if (lat_gen->parsed())
            return cmd_lattice_generate(lat_name, lat_size, lat_out, argv, lat_manifest);
        return cmd_lattice_exact(exact_name, exact_json, argv, exact_manifest);
    }
    if (sim->parsed()) {
        if (t1->parsed()) {
            t1cfg.stop = &g_stop;
            return cmd_simulate_t1(t1cfg, t1_trace, argv, t1_manifest);
        }
        rcfg.stop = &g_stop;
        return cmd_simulate_rupture(rcfg, rup_trace, argv, rup_manifest);
    }
    if (plot->parsed()) return cmd_plot(plot_trace, plot_out, plot_cols, argv, plot_manifest);
    if (rerun->parsed()) return cmd_rerun(rerun_manifest);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_sigint);
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run_cli(args);
    } catch (const turn::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
