#include "turn/sim_common.hpp"

#include <limits>
#include <sstream>

#include "turn/io.hpp"

namespace turn {

std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    if (n == 0) throw ValidationError("uniform_index over empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

TraceRecord make_record(long long step, const PlanarNetwork& net) {
    TraceRecord rec;
    rec.step = step;
    rec.disorders = disorder_report(net);
    rec.face_count = static_cast<long long>(net.faces.size());
    double mn = std::numeric_limits<double>::infinity(), mx = 0.0;
    for (std::size_t i = 0; i < net.faces.size(); ++i) {
        const double a = net.degenerate_sides(i) > 0 ? 0.0 : std::max(0.0, face_area(net, i));
        mn = std::min(mn, a);
        mx = std::max(mx, a);
    }
    rec.min_area = mn;
    rec.max_area = mx;
    return rec;
}

std::string trace_to_csv(const SimulationTrace& trace) {
    std::ostringstream out;
    out << "step,D,D_w,D6,D6_w,Dc,Dc_w,faces,min_area,max_area\n";
    for (const TraceRecord& r : trace.records) {
        const DisorderReport& d = r.disorders;
        out << r.step << ',' << format_double(d.D) << ',' << format_double(d.D_w) << ','
            << format_double(d.D6) << ',' << format_double(d.D6_w) << ','
            << format_double(d.Dc) << ',' << format_double(d.Dc_w) << ',' << r.face_count
            << ',' << format_double(r.min_area) << ',' << format_double(r.max_area) << '\n';
    }
    return out.str();
}

void write_trace(const SimulationTrace& trace, const std::string& csv_path,
                 const std::string& metadata_path) {
    write_file(csv_path, trace_to_csv(trace));
    if (!metadata_path.empty()) write_file(metadata_path, trace.metadata_json);
}

}  // namespace turn
