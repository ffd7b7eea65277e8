#include "turn/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace turn {

namespace {

constexpr double kEventTol = 1e-12;

double frac01(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;
    return f;
}

bool is_circle(const TurningFunction& f) {
    return f.piece_count() == 1 && f.pieces()[0].slope == 2.0 * M_PI;
}

// One affine segment of the shifted difference u(s) = f(s+t) - g(s) on [s0,s1).
struct Seg {
    double s0, s1;
    double c, m;  // u(s) = c + m*s
};

double slope_at(const TurningFunction& f, double s) {
    const auto& ps = f.pieces();
    std::size_t lo = 0, hi = ps.size();
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (ps[mid].start <= s)
            lo = mid;
        else
            hi = mid;
    }
    return ps[lo].slope;
}

std::vector<Seg> difference_segments(const TurningFunction& f, const TurningFunction& g,
                                     double t) {
    std::vector<double> cuts;
    cuts.reserve(f.piece_count() + g.piece_count() + 2);
    cuts.push_back(0.0);
    for (const auto& p : f.pieces()) cuts.push_back(frac01(p.start - t));
    for (const auto& p : g.pieces()) cuts.push_back(p.start);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return b - a < kEventTol; }),
               cuts.end());
    cuts.push_back(1.0);

    std::vector<Seg> segs;
    segs.reserve(cuts.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double s0 = cuts[i], s1 = cuts[i + 1];
        if (s1 - s0 <= 0.0) continue;
        const double sm = 0.5 * (s0 + s1);
        const double m = slope_at(f, frac01(sm + t)) - slope_at(g, sm);
        const double um = f.eval_extended(sm + t) - g.eval(sm);
        segs.push_back({s0, s1, um - m * sm, m});
    }
    return segs;
}

// Integral of |c + m*s + theta|^p over [s0,s1), exact for affine pieces.
double seg_lp(const Seg& s, double theta, double p) {
    const double u0 = s.c + theta + s.m * s.s0;
    const double u1 = s.c + theta + s.m * s.s1;
    if (s.m == 0.0) return std::pow(std::abs(u0), p) * (s.s1 - s.s0);
    auto G = [p](double u) {
        return std::copysign(std::pow(std::abs(u), p + 1.0) / (p + 1.0), u);
    };
    return (G(u1) - G(u0)) / s.m;
}

double lp_objective(const std::vector<Seg>& segs, double theta, double p) {
    double total = 0.0;
    for (const Seg& s : segs) total += seg_lp(s, theta, p);
    return total;
}

// Mean of u over [0,1).
double seg_mean(const std::vector<Seg>& segs) {
    double total = 0.0;
    for (const Seg& s : segs) {
        const double len = s.s1 - s.s0;
        total += (s.c + 0.5 * s.m * (s.s0 + s.s1)) * len;
    }
    return total;
}

double weighted_median_theta(const std::vector<Seg>& segs) {
    // Minimize sum w_i |theta - (-c_i)| over constant pieces.
    std::vector<std::pair<double, double>> xs;  // (-c, weight)
    xs.reserve(segs.size());
    double wtotal = 0.0;
    for (const Seg& s : segs) {
        xs.emplace_back(-s.c, s.s1 - s.s0);
        wtotal += s.s1 - s.s0;
    }
    std::sort(xs.begin(), xs.end());
    double acc = 0.0;
    for (const auto& [x, w] : xs) {
        acc += w;
        if (acc >= 0.5 * wtotal) return x;
    }
    return xs.back().first;
}

double golden_section_theta(const std::vector<Seg>& segs, double p) {
    double lo = segs[0].c, hi = segs[0].c;
    for (const Seg& s : segs) {
        lo = std::min(lo, s.c);
        hi = std::max(hi, s.c);
    }
    // Optimum of sum |c_i + theta|^p lies in [-max c, -min c].
    double a = -hi, b = -lo;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = lp_objective(segs, x1, p), f2 = lp_objective(segs, x2, p);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = lp_objective(segs, x1, p);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = lp_objective(segs, x2, p);
        }
    }
    return 0.5 * (a + b);
}

DistanceResult minimize_over_events(const TurningFunction& f, const TurningFunction& g,
                                    const std::vector<double>& events, double p) {
    DistanceResult best;
    best.p = p;
    double best_val = std::numeric_limits<double>::infinity();
    for (double t : events) {
        const auto segs = difference_segments(f, g, t);
        double theta;
        if (p == 2.0)
            theta = -seg_mean(segs);
        else if (p == 1.0)
            theta = weighted_median_theta(segs);
        else
            theta = golden_section_theta(segs, p);
        const double val = lp_objective(segs, theta, p);
        if (val < best_val - 0.0) {  // strict: ties keep the smallest t
            best_val = val;
            best.optimal_shift_t = t;
            best.optimal_rotation_theta = theta;
        }
    }
    best.distance = std::pow(std::max(0.0, best_val), 1.0 / p);
    return best;
}

}  // namespace

std::vector<double> critical_events(const TurningFunction& f, const TurningFunction& g) {
    std::vector<double> events;
    events.reserve(f.piece_count() * g.piece_count());
    for (const auto& pf : f.pieces())
        for (const auto& pg : g.pieces()) events.push_back(frac01(pf.start - pg.start));
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end(),
                             [](double a, double b) { return b - a < kEventTol; }),
                 events.end());
    return events;
}

double integral_at(const TurningFunction& f, const TurningFunction& g, double t,
                   double theta, double p) {
    if (p <= 0.0) throw ValidationError("integral_at requires p > 0");
    return lp_objective(difference_segments(f, g, t), theta, p);
}

double optimal_theta(const TurningFunction& f, const TurningFunction& g, double t) {
    return -seg_mean(difference_segments(f, g, t));
}

DistanceResult d2_turning(const TurningFunction& f, const TurningFunction& g) {
    if (is_circle(f) || is_circle(g)) {
        // Shifting the circle is a rotation, so t = 0 is optimal.
        const auto segs = difference_segments(f, g, 0.0);
        const double theta = -seg_mean(segs);
        DistanceResult r;
        r.p = 2.0;
        r.optimal_shift_t = 0.0;
        r.optimal_rotation_theta = theta;
        r.distance = std::sqrt(std::max(0.0, lp_objective(segs, theta, 2.0)));
        return r;
    }
    if (!f.is_step() || !g.is_step())
        throw ValidationError("d2_turning needs step functions (or one circle)");
    return minimize_over_events(f, g, critical_events(f, g), 2.0);
}

DistanceResult d2_general(const Polygon& a, const Polygon& b) {
    return d2_turning(turning_function(normalize_polygon(a)),
                      turning_function(normalize_polygon(b)));
}

DistanceResult dp_turning(const TurningFunction& f, const TurningFunction& g, double p) {
    if (p < 1.0)
        throw ValidationError("unsupported exponent p < 1 (Minkowski inequality fails)");
    if (p == 2.0) return d2_turning(f, g);
    if (!f.is_step() || !g.is_step())
        throw ValidationError("dp_turning needs step functions for p != 2");
    return minimize_over_events(f, g, critical_events(f, g), p);
}

DistanceResult dp_general(const Polygon& a, const Polygon& b, double p) {
    return dp_turning(turning_function(normalize_polygon(a)),
                      turning_function(normalize_polygon(b)), p);
}

DistanceResult d2_vs_regular(const TurningFunction& f, int k) {
    if (!f.is_step()) throw ValidationError("d2_vs_regular needs a step function");
    const TurningFunction fk = regular_turning_function(k);
    // f_k(s + j/k) = f_k(s) + 2*pi*j/k, so events are only needed mod 1/k.
    const double period = 1.0 / k;
    std::vector<double> events;
    events.reserve(f.piece_count());
    for (const auto& p : f.pieces()) {
        double t = std::fmod(p.start, period);
        if (t < 0.0) t += period;
        events.push_back(t);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end(),
                             [](double a, double b) { return b - a < kEventTol; }),
                 events.end());
    return minimize_over_events(f, fk, events, 2.0);
}

double d2_vs_circle(const TurningFunction& f) {
    return d2_turning(f, circle_turning_function()).distance;
}

}  // namespace turn
