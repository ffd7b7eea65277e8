#include "turn/regular.hpp"

#include <cmath>
#include <numeric>

namespace turn {

PolygonTrace trace_from_polygon(const Polygon& p) {
    return trace_from_turning_function(turning_function(normalize_polygon(p)));
}

PolygonTrace trace_from_turning_function(const TurningFunction& f) {
    if (!f.is_step())
        throw ValidationError("trace requires a polygonal (step) turning function");
    PolygonTrace tr;
    const auto& ps = f.pieces();
    tr.x.reserve(ps.size() + 1);
    tr.theta.reserve(ps.size() + 1);
    for (const auto& piece : ps) {
        tr.x.push_back(piece.start);
        tr.theta.push_back(piece.value);
    }
    tr.x.push_back(1.0);
    tr.theta.push_back(ps.front().value + 2.0 * M_PI);
    for (std::size_t i = 1; i < tr.x.size(); ++i)
        if (tr.x[i] <= tr.x[i - 1])
            throw ValidationError("trace cumulative perimeters must be increasing");
    return tr;
}

double d2_regular_sum(long long n, long long k) {
    if (n < 2 || k < 2) throw ValidationError("d2_regular_sum requires n, k >= 2");
    if (n == k) return 0.0;
    const double two_pi = 2.0 * M_PI;
    // Sweep merged jump positions {i/n} and {j/k}; compare i/n vs j/k exactly.
    double S = 0.0;
    long long i = 1, j = 1;  // next jump indices
    double prev = 0.0;
    while (i <= n || j <= k) {
        const __int128 lhs = static_cast<__int128>(i) * k;
        const __int128 rhs = static_cast<__int128>(j) * n;
        double next;
        if (lhs < rhs)
            next = static_cast<double>(i) / static_cast<double>(n);
        else
            next = static_cast<double>(j) / static_cast<double>(k);
        const double fn = two_pi * static_cast<double>(i - 1) / static_cast<double>(n);
        const double fk = two_pi * static_cast<double>(j - 1) / static_cast<double>(k);
        const double diff = fn - fk;
        S += (next - prev) * diff * diff;
        prev = next;
        if (lhs <= rhs) ++i;
        if (rhs <= lhs) ++j;
    }
    const double theta0 = M_PI * (1.0 / static_cast<double>(n) - 1.0 / static_cast<double>(k));
    return std::sqrt(std::max(0.0, S - theta0 * theta0));
}

std::string to_string(RegularFormula f) {
    switch (f) {
        case RegularFormula::equal: return "equal";
        case RegularFormula::multiple: return "multiple";
        case RegularFormula::consecutive: return "consecutive";
        case RegularFormula::sum: return "sum";
    }
    return "?";
}

namespace {

double multiple_formula(long long a, long long nmin) {
    const double ad = static_cast<double>(a);
    return M_PI / (ad * static_cast<double>(nmin)) * std::sqrt((ad * ad - 1.0) / 3.0);
}

double consecutive_formula(long long m) {
    const double md = static_cast<double>(m);
    const double D = (2.0 * md * md + 2.0 * md - 1.0) / (3.0 * md * md * (md + 1.0) * (md + 1.0));
    return M_PI * std::sqrt(D);
}

}  // namespace

ClosedFormResult d2_regular_closed(long long n, long long k) {
    if (n < 2 || k < 2) throw ValidationError("d2_regular_closed requires n, k >= 2");
    if (n == k) return {0.0, RegularFormula::equal};
    const long long lo = std::min(n, k), hi = std::max(n, k);
    if (hi % lo == 0) return {multiple_formula(hi / lo, lo), RegularFormula::multiple};
    const long long q = std::gcd(n, k);
    const long long rlo = lo / q, rhi = hi / q;
    if (rhi - rlo == 1)
        return {consecutive_formula(rlo) / static_cast<double>(q), RegularFormula::consecutive};
    return {d2_regular_sum(rlo, rhi) / static_cast<double>(q), RegularFormula::sum};
}

double d2_circle_polygon(const PolygonTrace& tr) {
    const std::size_t n = tr.x.size() - 1;
    if (n < 2 || tr.theta.size() != tr.x.size())
        throw ValidationError("trace needs n >= 2 sides and matching angle list");
    for (std::size_t i = 1; i <= n; ++i)
        if (tr.x[i] <= tr.x[i - 1])
            throw ValidationError("trace cumulative perimeters must be increasing");
    double cubic = 0.0, rot = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double th = tr.theta[i - 1] / M_PI;
        const double a = 2.0 * tr.x[i] - th;
        const double b = 2.0 * tr.x[i - 1] - th;
        cubic += a * a * a - b * b * b;
        rot += th * (tr.x[i] - tr.x[i - 1]);
    }
    const double D = cubic / 6.0 - (1.0 - rot) * (1.0 - rot);
    return M_PI * std::sqrt(std::max(0.0, D));
}

double d2_circle_regular(long long n) {
    if (n < 2) throw ValidationError("d2_circle_regular requires n >= 2");
    return std::sqrt(3.0) * M_PI / (3.0 * static_cast<double>(n));
}

double d2_segment_vs_regular(long long n) { return d2_regular_sum(2, n); }

double d2_segment_vs_circle() { return std::sqrt(3.0) * M_PI / 6.0; }

}  // namespace turn
