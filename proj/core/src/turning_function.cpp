#include "turn/turning_function.hpp"

#include <cmath>

namespace turn {

TurningFunction::TurningFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw ValidationError("turning function needs at least one piece");
    if (pieces_.front().start != 0.0)
        throw ValidationError("first turning-function piece must start at 0");
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i].start <= pieces_[i - 1].start)
            throw ValidationError("turning-function breakpoints must be strictly increasing");
    if (pieces_.back().start >= 1.0)
        throw ValidationError("turning-function breakpoints must lie in [0,1)");
}

bool TurningFunction::is_step() const {
    for (const Piece& p : pieces_)
        if (p.slope != 0.0) return false;
    return true;
}

double TurningFunction::eval(double s) const {
    // Last piece whose start is <= s.
    std::size_t lo = 0, hi = pieces_.size();
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (pieces_[mid].start <= s)
            lo = mid;
        else
            hi = mid;
    }
    const Piece& p = pieces_[lo];
    return p.value + p.slope * (s - p.start);
}

double TurningFunction::eval_extended(double s) const {
    const double k = std::floor(s);
    double frac = s - k;
    if (frac >= 1.0) frac = 0.0;  // guard against rounding at integers
    return eval(frac) + 2.0 * M_PI * k;
}

double TurningFunction::mean() const {
    double total = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        const double end = (i + 1 < pieces_.size()) ? pieces_[i + 1].start : 1.0;
        const double len = end - p.start;
        total += p.value * len + 0.5 * p.slope * len * len;
    }
    return total;
}

TurningFunction turning_function(const Polygon& poly) {
    validate_polygon(poly);
    const std::size_t n = poly.size();
    const double per = perimeter(poly);

    std::vector<TurningFunction::Piece> pieces;
    pieces.reserve(n);
    double arc = 0.0;
    double angle = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = poly.vertices[(i + 1) % n] - poly.vertices[i];
        if (i == 0) {
            angle = std::atan2(e.y, e.x);
        } else {
            const Vec2 prev = poly.vertices[i] - poly.vertices[i - 1];
            // Exterior turn at vertex i, in (-pi, pi); angles accumulate
            // unwrapped so nonconvex values can leave [0, 2*pi].
            angle += std::atan2(cross(prev, e), dot(prev, e));
        }
        pieces.push_back({arc, angle, 0.0});
        arc += norm(e) / per;
    }
    return TurningFunction(std::move(pieces));
}

TurningFunction regular_turning_function(int n) {
    if (n < 2) throw ValidationError("regular turning function needs n >= 2");
    std::vector<TurningFunction::Piece> pieces;
    pieces.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pieces.push_back({static_cast<double>(i) / n, 2.0 * M_PI * i / n, 0.0});
    return TurningFunction(std::move(pieces));
}

TurningFunction circle_turning_function() {
    return TurningFunction({{0.0, 0.0, 2.0 * M_PI}});
}

TurningFunction spiral_turning_function(int n) {
    if (n < 2) throw ValidationError("spiral turning function needs n >= 2");
    const double pi = M_PI;
    return TurningFunction({{0.0, 0.0, 4.0 * pi * n},
                            {0.5, (2.0 * n - 1.0) * pi, 4.0 * (1.0 - n) * pi}});
}

}  // namespace turn
