#pragma once

#include <vector>

#include "turn/geometry.hpp"

namespace turn {

// Cumulative tangent angle of a unit-perimeter closed curve as a function of
// arc length in [0,1), extended to the whole line by f(s +- 1) = f(s) +- 2*pi.
// Pieces are affine (slope 0 for polygons); the function is right continuous.
class TurningFunction {
public:
    struct Piece {
        double start;  // arc-length position in [0,1); first piece starts at 0
        double value;  // angle at the start of the piece (radians)
        double slope;  // d(angle)/d(arclength); 0 for polygon edges
    };

    TurningFunction() = default;
    explicit TurningFunction(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }

    bool is_step() const;  // all slopes zero (polygonal)

    // Value at s in [0,1); right continuous at breakpoints.
    double eval(double s) const;

    // Value at any real s via the 2*pi winding identity; the integer multiple
    // of 2*pi is applied once, with no accumulation.
    double eval_extended(double s) const;

    // Exact integral of the function over one period.
    double mean() const;

private:
    std::vector<Piece> pieces_;
};

// Turning function of a polygon: arc length normalized to the perimeter, the
// first piece's value is the angle of the first edge against the x-axis,
// corner jumps are the exterior angles in (-pi, pi).
TurningFunction turning_function(const Polygon& p);

// Step function of a regular n-gon: value 2*pi*i/n on [i/n, (i+1)/n).
// n = 2 gives the segment "2-gon" (0 on [0,1/2), pi on [1/2,1)).
TurningFunction regular_turning_function(int n);

// The circle: f(s) = 2*pi*s.
TurningFunction circle_turning_function();

// Piecewise-linear spiral with n windings: 4*pi*n*s on [0,1/2),
// 4*(1-n)*pi*s + (4n-3)*pi on [1/2,1). Requires n >= 2.
TurningFunction spiral_turning_function(int n);

}  // namespace turn
