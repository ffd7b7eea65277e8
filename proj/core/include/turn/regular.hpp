#pragma once

#include <string>
#include <vector>

#include "turn/geometry.hpp"
#include "turn/turning_function.hpp"

namespace turn {

// Cumulative perimeters x_0..x_n (x_0 = 0, x_n = 1) and corner turning
// angles theta_0..theta_n (theta_0 = 0, theta_n = 2*pi) of a unit-perimeter
// polygon traced from a corner.
struct PolygonTrace {
    std::vector<double> x;
    std::vector<double> theta;
};

PolygonTrace trace_from_polygon(const Polygon& p);
PolygonTrace trace_from_turning_function(const TurningFunction& f);

// Exact d2(R_n, R_k) by sweeping the merged sorted jump lists; O((n+k)log(n+k)).
double d2_regular_sum(long long n, long long k);

enum class RegularFormula { equal, multiple, consecutive, sum };
std::string to_string(RegularFormula f);

struct ClosedFormResult {
    double distance;
    RegularFormula formula;
};

// Closed-form dispatch: multiples -> gcd reduction -> consecutive-integer
// formula -> summation fallback. Always equals d2_regular_sum(n, k).
ClosedFormResult d2_regular_closed(long long n, long long k);

// d2(C, P) from the cumulative-perimeter trace (cubic-difference formula).
double d2_circle_polygon(const PolygonTrace& trace);

// d2(C, R_n) = sqrt(3)*pi/(3n).
double d2_circle_regular(long long n);

// Distances from the degenerate segment R_2.
double d2_segment_vs_regular(long long n);
double d2_segment_vs_circle();

}  // namespace turn
