#pragma once

#include <vector>

#include "turn/geometry.hpp"
#include "turn/turning_function.hpp"

namespace turn {

struct DistanceResult {
    double distance = 0.0;
    double optimal_shift_t = 0.0;        // in [0,1)
    double optimal_rotation_theta = 0.0;  // radians
    double p = 2.0;
};

// Shifts t at which jumps of f(s+t) and g(s) can coincide: all pairwise
// breakpoint differences mod 1, sorted, de-duplicated within 1e-12.
std::vector<double> critical_events(const TurningFunction& f, const TurningFunction& g);

// Exact evaluation of the integral of |f(s+t) - g(s) + theta|^p over [0,1).
// Pieces of the shifted difference are affine, so the antiderivative
// sgn(u)|u|^{p+1}/(p+1) applies for any p > 0.
double integral_at(const TurningFunction& f, const TurningFunction& g, double t,
                   double theta, double p);

// Minimizer of the p=2 integrand over theta at shift t:
// -(integral of f(s+t) - g(s)).
double optimal_theta(const TurningFunction& f, const TurningFunction& g, double t);

// 2-turning distance between two turning functions. Both must be step
// functions, unless one of them is the circle (whose shift invariance lets t
// be fixed at 0). Ties between equal minima go to the smallest t.
DistanceResult d2_turning(const TurningFunction& f, const TurningFunction& g);

// 2-turning distance between general polygons via critical-event enumeration.
DistanceResult d2_general(const Polygon& a, const Polygon& b);

// p-turning distance (p >= 1) between polygons. The inner theta minimization
// is the weighted median for p = 1, closed form for p = 2 and golden-section
// search otherwise.
DistanceResult dp_general(const Polygon& a, const Polygon& b, double p);
DistanceResult dp_turning(const TurningFunction& f, const TurningFunction& g, double p);

// d2 between a step function and the regular k-gon, using the k-fold shift
// symmetry of f_k to cut the event set from m*k to m candidates.
DistanceResult d2_vs_regular(const TurningFunction& f, int k);

// d2 between any turning function and the circle (t = 0 suffices).
double d2_vs_circle(const TurningFunction& f);

}  // namespace turn
