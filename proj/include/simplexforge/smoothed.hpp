#pragma once

#include <functional>
#include <string>

#include "simplexforge/gauge.hpp"

namespace simplexforge {

/// The outer parallel body core + epsilon * B2: membership(x) holds iff the
/// Euclidean distance from x to the core is at most epsilon.  The core is
/// supplied through an exact Euclidean distance oracle.
struct SmoothedBody {
    int dim = 0;
    std::string descriptor;
    double epsilon = 0.0;
    std::function<double(const Vector&)> dist_to_core;  ///< exact Euclidean distance
    double r_inner = 0.0;  ///< r_inner * B2 inside the smoothed body
    double r_outer = 0.0;  ///< smoothed body inside r_outer * B2

    GaugeBody gauge_view(double root_tol = 1e-10) const;
};

/// min{ lambda : dist2(x / lambda, core) <= epsilon }, by bisection.
double smoothed_gauge(const SmoothedBody& body, const Vector& x, double root_tol = 1e-10);

/// Smoothing of the doubled cone over the Euclidean disk,
/// conv((B2^2 x {0}) U {(0,0,+-1)}), which is rotationally symmetric; the
/// distance oracle projects onto the meridian triangle exactly.
SmoothedBody make_smoothed_doubled_cone(double epsilon);

}  // namespace simplexforge
