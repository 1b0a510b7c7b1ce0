#pragma once

#include <functional>
#include <string>
#include <utility>

#include "simplexforge/vec.hpp"

namespace simplexforge {

/// Numerical tolerances, passed explicitly everywhere; no hidden globals.
struct Tolerance {
    double root_tol = 1e-10;    ///< bisection convergence
    double verify_tol = 1e-7;   ///< certificate acceptance
    double margin_tol = 1e-6;   ///< strictness band for diameter > 1

    void validate() const;
};

/// An origin-symmetric convex body presented through its gauge (Minkowski
/// functional): gauge(x) = min{ lambda >= 0 : x in lambda * B }.  The gauge
/// equals the norm whose unit ball is the body.
struct GaugeBody {
    int dim = 0;
    std::string descriptor;
    std::function<double(const Vector&)> eval;  ///< assumes validated input
};

/// Gauge evaluation with eager input validation.
double gauge(const GaugeBody& body, const Vector& x);

/// Norm distance gauge(x - y) induced by the body.
double norm_dist(const GaugeBody& body, const Vector& x, const Vector& y);

/// Scales a nonzero direction onto the boundary: direction / gauge(direction).
Vector boundary_scale(const GaugeBody& body, const Vector& direction);

/// Maximum pairwise norm distance over a finite point set, with one
/// attaining pair.  A single point yields 0 with the degenerate pair (0, 0).
std::pair<double, std::pair<int, int>> diameter_finite(const GaugeBody& body,
                                                       const std::vector<Vector>& points);

/// Builds a gauge evaluator from a membership oracle by bisection on the
/// scale factor.  The rounding radii must satisfy
/// r_inner * B2 subset B subset R_outer * B2; they bracket the root.
GaugeBody make_membership_gauge(int dim, std::string descriptor,
                                std::function<bool(const Vector&)> member,
                                double r_inner, double R_outer,
                                double root_tol = 1e-10);

/// The slice {y : (y, height) in B} viewed as a body of dimension dim-1,
/// gauged from the axis point.  Valid for bodies whose sections are centered
/// on the last coordinate axis.
GaugeBody section_body(const GaugeBody& body, double height, double root_tol = 1e-10);

/// Some lp norms used as closed-form reference bodies.
GaugeBody make_lp_gauge(double p, int n);

}  // namespace simplexforge
