#include "simplexforge/smoothed.hpp"

#include <algorithm>
#include <cmath>

#include "simplexforge/errors.hpp"

namespace simplexforge {

namespace {

constexpr int kBisectionCap = 200;

/// Euclidean distance in the (rho, z) half-plane from (rho0, z0), rho0 >= 0,
/// to the meridian triangle {rho >= 0, rho + |z| <= 1} of the doubled cone.
double meridian_cone_distance(double rho0, double z0) {
    const double za = std::abs(z0);
    if (rho0 + za <= 1.0) return 0.0;
    // Closest point lies on the generator segment [(1,0), (0,1)] or at one of
    // its endpoints (the mirrored generator never wins for z0 >= 0).
    const double dx = rho0 - 1.0;
    // Projection parameter along (1,0) -> (0,1): direction (-1,1)/sqrt(2).
    double u = (-dx + za) * 0.5;
    u = std::clamp(u, 0.0, 1.0);
    const double cx = 1.0 - u;
    const double cz = u;
    return std::hypot(rho0 - cx, za - cz);
}

}  // namespace

double smoothed_gauge(const SmoothedBody& body, const Vector& x, double root_tol) {
    if (dim_of(x) != body.dim) {
        throw DimensionMismatch("smoothed_gauge: expected dimension " + std::to_string(body.dim));
    }
    if (!all_finite(x)) throw NonFiniteInput("smoothed_gauge: non-finite coordinate");
    if (!body.dist_to_core) throw Error("smoothed_gauge: missing distance oracle");

    const double e2 = l2_norm(x);
    if (e2 == 0.0) return 0.0;
    double lo = e2 / body.r_outer;
    double hi = e2 / body.r_inner;
    auto member = [&](double lambda) {
        return body.dist_to_core(scale(x, 1.0 / lambda)) <= body.epsilon;
    };
    int it = 0;
    while (hi - lo > root_tol * std::max(1.0, lo)) {
        if (++it > kBisectionCap) {
            throw IterationCapExceeded("smoothed gauge bisection exceeded cap");
        }
        const double mid = 0.5 * (lo + hi);
        if (member(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

GaugeBody SmoothedBody::gauge_view(double root_tol) const {
    GaugeBody view;
    view.dim = dim;
    view.descriptor = descriptor;
    view.eval = [body = *this, root_tol](const Vector& x) {
        return smoothed_gauge(body, x, root_tol);
    };
    return view;
}

SmoothedBody make_smoothed_doubled_cone(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw Error("make_smoothed_doubled_cone: epsilon must lie in (0, 1)");
    }
    SmoothedBody body;
    body.dim = 3;
    body.descriptor = "smoothed:cone:lp:2:2:" + std::to_string(epsilon);
    body.epsilon = epsilon;
    body.dist_to_core = [](const Vector& x) {
        return meridian_cone_distance(std::hypot(x[0], x[1]), x[2]);
    };
    // The doubled cone contains the Euclidean ball of radius 1/sqrt(2).
    body.r_inner = 1.0 / std::sqrt(2.0) + epsilon;
    body.r_outer = 1.0 + epsilon;
    return body;
}

}  // namespace simplexforge
