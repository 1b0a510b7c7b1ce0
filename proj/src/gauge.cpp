#include "simplexforge/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "simplexforge/errors.hpp"

namespace simplexforge {

namespace {

constexpr int kBisectionCap = 200;

void check_input(const GaugeBody& body, const Vector& x, const char* op) {
    if (dim_of(x) != body.dim) {
        throw DimensionMismatch(std::string(op) + ": expected dimension " +
                                std::to_string(body.dim) + ", got " +
                                std::to_string(dim_of(x)));
    }
    if (!all_finite(x)) {
        throw NonFiniteInput(std::string(op) + ": non-finite coordinate");
    }
}

}  // namespace

void Tolerance::validate() const {
    if (!(root_tol > 0.0) || !(verify_tol > 0.0) || !(margin_tol > 0.0)) {
        throw Error("Tolerance: all entries must be strictly positive");
    }
    if (root_tol > verify_tol) {
        throw Error("Tolerance: root_tol must not exceed verify_tol");
    }
}

double gauge(const GaugeBody& body, const Vector& x) {
    check_input(body, x, "gauge");
    return body.eval(x);
}

double norm_dist(const GaugeBody& body, const Vector& x, const Vector& y) {
    check_input(body, x, "norm_dist");
    check_input(body, y, "norm_dist");
    return body.eval(sub(x, y));
}

Vector boundary_scale(const GaugeBody& body, const Vector& direction) {
    check_input(body, direction, "boundary_scale");
    const double g = body.eval(direction);
    if (!(g > 0.0)) {
        throw Error("boundary_scale: zero direction");
    }
    return scale(direction, 1.0 / g);
}

std::pair<double, std::pair<int, int>> diameter_finite(const GaugeBody& body,
                                                       const std::vector<Vector>& points) {
    if (points.empty()) {
        throw Error("diameter_finite: empty point list");
    }
    for (const Vector& p : points) check_input(body, p, "diameter_finite");

    double best = 0.0;
    std::pair<int, int> pair{0, 0};
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d = body.eval(sub(points[i], points[j]));
            if (d > best) {
                best = d;
                pair = {static_cast<int>(i), static_cast<int>(j)};
            }
        }
    }
    return {best, pair};
}

GaugeBody make_membership_gauge(int dim, std::string descriptor,
                                std::function<bool(const Vector&)> member,
                                double r_inner, double R_outer, double root_tol) {
    if (!(r_inner > 0.0) || !(R_outer >= r_inner)) {
        throw Error("make_membership_gauge: invalid rounding radii");
    }
    GaugeBody body;
    body.dim = dim;
    body.descriptor = std::move(descriptor);
    body.eval = [member = std::move(member), r_inner, R_outer, root_tol](const Vector& x) {
        const double e2 = l2_norm(x);
        if (e2 == 0.0) return 0.0;
        double lo = e2 / R_outer;  // member at 1/lo scale: inside
        double hi = e2 / r_inner;  // outside or boundary
        // Membership of x/lambda is monotone in lambda; shrink the bracket.
        int it = 0;
        while (hi - lo > root_tol * std::max(1.0, lo)) {
            if (++it > kBisectionCap) {
                throw IterationCapExceeded("membership gauge bisection exceeded cap");
            }
            const double mid = 0.5 * (lo + hi);
            if (member(scale(x, 1.0 / mid))) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return 0.5 * (lo + hi);
    };
    return body;
}

GaugeBody section_body(const GaugeBody& body, double height, double root_tol) {
    GaugeBody sec;
    sec.dim = body.dim - 1;
    sec.descriptor = body.descriptor + "@" + std::to_string(height);
    sec.eval = [parent = body, height, root_tol](const Vector& y) {
        const double e2 = l2_norm(y);
        if (e2 == 0.0) return 0.0;
        // gauge within the slice: smallest lambda with (y/lambda, height) in B.
        auto inside = [&](double lambda) {
            return parent.eval(lift(scale(y, 1.0 / lambda), height)) <= 1.0;
        };
        double hi = 1.0;
        int it = 0;
        while (!inside(hi)) {
            hi *= 2.0;
            if (++it > 80) throw IterationCapExceeded("section gauge: no outer bracket");
        }
        double lo = hi;
        it = 0;
        while (inside(lo * 0.5)) {
            lo *= 0.5;
            if (++it > 120) return 0.0;  // ray never exits: degenerate direction
        }
        lo *= 0.5;
        it = 0;
        while (hi - lo > root_tol * std::max(1.0, lo)) {
            if (++it > kBisectionCap) {
                throw IterationCapExceeded("section gauge bisection exceeded cap");
            }
            const double mid = 0.5 * (lo + hi);
            if (inside(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return 0.5 * (lo + hi);
    };
    return sec;
}

GaugeBody make_lp_gauge(double p, int n) {
    if (!(p >= 1.0)) throw Error("make_lp_gauge: p must be >= 1");
    GaugeBody body;
    body.dim = n;
    const bool inf = std::isinf(p);
    body.descriptor = inf ? ("linf:" + std::to_string(n))
                          : ("lp:" + std::to_string(p) + ":" + std::to_string(n));
    if (inf) {
        body.eval = [](const Vector& x) {
            double m = 0.0;
            for (double v : x) m = std::max(m, std::abs(v));
            return m;
        };
    } else if (p == 2.0) {
        body.eval = [](const Vector& x) { return l2_norm(x); };
    } else if (p == 1.0) {
        body.eval = [](const Vector& x) {
            double s = 0.0;
            for (double v : x) s += std::abs(v);
            return s;
        };
    } else {
        body.eval = [p](const Vector& x) {
            double m = 0.0;
            for (double v : x) m = std::max(m, std::abs(v));
            if (m == 0.0) return 0.0;
            double s = 0.0;
            for (double v : x) s += std::pow(std::abs(v) / m, p);
            return m * std::pow(s, 1.0 / p);
        };
    }
    return body;
}

}  // namespace simplexforge
