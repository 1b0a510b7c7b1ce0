#include <algorithm>
#include <cmath>
#include <string>

#include "simplexforge/construct.hpp"
#include "simplexforge/errors.hpp"
#include "simplexforge/pattern.hpp"

namespace simplexforge {

namespace {

constexpr long kInnerEvalCap = 40000;
constexpr int kScanGrid = 256;

struct CenteredTemplate {
    std::vector<Vector> offsets;  // v_i - centroid
    double extent = 0.0;          // max Euclidean offset length
};

CenteredTemplate center_template(const Simplex& tmpl) {
    CenteredTemplate ct;
    const Vector c = centroid(tmpl.vertices);
    for (const Vector& v : tmpl.vertices) {
        Vector w = sub(v, c);
        ct.extent = std::max(ct.extent, l2_norm(w));
        ct.offsets.push_back(std::move(w));
    }
    if (!(ct.extent > 0.0)) throw Error("max_inscribed_homothet: degenerate template");
    return ct;
}

/// min over translations of the largest vertex gauge, warm-started.
double best_containment(const GaugeBody& body, const CenteredTemplate& ct, double s,
                        Vector& warm) {
    auto f = [&](const Vector& c) {
        double m = 0.0;
        for (const Vector& w : ct.offsets) m = std::max(m, body.eval(add(c, scale(w, s))));
        return m;
    };
    PatternResult r = pattern_minimize(f, warm, 0.25 * std::max(1.0, s * ct.extent), 1e-13,
                                       kInnerEvalCap);
    warm = r.x;
    return r.value;
}

/// min over translations of the worst boundary residual max_i |gauge - 1|.
double best_boundary_residual(const GaugeBody& body, const CenteredTemplate& ct, double s,
                              Vector& warm) {
    auto f = [&](const Vector& c) {
        double m = 0.0;
        for (const Vector& w : ct.offsets) {
            m = std::max(m, std::abs(body.eval(add(c, scale(w, s))) - 1.0));
        }
        return m;
    };
    PatternResult r = pattern_minimize(f, warm, 0.25 * std::max(1.0, s * ct.extent), 1e-13,
                                       kInnerEvalCap);
    warm = r.x;
    return r.value;
}

HomothetResult assemble(const GaugeBody& body, const CenteredTemplate& ct, double s,
                        Vector translation, bool inscribed_hint, double tol_ins) {
    HomothetResult out;
    out.scale = s;
    out.translation = std::move(translation);
    for (const Vector& w : ct.offsets) {
        Vector v = add(out.translation, scale(w, s));
        out.boundary_residual =
            std::max(out.boundary_residual, std::abs(body.eval(v) - 1.0));
        out.vertices.push_back(std::move(v));
    }
    out.inscribed = inscribed_hint && out.boundary_residual <= tol_ins;
    return out;
}

}  // namespace

HomothetResult max_inscribed_homothet(const GaugeBody& body, const Simplex& simplex_template,
                                      const Tolerance& tol) {
    if (simplex_template.point_dim() != body.dim) {
        throw DimensionMismatch("max_inscribed_homothet: template/body dimension mismatch");
    }
    const CenteredTemplate ct = center_template(simplex_template);
    const double tol_ins = tol.verify_tol;
    Vector warm = zeros(body.dim);

    // Stage 1: largest contained dilatation by bisection on the scale; the
    // feasibility predicate min_c max_i gauge(c + s w_i) <= 1 is monotone.
    double lo = 0.0;
    double hi = 1.0;
    Vector warm_lo = warm;
    if (best_containment(body, ct, hi, warm) <= 1.0) {
        lo = hi;
        warm_lo = warm;
        int it = 0;
        do {
            hi *= 2.0;
            if (++it > 60) throw Error("max_inscribed_homothet: template fits at any scale");
        } while (best_containment(body, ct, hi, warm) <= 1.0);
    } else {
        int it = 0;
        while (best_containment(body, ct, lo = hi * 0.5, warm) > 1.0) {
            hi = lo;
            if (++it > 80) {
                // Even vanishing dilatations stay infeasible: give up cleanly.
                return assemble(body, ct, 0.0, zeros(body.dim), false, tol_ins);
            }
        }
        warm_lo = warm;
    }
    int it = 0;
    while (hi - lo > tol.root_tol * std::max(1.0, hi)) {
        if (++it > 200) throw IterationCapExceeded("max_inscribed_homothet: outer bisection");
        const double mid = 0.5 * (lo + hi);
        if (best_containment(body, ct, mid, warm) <= 1.0) {
            lo = mid;
            warm_lo = warm;
        } else {
            warm = warm_lo;
            hi = mid;
        }
    }
    const double s_contain = lo;

    // Stage 2: at the containment optimum the largest vertex gauge is 1; if
    // every vertex can be driven onto the boundary there, that is the answer.
    Vector warm_b = warm_lo;
    const double r_top = best_boundary_residual(body, ct, s_contain, warm_b);
    if (r_top <= tol_ins) {
        return assemble(body, ct, s_contain, warm_b, true, tol_ins);
    }

    // Stage 3: scan smaller dilatations for an inscribed placement; keep the
    // best boundary certificate seen in case none qualifies.
    double best_scale = s_contain;
    Vector best_warm = warm_b;
    double best_res = r_top;
    Vector warm_scan = warm_b;
    for (int k = 1; k <= kScanGrid; ++k) {
        const double s = s_contain * (1.0 - static_cast<double>(k) / kScanGrid);
        if (!(s > 0.0)) break;
        const double res = best_boundary_residual(body, ct, s, warm_scan);
        if (res <= tol_ins) {
            // Refine the upper edge of the inscribed window.
            double s_in = s;
            double s_out = s_contain * (1.0 - static_cast<double>(k - 1) / kScanGrid);
            Vector warm_edge = warm_scan;
            int guard = 0;
            while (s_out - s_in > tol.root_tol * std::max(1.0, s_out)) {
                if (++guard > 200) break;
                const double mid = 0.5 * (s_in + s_out);
                Vector warm_mid = warm_edge;
                if (best_boundary_residual(body, ct, mid, warm_mid) <= tol_ins) {
                    s_in = mid;
                    warm_edge = warm_mid;
                } else {
                    s_out = mid;
                }
            }
            Vector warm_final = warm_edge;
            best_boundary_residual(body, ct, s_in, warm_final);
            return assemble(body, ct, s_in, warm_final, true, tol_ins);
        }
        if (res < best_res) {
            best_res = res;
            best_scale = s;
            best_warm = warm_scan;
        }
    }
    return assemble(body, ct, best_scale, best_warm, false, tol_ins);
}

Simplex remark_cone_step(const GaugeBody& body, const Simplex& facet, const Tolerance& tol) {
    const int n = body.dim;
    if (facet.point_dim() != n - 1) {
        throw DimensionMismatch("remark_cone_step: facet must live one dimension below");
    }
    if (!(facet.diameter > 1.0)) {
        throw Error("remark_cone_step: facet diameter must exceed 1");
    }

    Vector axis = zeros(n);
    axis[n - 1] = 1.0;
    const double axis_extent = 1.0 / body.eval(axis);

    // phi(t): diameter of the largest dilatation of the facet inscribed in the
    // slice at height t.  Scale factors are dimensionless, so the measuring
    // norm of the facet diameter carries over.
    auto dilatation = [&](double t) {
        return max_inscribed_homothet(section_body(body, t, tol.root_tol), facet, tol);
    };
    auto phi = [&](double t) { return dilatation(t).scale * facet.diameter; };

    constexpr int kGrid = 64;
    int hit = -1;
    double prev = 0.0;
    for (int k = 0; k < kGrid; ++k) {
        const double t = axis_extent * static_cast<double>(k) / kGrid;
        if (phi(t) <= 1.0) {
            hit = k;
            break;
        }
        prev = t;
    }
    if (hit <= 0) {
        throw ConeStepError(
            "remark_cone_step: slice dilatation never reached diameter 1 before the slice "
            "vanished (is the body strictly convex?)");
    }
    double at_true = axis_extent * static_cast<double>(hit) / kGrid;
    double at_false = prev;
    int guard = 0;
    while (at_false != at_true &&
           std::abs(at_true - at_false) > tol.root_tol * std::max(1.0, axis_extent)) {
        if (++guard > 200) throw IterationCapExceeded("remark_cone_step: height bisection");
        const double mid = 0.5 * (at_true + at_false);
        if (phi(mid) <= 1.0) {
            at_true = mid;
        } else {
            at_false = mid;
        }
    }
    const double t_star = 0.5 * (at_true + at_false);

    const HomothetResult placed = dilatation(t_star);
    if (!placed.inscribed) {
        throw ConeStepError(
            "remark_cone_step: unit-diameter dilatation is not boundary-touching at t* (residual " +
            std::to_string(placed.boundary_residual) + ")");
    }
    std::vector<Vector> verts;
    verts.reserve(placed.vertices.size() + 1);
    for (const Vector& v : placed.vertices) verts.push_back(lift(v, t_star));
    verts.push_back(zeros(n));
    Simplex cone = make_simplex(body, std::move(verts));

    double mean = 0.0;
    int pairs = 0;
    for (int i = 0; i < cone.vertex_count(); ++i) {
        for (int j = i + 1; j < cone.vertex_count(); ++j) {
            mean += cone.dist[i][j];
            ++pairs;
        }
    }
    mean /= pairs;
    double residual = 0.0;
    for (int i = 0; i < cone.vertex_count(); ++i) {
        for (int j = i + 1; j < cone.vertex_count(); ++j) {
            residual = std::max(residual, std::abs(cone.dist[i][j] - mean));
        }
    }
    if (residual > tol.verify_tol) {
        throw NumericalFailure("remark_cone_step: cone is not equilateral (residual " +
                               std::to_string(residual) + ")");
    }
    return cone;
}

}  // namespace simplexforge
