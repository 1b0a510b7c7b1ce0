#include "simplexforge/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexforge/checks.hpp"
#include "simplexforge/errors.hpp"
#include "simplexforge/pattern.hpp"

namespace simplexforge {

namespace {

const double kSqrt3 = std::sqrt(3.0);

/// Unit-circumradius directions of the equatorial triangle, apex of the
/// triangle pointing along +e2.
const double kFacetDirs[3][2] = {
    {-kSqrt3 / 2.0, -0.5},
    {kSqrt3 / 2.0, -0.5},
    {0.0, 1.0},
};

/// Facet-to-apex height of the unit-edge tetrahedron family.
const double kApexDrop = (kSqrt3 - 1.0) / kSqrt3;

/// Radial extent of the smoothed body's slice at the given height.
double slice_radius(const SmoothedBody& body, double z, double root_tol) {
    auto inside = [&](double rho) {
        return body.dist_to_core(Vector{rho, 0.0, z}) <= body.epsilon;
    };
    if (!inside(0.0)) return -1.0;  // empty slice
    double lo = 0.0;
    double hi = body.r_outer + 1.0;
    int it = 0;
    while (hi - lo > root_tol) {
        if (++it > 200) throw IterationCapExceeded("slice_radius bisection");
        const double mid = 0.5 * (lo + hi);
        if (inside(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Lowest height whose slice radius reaches the requested value; the radius
/// grows monotonically from the bottom apex to the equator.
double lowest_slice_height(const SmoothedBody& body, double radius, double root_tol) {
    double lo = -(1.0 + body.epsilon);
    double hi = 0.0;
    int it = 0;
    while (hi - lo > root_tol) {
        if (++it > 200) throw IterationCapExceeded("lowest_slice_height bisection");
        const double mid = 0.5 * (lo + hi);
        if (slice_radius(body, mid, root_tol) >= radius) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<Vector> family_vertices(double side, double cx, double cy, double z_facet) {
    const double circ = side / kSqrt3;
    std::vector<Vector> verts;
    for (const auto& dir : kFacetDirs) {
        verts.push_back(Vector{cx + circ * dir[0], cy + circ * dir[1], z_facet});
    }
    verts.push_back(Vector{cx, cy, z_facet - side * kApexDrop});
    return verts;
}

double family_residual(const GaugeBody& view, double side, double cx, double cy,
                       double z_facet) {
    double worst = 0.0;
    for (const Vector& v : family_vertices(side, cx, cy, z_facet)) {
        worst = std::max(worst, std::abs(view.eval(v) - 1.0));
    }
    return worst;
}

/// Best boundary residual over translations at a fixed scale, multistart.
double multistart_residual(const GaugeBody& view, double side, double& cx, double& cy,
                           double& zf) {
    auto f = [&](const Vector& q) { return family_residual(view, side, q[0], q[1], q[2]); };
    double best = family_residual(view, side, cx, cy, zf);
    Vector best_q{cx, cy, zf};
    Rng rng(0x9a11e47u);
    for (int start = 0; start < 8; ++start) {
        Vector q0 = start == 0 ? best_q
                               : Vector{rng.next_in(-0.2, 0.2), rng.next_in(-0.2, 0.2),
                                        zf + rng.next_in(-0.1, 0.1)};
        PatternResult r = pattern_minimize(f, q0, 0.05, 1e-12, 20000);
        if (r.value < best) {
            best = r.value;
            best_q = r.x;
        }
    }
    cx = best_q[0];
    cy = best_q[1];
    zf = best_q[2];
    return best;
}

}  // namespace

RemarkInstances build_remark_instances(const std::vector<double>& eps_list) {
    for (double eps : eps_list) {
        if (!(eps > 0.0) || !(eps < 1.0)) {
            throw Error("build_remark_instances: eps values must lie in (0, 1)");
        }
    }
    RemarkInstances inst;
    inst.body = make_lp_ball(2.0, 2).extend(Profile::cone());
    inst.body_gauge = inst.body.gauge_view();

    std::vector<Vector> t_verts = {Vector{-kSqrt3 / 2.0, -0.5, 0.0},
                                   Vector{kSqrt3 / 2.0, -0.5, 0.0}, Vector{0.0, 1.0, 0.0}};
    inst.triangle = make_simplex(inst.body_gauge, t_verts);

    std::vector<Vector> star_verts;
    for (const Vector& v : t_verts) {
        star_verts.push_back(add(scale(v, 1.0 / kSqrt3), Vector{0.0, 0.0, kApexDrop}));
    }
    inst.unit_triangle = make_simplex(inst.body_gauge, star_verts);

    std::vector<Vector> s_verts = {zeros(3)};
    s_verts.insert(s_verts.end(), star_verts.begin(), star_verts.end());
    inst.tetrahedron = make_simplex(inst.body_gauge, s_verts);

    for (double eps : eps_list) inst.smoothed.push_back(make_smoothed_doubled_cone(eps));
    return inst;
}

PropertyReport verify_remark(const RemarkInstances& instances, const Tolerance& tol) {
    tol.validate();
    PropertyReport report;
    const GaugeBody& B = instances.body_gauge;

    auto record_simplex = [&](const char* name, const Simplex& s, double diameter) {
        const PropertyReport eq = verify_equilateral(s.vertices, B, tol.verify_tol);
        report.absorb({std::string(name) + " equilateral", eq.worst_residual, eq.verdict});
        const PropertyReport in = verify_inscribed(s.vertices, B, tol.verify_tol);
        report.absorb({std::string(name) + " inscribed", in.worst_residual, in.verdict});
        const double dres = std::abs(s.diameter - diameter);
        report.absorb({std::string(name) + " diameter", dres,
                       dres <= tol.verify_tol ? Verdict::Pass : Verdict::Fail});
    };
    record_simplex("T", instances.triangle, kSqrt3);
    record_simplex("T*", instances.unit_triangle, 1.0);

    {
        const PropertyReport eq =
            verify_equilateral(instances.tetrahedron.vertices, B, tol.verify_tol);
        report.absorb({"S equilateral", eq.worst_residual, eq.verdict});
        const double edge_res = eq.value ? std::abs(*eq.value - 1.0) : 1.0;
        report.absorb({"S unit edge", edge_res,
                       edge_res <= tol.verify_tol ? Verdict::Pass : Verdict::Fail});
        // S contains the origin as a vertex, so it cannot be inscribed.
        const PropertyReport in =
            verify_inscribed(instances.tetrahedron.vertices, B, tol.verify_tol);
        report.absorb({"S not inscribed (vertex at the centre)",
                       in.passed() ? 1.0 : 0.0,
                       in.passed() ? Verdict::Fail : Verdict::Pass});
    }

    {
        // Angle of the apex edges against the vertical axis, from coordinates.
        const Vector& v = instances.unit_triangle.vertices.front();
        const double run = std::hypot(v[0], v[1]);
        const double rise = v[2];
        const double edge_angle = std::atan2(run, rise);
        const double expected = std::atan(1.0 / (kSqrt3 - 1.0));
        const double generator_angle = std::atan2(1.0, 1.0);  // segment (1,0,0)-(0,0,1)
        report.absorb({"apex edge angle = arctan(1/(sqrt(3)-1))",
                       std::abs(edge_angle - expected),
                       std::abs(edge_angle - expected) <= 1e-12 ? Verdict::Pass
                                                                : Verdict::Fail});
        report.absorb({"generator angle = pi/4", std::abs(generator_angle - M_PI / 4.0),
                       std::abs(generator_angle - M_PI / 4.0) <= 1e-12 ? Verdict::Pass
                                                                       : Verdict::Fail});
        report.absorb({"edge angle exceeds generator angle",
                       generator_angle - edge_angle,
                       edge_angle > generator_angle ? Verdict::Pass : Verdict::Fail});
    }

    {
        const HomothetResult h = max_inscribed_homothet(B, instances.tetrahedron, tol);
        const bool ok = h.scale < 1.0 - 1e-3;
        report.absorb({"no near-unit dilatation of S inscribes (best scale " +
                           std::to_string(h.scale) + ")",
                       h.scale, ok ? Verdict::Pass : Verdict::Fail});
        report.value = h.scale;
    }
    return report;
}

ShrinkageResult smoothed_shrinkage(const RemarkInstances& instances, const Tolerance& tol,
                                   double vertex_tol) {
    tol.validate();
    if (instances.smoothed.empty()) {
        throw Error("smoothed_shrinkage: no smoothed bodies were built");
    }
    for (std::size_t i = 1; i < instances.smoothed.size(); ++i) {
        if (!(instances.smoothed[i].epsilon < instances.smoothed[i - 1].epsilon)) {
            throw Error("smoothed_shrinkage: eps list must be decreasing");
        }
    }

    ShrinkageResult out;
    for (const SmoothedBody& body : instances.smoothed) {
        const GaugeBody view = body.gauge_view(tol.root_tol);
        const double a_hi = kSqrt3 * (1.0 + body.epsilon);

        // Apex gauge with the facet at its lowest inscribed height; positive
        // excess near zero scale, negative once the copy outgrows the pocket.
        auto apex_excess = [&](double side) {
            const double zf = lowest_slice_height(body, side / kSqrt3, tol.root_tol);
            return view.eval(Vector{0.0, 0.0, zf - side * kApexDrop}) - 1.0;
        };

        constexpr int kGrid = 256;
        int hit = -1;
        double prev = a_hi;
        for (int k = 1; k <= kGrid; ++k) {
            const double a = a_hi * (1.0 - static_cast<double>(k) / kGrid);
            if (!(a > 0.0)) break;
            if (apex_excess(a) >= 0.0) {
                hit = k;
                break;
            }
            prev = a;
        }
        if (hit < 1) {
            out.report.absorb({"eps " + std::to_string(body.epsilon) +
                                   ": no inscribed copy found",
                               1.0, Verdict::Fail});
            continue;
        }
        double at_true = a_hi * (1.0 - static_cast<double>(hit) / kGrid);
        double at_false = prev;
        int guard = 0;
        while (at_false - at_true > tol.root_tol) {
            if (++guard > 200) throw IterationCapExceeded("shrinkage scale bisection");
            const double mid = 0.5 * (at_true + at_false);
            if (apex_excess(mid) >= 0.0) {
                at_true = mid;
            } else {
                at_false = mid;
            }
        }
        const double side = 0.5 * (at_true + at_false);

        // Polish the placement over translations and confirm that noticeably
        // larger copies admit no inscribed placement anywhere.
        double cx = 0.0, cy = 0.0;
        double zf = lowest_slice_height(body, side / kSqrt3, tol.root_tol);
        const double residual = multistart_residual(view, side, cx, cy, zf);
        for (double grow : {1.05, 1.2}) {
            double gx = cx, gy = cy, gz = zf;
            const double r_grown = multistart_residual(view, side * grow, gx, gy, gz);
            out.report.absorb({"eps " + std::to_string(body.epsilon) + ": copy at scale x" +
                                   std::to_string(grow) + " stays uninscribable",
                               r_grown,
                               r_grown > tol.verify_tol ? Verdict::Pass : Verdict::Fail});
        }

        ShrinkageRow row;
        row.eps = body.epsilon;
        row.best_scale = side;
        row.boundary_residual = residual;
        Vector lowest = family_vertices(side, cx, cy, zf).back();
        for (const Vector& v : family_vertices(side, cx, cy, zf)) {
            if (v[2] < lowest[2]) lowest = v;
        }
        row.touching_vertex = lowest;

        const Vector pole{0.0, 0.0, -(1.0 + body.epsilon)};
        const double pole_dist = l2_norm(sub(row.touching_vertex, pole));
        out.report.absorb({"eps " + std::to_string(body.epsilon) +
                               ": touching vertex at the smoothed bottom apex",
                           pole_dist,
                           pole_dist <= vertex_tol ? Verdict::Pass : Verdict::Fail});
        out.rows.push_back(std::move(row));
    }

    for (std::size_t i = 1; i < out.rows.size(); ++i) {
        const bool shrinks = out.rows[i].best_scale < out.rows[i - 1].best_scale;
        out.report.absorb({"scale shrinks from eps " + std::to_string(out.rows[i - 1].eps) +
                               " to eps " + std::to_string(out.rows[i].eps),
                           out.rows[i].best_scale - out.rows[i - 1].best_scale,
                           shrinks ? Verdict::Pass : Verdict::Fail});
    }
    return out;
}

}  // namespace simplexforge
