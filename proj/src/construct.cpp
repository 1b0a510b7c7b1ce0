#include "simplexforge/construct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexforge/errors.hpp"

namespace simplexforge {

namespace {

constexpr int kSweepGrid = 1024;
constexpr int kBisectionCap = 200;

GaugeBody segment_gauge() {
    GaugeBody g;
    g.dim = 1;
    g.descriptor = "seg";
    g.eval = [](const Vector& x) { return std::abs(x[0]); };
    return g;
}

Simplex base_segment_simplex() {
    return make_simplex(segment_gauge(), {Vector{-1.0}, Vector{1.0}});
}

/// Facet r * v_i + t e_n followed by the apex (0, ..., 0, apex_height).
std::vector<Vector> cone_vertices(const std::vector<Vector>& facet, double r, double t,
                                  double apex_height) {
    std::vector<Vector> verts;
    verts.reserve(facet.size() + 1);
    for (const Vector& v : facet) verts.push_back(lift(scale(v, r), t));
    verts.push_back(lift(zeros(dim_of(facet.front())), apex_height));
    return verts;
}

/// Bisects between a parameter where pred holds and one where it does not.
/// Returns the midpoint of the final bracket.
template <typename Pred>
double bisect_predicate(double at_true, double at_false, double tol, Pred pred) {
    int it = 0;
    while (std::abs(at_true - at_false) > tol) {
        if (++it > kBisectionCap) {
            throw IterationCapExceeded("bisection exceeded iteration cap");
        }
        const double mid = 0.5 * (at_true + at_false);
        if (pred(mid)) {
            at_true = mid;
        } else {
            at_false = mid;
        }
    }
    return 0.5 * (at_true + at_false);
}

struct LevelStep {
    Simplex simplex;
    LevelRecord record;
};

/// One induction step: from a facet inscribed in the central slice of body
/// (dimension level) to a simplex of full dimension `level` inscribed in it.
LevelStep level_step(const LayeredBody& body, const Simplex& facet, const Tolerance& tol,
                     int level) {
    const Profile& profile = body.top_profile();
    const double facet_diameter = facet.diameter;
    const double phi_top = profile(profile.t_max) * facet_diameter;

    LevelStep out;
    out.record.level = level;
    out.record.t0 = profile.t_max;
    out.record.facet_diameter_before = facet_diameter;

    if (phi_top <= 1.0) {
        const std::optional<double> t_star = find_t_star(facet_diameter, profile, tol);
        if (!t_star) {
            throw NumericalFailure("level " + std::to_string(level) +
                                   ": branch dichotomy disagreed with root scan");
        }
        SlideResult slide = case1_slide(body, facet, *t_star, tol, level);
        out.record.branch = Branch::Case1;
        out.record.t_star = *t_star;
        out.record.t_prime = slide.t_prime;
        out.record.apex_outside_margin = slide.apex_outside_margin;
        out.record.degenerate = slide.degenerate;
        out.simplex = std::move(slide.simplex);
    } else {
        GrowResult grow = case2_grow(body, facet, tol, level);
        out.record.branch = Branch::Case2;
        out.record.rho0 = grow.rho0;
        out.record.phase = grow.phase;
        out.record.parameter = grow.parameter;
        out.simplex = std::move(grow.simplex);
    }

    out.record.final_diameter = out.simplex.diameter;
    out.record.diameter_margin = out.simplex.diameter - 1.0;
    if (out.record.diameter_margin < tol.margin_tol) out.record.degenerate = true;
    return out;
}

}  // namespace

std::optional<double> find_t_star(double facet_diameter, const Profile& profile,
                                  const Tolerance& tol) {
    if (!(facet_diameter > 1.0)) {
        throw Error("find_t_star: facet diameter must exceed 1");
    }
    auto phi = [&](double t) { return profile(t) * facet_diameter; };
    if (phi(profile.t_max) > 1.0) return std::nullopt;

    // First grid point where phi drops to 1, then bisect for the smallest root.
    int hit = -1;
    double prev = 0.0;
    for (int k = 0; k <= kSweepGrid; ++k) {
        const double t = profile.t_max * static_cast<double>(k) / kSweepGrid;
        if (phi(t) <= 1.0) {
            hit = k;
            break;
        }
        prev = t;
    }
    if (hit <= 0) return std::nullopt;  // phi(0) <= 1 cannot happen given the pre
    const double at_true = profile.t_max * static_cast<double>(hit) / kSweepGrid;
    const double root = bisect_predicate(at_true, prev, tol.root_tol,
                                         [&](double t) { return phi(t) <= 1.0; });
    return root;
}

SlideResult case1_slide(const LayeredBody& body, const Simplex& facet_template,
                        double t_star, const Tolerance& tol, int level) {
    const Profile& profile = body.top_profile();
    const GaugeBody view = body.gauge_view();
    const double r_star = profile(t_star);
    if (!(r_star > 0.0)) {
        throw Error("case1_slide: section ratio vanishes at t*");
    }
    const Vector axis_zero = zeros(body.dim() - 1);

    auto ratio = [&](double t) { return profile(std::abs(t)) / r_star; };
    auto apex_height = [&](double t) { return t - ratio(t) * t_star; };
    auto apex_gauge_excess = [&](double t) {
        return view.eval(lift(axis_zero, apex_height(t))) - 1.0;
    };

    // Runtime stand-in for the 2-intersection hypothesis: the apex of the
    // t = -t* placement, which sits at depth 2 t*, must be outside the body.
    const double margin = apex_gauge_excess(-t_star);
    if (margin <= -tol.margin_tol) {
        throw PreconditionViolated(
            level, margin,
            "level " + std::to_string(level) + ": apex at depth 2t* = " +
                std::to_string(2.0 * t_star) + " lies inside the body (gauge excess " +
                std::to_string(margin) + ")");
    }

    SlideResult out;
    out.apex_outside_margin = margin;
    out.degenerate = margin < tol.margin_tol;

    // Sweep downward from t* (apex at the centre, strictly inside) looking
    // for the first grid point whose apex reaches the boundary.
    int hit = -1;
    double prev = t_star;
    for (int k = 1; k <= kSweepGrid; ++k) {
        const double t = t_star - 2.0 * t_star * static_cast<double>(k) / kSweepGrid;
        if (apex_gauge_excess(t) >= 0.0) {
            hit = k;
            break;
        }
        prev = t;
    }

    double t_prime = 0.0;
    if (hit >= 1) {
        const double at_true = t_star - 2.0 * t_star * static_cast<double>(hit) / kSweepGrid;
        t_prime = bisect_predicate(at_true, prev, tol.root_tol,
                                   [&](double t) { return apex_gauge_excess(t) >= 0.0; });
    } else {
        // No crossing: only admissible if the apex comes within verify_tol of
        // the boundary somewhere; take the admissible height of largest ratio.
        double best_ratio = -1.0;
        bool found = false;
        for (int k = 0; k <= kSweepGrid; ++k) {
            const double t = t_star - 2.0 * t_star * static_cast<double>(k) / kSweepGrid;
            if (apex_gauge_excess(t) >= -tol.verify_tol && ratio(t) > best_ratio) {
                best_ratio = ratio(t);
                t_prime = t;
                found = true;
            }
        }
        if (!found) {
            throw PreconditionViolated(
                level, margin,
                "level " + std::to_string(level) +
                    ": slide apex never reached the boundary (margin " +
                    std::to_string(margin) + ")");
        }
        out.degenerate = true;
    }

    out.t_prime = t_prime;
    out.simplex = make_simplex(
        view, cone_vertices(facet_template.vertices, profile(std::abs(t_prime)), t_prime,
                            apex_height(t_prime)));
    return out;
}

GrowResult case2_grow(const LayeredBody& body, const Simplex& central_facet,
                      const Tolerance& tol, int level) {
    const Profile& profile = body.top_profile();
    const GaugeBody view = body.gauge_view();
    const double t0 = profile.t_max;
    const double r0 = profile(t0);
    const double facet_diameter = central_facet.diameter;
    const double phi_top = r0 * facet_diameter;
    if (!(phi_top > 1.0)) {
        throw Error("case2_grow: top-slice facet diameter must exceed 1, got " +
                    std::to_string(phi_top));
    }
    const Vector axis_zero = zeros(body.dim() - 1);
    auto apex_gauge_excess = [&](double h) { return view.eval(lift(axis_zero, h)) - 1.0; };

    GrowResult out;
    out.rho0 = 1.0 / phi_top;

    // Phase 1: the facet grows inside the top slice while the apex descends
    // from the centre; scales run over [1, phi_top].
    auto phase1_excess = [&](double s) { return apex_gauge_excess((1.0 - s) * t0); };
    if (phase1_excess(phi_top) >= 0.0) {
        const double s = bisect_predicate(phi_top, 1.0, tol.root_tol,
                                          [&](double v) { return phase1_excess(v) >= 0.0; });
        out.phase = 1;
        out.parameter = s;
        out.simplex = make_simplex(
            view, cone_vertices(central_facet.vertices, s * out.rho0 * r0, t0, (1.0 - s) * t0));
        return out;
    }

    // Phase 2: the facet fills the whole slice and descends from t0 toward 0
    // while the apex keeps sinking; it must exit before t = 0.
    auto phi = [&](double t) { return profile(t) * facet_diameter; };
    auto phase2_excess = [&](double t) { return apex_gauge_excess(t - phi(t) * t0); };
    int hit = -1;
    double prev = t0;
    for (int k = 1; k <= kSweepGrid; ++k) {
        const double t = t0 * (1.0 - static_cast<double>(k) / kSweepGrid);
        if (phase2_excess(t) >= 0.0) {
            hit = k;
            break;
        }
        prev = t;
    }
    if (hit < 1) {
        throw NumericalFailure("level " + std::to_string(level) +
                               ": growth sweep found no boundary crossing before t = 0");
    }
    const double at_true = t0 * (1.0 - static_cast<double>(hit) / kSweepGrid);
    const double t = bisect_predicate(at_true, prev, tol.root_tol,
                                      [&](double v) { return phase2_excess(v) >= 0.0; });
    out.phase = 2;
    out.parameter = t;
    out.simplex = make_simplex(
        view, cone_vertices(central_facet.vertices, profile(t), t, t - phi(t) * t0));
    return out;
}

std::pair<Simplex, LevelRecord> planar_construct(const LayeredBody& body, const Tolerance& tol) {
    if (body.dim() != 2) throw Error("planar_construct: body must be two-dimensional");
    LevelStep step = level_step(body, base_segment_simplex(), tol, 2);
    return {std::move(step.simplex), std::move(step.record)};
}

ConstructionResult construct(const LayeredBody& body, const Tolerance& tol) {
    tol.validate();
    const int n = body.dim();
    if (n < 2) throw Error("construct: body dimension must be at least 2");
    for (const Profile& layer : body.layers()) {
        const PropertyReport report = validate_profile(layer, 65, tol.verify_tol);
        if (!report.passed()) {
            throw InvalidProfile("construct: invalid layer profile (" + report.witness + ")");
        }
    }

    ConstructionResult result;
    Simplex facet = base_segment_simplex();
    for (int level = 2; level <= n; ++level) {
        LevelStep step = level_step(body.prefix(level), facet, tol, level);
        result.trace.levels.push_back(step.record);
        result.trace.degenerate_margin =
            result.trace.degenerate_margin || step.record.degenerate;
        facet = std::move(step.simplex);
    }

    // Self-check of the advertised certificate before returning.
    const GaugeBody view = body.gauge_view();
    double mean = 0.0;
    int pairs = 0;
    for (int i = 0; i < facet.vertex_count(); ++i) {
        for (int j = i + 1; j < facet.vertex_count(); ++j) {
            mean += facet.dist[i][j];
            ++pairs;
        }
    }
    mean /= pairs;
    double eq_residual = 0.0;
    for (int i = 0; i < facet.vertex_count(); ++i) {
        for (int j = i + 1; j < facet.vertex_count(); ++j) {
            eq_residual = std::max(eq_residual, std::abs(facet.dist[i][j] - mean));
        }
    }
    double in_residual = 0.0;
    for (const Vector& v : facet.vertices) {
        in_residual = std::max(in_residual, std::abs(view.eval(v) - 1.0));
    }
    if (eq_residual > tol.verify_tol || in_residual > tol.verify_tol) {
        throw NumericalFailure("construct: certificate failed self-check (equilateral " +
                               std::to_string(eq_residual) + ", inscribed " +
                               std::to_string(in_residual) + ")");
    }
    if (!(facet.diameter > 1.0)) {
        throw NumericalFailure("construct: final diameter " + std::to_string(facet.diameter) +
                               " not above 1");
    }
    if (facet.diameter < 1.0 + tol.margin_tol) result.trace.degenerate_margin = true;

    result.trace.final_diameter = facet.diameter;
    result.simplex = std::move(facet);
    return result;
}

}  // namespace simplexforge
