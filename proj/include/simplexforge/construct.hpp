#pragma once

#include <optional>
#include <vector>

#include "simplexforge/layered.hpp"
#include "simplexforge/simplex.hpp"

namespace simplexforge {

enum class Branch { Case1, Case2 };

/// What happened at one level of the induction.
struct LevelRecord {
    int level = 0;                  ///< dimension reached at this step (2..n)
    Branch branch = Branch::Case1;
    std::optional<double> t_star;   ///< unit-diameter section height (case 1)
    std::optional<double> t_prime;  ///< slide root (case 1)
    std::optional<double> rho0;     ///< top-facet shrink factor (case 2)
    std::optional<int> phase;       ///< growth phase 1|2 (case 2)
    std::optional<double> parameter;  ///< scale s (phase 1) or height t (phase 2)
    double t0 = 0.0;                ///< top of the nonempty-section range
    double facet_diameter_before = 0.0;
    double final_diameter = 0.0;
    std::optional<double> apex_outside_margin;  ///< gauge(apex at -t*) - 1 (case 1)
    double diameter_margin = 0.0;   ///< final_diameter - 1
    bool degenerate = false;        ///< some margin fell inside the tolerance band
};

struct ConstructionTrace {
    std::vector<LevelRecord> levels;  ///< one per level, 2..n
    double final_diameter = 0.0;
    bool degenerate_margin = false;
};

struct ConstructionResult {
    Simplex simplex;
    ConstructionTrace trace;
};

/// Smallest root t* of r(t) * facet_diameter = 1 on [0, t_max], or nullopt
/// when the product stays above 1 everywhere (that signals the growth case).
/// Grid scan for the first sign change, then bisection.
std::optional<double> find_t_star(double facet_diameter, const Profile& profile,
                                  const Tolerance& tol);

struct SlideResult {
    Simplex simplex;
    double t_prime = 0.0;
    double apex_outside_margin = 0.0;
    bool degenerate = false;
};

/// Case 1: slides homothets of the unit simplex cone (facet inscribed in the
/// slice at height t, apex below on the axis) over t in [-t*, t*] until the
/// apex reaches the boundary.  Validates at runtime that the apex of the
/// t = -t* placement lies outside the body; throws PreconditionViolated with
/// the achieved margin when it does not.
SlideResult case1_slide(const LayeredBody& body, const Simplex& facet_template,
                        double t_star, const Tolerance& tol, int level);

struct GrowResult {
    Simplex simplex;
    int phase = 0;         ///< 1: facet fixed in the top slice, 2: facet descends
    double parameter = 0.0;  ///< scale s reached (phase 1) or height t (phase 2)
    double rho0 = 0.0;     ///< initial shrink of the top facet to diameter 1
};

/// Case 2: shrinks the top-slice facet to diameter one, cones it to the
/// origin, then grows homothetic copies (facet in the top slice first, facet
/// descending afterwards) until the apex reaches the boundary.
GrowResult case2_grow(const LayeredBody& body, const Simplex& central_facet,
                      const Tolerance& tol, int level);

/// Base case: equilateral triangle with diameter > 1 inscribed in a
/// two-dimensional layered body.
std::pair<Simplex, LevelRecord> planar_construct(const LayeredBody& body,
                                                 const Tolerance& tol);

/// Full inductive construction: an n-dimensional equilateral simplex with
/// diameter > 1 inscribed in the body, or PreconditionViolated at the level
/// whose hypothesis fails numerically.  Deterministic.
ConstructionResult construct(const LayeredBody& body, const Tolerance& tol = Tolerance{});

struct HomothetResult {
    double scale = 0.0;
    Vector translation;          ///< applied to scale * (v - centroid)
    std::vector<Vector> vertices;
    double boundary_residual = 0.0;  ///< max over vertices of |gauge - 1|
    bool inscribed = false;          ///< residual within tolerance
};

/// Largest dilatation of the template that can be placed inside the body with
/// every vertex on the boundary: outer bisection on the scale with an inner
/// pattern-search over translations (containment first, then the boundary
/// residual).  When no dilatation admits an inscribed placement, the best
/// boundary-residual certificate found is returned with inscribed = false.
HomothetResult max_inscribed_homothet(const GaugeBody& body, const Simplex& simplex_template,
                                      const Tolerance& tol);

/// Cone step for smooth strictly convex bodies: finds the height t* at which
/// the largest inscribed dilatation of the facet has diameter 1, and returns
/// the cone over the origin.  The smoothness/strict-convexity hypothesis is
/// asserted by the caller, not verified; the equilateral outcome is.
Simplex remark_cone_step(const GaugeBody& body, const Simplex& facet,
                         const Tolerance& tol);

}  // namespace simplexforge
