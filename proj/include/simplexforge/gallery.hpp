#pragma once

#include <vector>

#include "simplexforge/construct.hpp"
#include "simplexforge/report.hpp"
#include "simplexforge/smoothed.hpp"

namespace simplexforge {

/// The doubled cone over the Euclidean disk together with its named
/// triangles, the equilateral tetrahedron they span, and smoothed variants.
struct RemarkInstances {
    LayeredBody body;       ///< cone over the lp(2) disk
    GaugeBody body_gauge;
    Simplex triangle;       ///< T: equatorial triangle of diameter sqrt(3)
    Simplex unit_triangle;  ///< T*: T/sqrt(3) raised to height (sqrt(3)-1)/sqrt(3)
    Simplex tetrahedron;    ///< S: cone of T* over the origin, unit edge
    std::vector<SmoothedBody> smoothed;  ///< body + eps * B2 per requested eps
};

RemarkInstances build_remark_instances(const std::vector<double>& eps_list);

/// Checks the closed-form facts of the doubled-cone family: T and T* are
/// equilateral and inscribed with diameters sqrt(3) and 1, S is equilateral
/// with unit edge but not inscribable, the apex-edge angle exceeds the cone
/// generator angle, and no near-unit dilatation of S inscribes in the body.
PropertyReport verify_remark(const RemarkInstances& instances, const Tolerance& tol);

struct ShrinkageRow {
    double eps = 0.0;
    double best_scale = 0.0;       ///< facet side of the largest inscribed copy
    Vector touching_vertex;        ///< lowest vertex of that copy
    double boundary_residual = 0.0;
};

struct ShrinkageResult {
    std::vector<ShrinkageRow> rows;
    PropertyReport report;  ///< monotone shrink + apex pinned at (0,0,-(1+eps))
};

/// For each eps, the largest tetrahedron shaped like S (horizontal
/// equilateral facet, apex below its centre) inscribed in body + eps * B2:
/// bisection on the scale with the facet at its lowest inscribed height,
/// confirmed by a multistart translation search.  The copies must shrink
/// with eps and touch the smoothed bottom apex.
ShrinkageResult smoothed_shrinkage(const RemarkInstances& instances, const Tolerance& tol,
                                   double vertex_tol = 1e-3);

}  // namespace simplexforge
