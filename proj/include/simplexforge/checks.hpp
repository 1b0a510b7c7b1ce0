#pragma once

#include <vector>

#include "simplexforge/layered.hpp"
#include "simplexforge/report.hpp"
#include "simplexforge/simplex.hpp"

namespace simplexforge {

/// Pass iff every pairwise distance sits within tol of the mean distance.
/// The mean is reported as the report value.
PropertyReport verify_equilateral(const std::vector<Vector>& points, const GaugeBody& body,
                                  double tol);

/// Pass iff every point has gauge within tol of 1.
PropertyReport verify_inscribed(const std::vector<Vector>& points, const GaugeBody& body,
                                double tol);

/// Sampling grid for the homothetic-sections check.
struct SectionGrid {
    std::vector<double> offsets{0.3, 0.6, 0.9};  ///< fractions of the axis extent
    int directions = 64;
    std::uint64_t direction_seed = 0x5ec71045u;
};

/// Samples slices B cap (x + H_i) over the canonical chain H_i and compares
/// their direction-wise boundary scales, normalized by a reference direction,
/// against the central slice; pass iff all relative deviations stay within
/// tol.  Slices whose centre misses the body are skipped with a note.
PropertyReport check_intersection_property(const GaugeBody& body, const SectionGrid& grid,
                                           double tol);

/// Layered bodies carry the property exactly by construction.
PropertyReport check_intersection_property(const LayeredBody& body, const SectionGrid& grid,
                                           double tol);

/// Necessary-condition check over the construction's own unit-diameter facet
/// family: at each level taking the shrinking branch, the apex depth 2 t*
/// must clear the slab (gauge of the depth-2t* axis point above 1).  Strict
/// clearance passes, the tolerance band is degenerate, the rest fails.
/// Growth-branch levels are vacuous for this condition and recorded as such.
PropertyReport check_2_intersection(const LayeredBody& body, const Tolerance& tol);

}  // namespace simplexforge
