#pragma once

#include <functional>

#include "simplexforge/vec.hpp"

namespace simplexforge {

/// Compass (coordinate-poll) minimizer for convex or mildly nonsmooth
/// objectives: polls +-step along each coordinate in a fixed order, accepts
/// the first improvement, and halves the step after a full sweep without
/// one.  Deterministic.
struct PatternResult {
    Vector x;
    double value = 0.0;
    long evaluations = 0;
    bool converged = false;  ///< step shrank below step_min
};

PatternResult pattern_minimize(const std::function<double(const Vector&)>& f,
                               Vector start, double step0, double step_min,
                               long max_evaluations);

}  // namespace simplexforge
