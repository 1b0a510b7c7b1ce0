#include "simplexforge/pattern.hpp"

namespace simplexforge {

PatternResult pattern_minimize(const std::function<double(const Vector&)>& f,
                               Vector start, double step0, double step_min,
                               long max_evaluations) {
    PatternResult r;
    r.x = std::move(start);
    r.value = f(r.x);
    r.evaluations = 1;

    double step = step0;
    const std::size_t n = r.x.size();
    while (step >= step_min && r.evaluations < max_evaluations) {
        bool improved = false;
        for (std::size_t i = 0; i < n && r.evaluations < max_evaluations; ++i) {
            for (double sign : {+1.0, -1.0}) {
                const double saved = r.x[i];
                r.x[i] = saved + sign * step;
                const double v = f(r.x);
                ++r.evaluations;
                if (v < r.value) {
                    r.value = v;
                    improved = true;
                    break;  // keep the move, continue with the next coordinate
                }
                r.x[i] = saved;
            }
        }
        if (!improved) step *= 0.5;
    }
    r.converged = step < step_min;
    return r;
}

}  // namespace simplexforge
