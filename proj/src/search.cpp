#include "simplexforge/search.hpp"

#include <algorithm>
#include <cmath>

#include "simplexforge/errors.hpp"

namespace simplexforge {

namespace {

struct Flat {
    std::vector<double> x;  // k points, n coords each, concatenated
    int k = 0;
    int n = 0;

    Vector point(int i) const {
        return Vector(x.begin() + static_cast<long>(i) * n,
                      x.begin() + static_cast<long>(i + 1) * n);
    }
};

struct Objective {
    const GaugeBody* body;
    int k;
    bool constrained;
    std::optional<double> target;

    double operator()(const Flat& f) const {
        std::vector<double> d;
        d.reserve(static_cast<std::size_t>(f.k) * (f.k - 1) / 2);
        for (int i = 0; i < f.k; ++i) {
            Vector pi = f.point(i);
            for (int j = i + 1; j < f.k; ++j) {
                d.push_back(body->eval(sub(pi, f.point(j))));
            }
        }
        double c;
        if (target) {
            c = *target;
        } else {
            c = 0.0;
            for (double v : d) c += v;
            c /= static_cast<double>(d.size());
        }
        double s = 0.0;
        for (double v : d) s += (v - c) * (v - c);
        if (constrained) {
            for (int i = 0; i < f.k; ++i) {
                const double g = body->eval(f.point(i)) - 1.0;
                s += g * g;
            }
        }
        return s;
    }
};

struct Evaluation {
    double common = 0.0;
    double residual = 0.0;
};

/// Residual recomputed from scratch: max pairwise deviation from the common
/// distance, plus the worst boundary deviation in constrained mode.
Evaluation evaluate(const GaugeBody& body, const Flat& f, bool constrained,
                    const std::optional<double>& target) {
    std::vector<double> d;
    for (int i = 0; i < f.k; ++i) {
        Vector pi = f.point(i);
        for (int j = i + 1; j < f.k; ++j) d.push_back(body.eval(sub(pi, f.point(j))));
    }
    Evaluation e;
    if (target) {
        e.common = *target;
    } else {
        for (double v : d) e.common += v;
        e.common /= static_cast<double>(d.size());
    }
    for (double v : d) e.residual = std::max(e.residual, std::abs(v - e.common));
    if (constrained) {
        double worst = 0.0;
        for (int i = 0; i < f.k; ++i) {
            worst = std::max(worst, std::abs(body.eval(f.point(i)) - 1.0));
        }
        e.residual += worst;
    }
    return e;
}

Flat random_start(const GaugeBody& body, int k, std::uint64_t seed, bool constrained) {
    Rng rng(seed);
    Flat f;
    f.k = k;
    f.n = body.dim;
    f.x.resize(static_cast<std::size_t>(k) * body.dim);
    for (int i = 0; i < k; ++i) {
        Vector p(body.dim);
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (int c = 0; c < body.dim; ++c) {
                p[c] = rng.next_in(-1.0, 1.0);
                norm2 += p[c] * p[c];
            }
        } while (norm2 < 1e-6);
        if (constrained) p = boundary_scale(body, p);
        for (int c = 0; c < body.dim; ++c) f.x[static_cast<long>(i) * body.dim + c] = p[c];
    }
    return f;
}

Flat descend(const Objective& obj, Flat f, int max_iters) {
    double value = obj(f);
    double step = 0.5;
    const std::size_t dof = f.x.size();
    for (int iter = 0; iter < max_iters && step >= 1e-12; ++iter) {
        bool improved = false;
        for (std::size_t i = 0; i < dof; ++i) {
            for (double sign : {+1.0, -1.0}) {
                const double saved = f.x[i];
                f.x[i] = saved + sign * step;
                const double v = obj(f);
                if (v < value) {
                    value = v;
                    improved = true;
                    break;
                }
                f.x[i] = saved;
            }
        }
        if (!improved) step *= 0.5;
    }
    return f;
}

}  // namespace

SearchResult search_equilateral(const GaugeBody& body, int k, const SearchOptions& opts) {
    if (k < 2) throw Error("search_equilateral: need k >= 2");
    if (opts.restarts < 1) throw Error("search_equilateral: restarts must be >= 1");
    if (!(opts.residual_tol > 0.0)) throw Error("search_equilateral: residual_tol must be > 0");

    const Objective obj{&body, k, opts.boundary_constrained, opts.target_distance};

    SearchResult best;
    bool best_floor_ok = false;
    for (int j = 0; j < opts.restarts; ++j) {
        Flat start;
        if (j == 0 && opts.warm_start) {
            const auto& warm = *opts.warm_start;
            if (static_cast<int>(warm.size()) != k) {
                throw Error("search_equilateral: warm start must supply k points");
            }
            start.k = k;
            start.n = body.dim;
            for (const Vector& p : warm) {
                if (dim_of(p) != body.dim) {
                    throw DimensionMismatch("search_equilateral: warm start dimension");
                }
                start.x.insert(start.x.end(), p.begin(), p.end());
            }
        } else {
            start = random_start(body, k, opts.seed + static_cast<std::uint64_t>(j),
                                 opts.boundary_constrained);
        }
        Flat sol = descend(obj, std::move(start), opts.max_iters);
        const Evaluation e = evaluate(body, sol, opts.boundary_constrained,
                                      opts.target_distance);
        const bool floor_ok = e.common >= opts.min_distance;
        const bool better = (floor_ok && !best_floor_ok) ||
                            (floor_ok == best_floor_ok &&
                             (best.restart_index < 0 || e.residual < best.residual));
        if (better) {
            best.points.clear();
            for (int i = 0; i < k; ++i) best.points.push_back(sol.point(i));
            best.common_distance = e.common;
            best.residual = e.residual;
            best.restart_index = j;
            best.objective = obj(sol);
            best_floor_ok = floor_ok;
        }
    }
    best.success = best_floor_ok && best.residual <= opts.residual_tol;
    return best;
}

LowerBoundResult lower_bound_e(const GaugeBody& body, int k_max, const SearchOptions& opts) {
    if (k_max < 2) throw Error("lower_bound_e: need k_max >= 2");
    LowerBoundResult out;
    for (int k = 2; k <= k_max; ++k) {
        SearchResult r = search_equilateral(body, k, opts);
        if (r.success) {
            out.bound = k;
            out.certificate = std::move(r);
        }
    }
    if (out.bound < 2) out.bound = 1;  // no successful certificate at all
    return out;
}

}  // namespace simplexforge
