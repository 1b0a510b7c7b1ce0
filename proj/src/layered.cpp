#include "simplexforge/layered.hpp"

#include <algorithm>
#include <cmath>

#include "simplexforge/errors.hpp"

namespace simplexforge {

namespace {

constexpr int kBisectionCap = 200;
constexpr int kValidationGrid = 65;

/// Gauge of one layer given the inner gauge value g and the top coordinate.
/// Solves min{ lambda : |top| <= lambda * t_max and g <= lambda * r(|top|/lambda) }.
double layer_gauge(const Profile& profile, double g, double top, double root_tol) {
    const double a = std::abs(top);
    switch (profile.kind) {
        case Profile::Kind::Lp: {
            const double p = profile.p;
            if (g == 0.0) return a;
            if (a == 0.0) return g;
            const double m = std::max(g, a);
            return m * std::pow(std::pow(g / m, p) + std::pow(a / m, p), 1.0 / p);
        }
        case Profile::Kind::Cone:
            return g + a;
        case Profile::Kind::Prism:
            return std::max(g, a);
        case Profile::Kind::Custom: {
            const double floor = a / profile.t_max;
            if (g == 0.0) return floor;
            if (a == 0.0) return g;
            // Concavity of r gives r(t) >= 1 - t/t_max, so g + floor is feasible.
            double lo = std::max(g, floor);
            double hi = g + floor;
            auto feasible = [&](double lambda) {
                return g <= lambda * profile(std::min(a / lambda, profile.t_max));
            };
            if (feasible(lo)) return lo;
            int it = 0;
            while (hi - lo > root_tol * std::max(1.0, lo)) {
                if (++it > kBisectionCap) {
                    throw IterationCapExceeded("layered gauge bisection exceeded cap");
                }
                const double mid = 0.5 * (lo + hi);
                if (feasible(mid)) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
    }
    return g;
}

}  // namespace

LayeredBody LayeredBody::segment() { return LayeredBody{}; }

LayeredBody LayeredBody::lp_ball(double p, int n) {
    if (!(p >= 1.0)) throw Error("lp_ball: p must be >= 1");
    if (n < 1) throw Error("lp_ball: dimension must be positive");
    LayeredBody body;
    for (int k = 1; k < n; ++k) body.layers_.push_back(Profile::lp(p));
    return body;
}

LayeredBody LayeredBody::extend(const Profile& profile) const {
    const PropertyReport report = validate_profile(profile, kValidationGrid);
    if (!report.passed()) {
        throw InvalidProfile("extend_layer: profile rejected (" + report.witness +
                             ", residual " + std::to_string(report.worst_residual) + ")");
    }
    LayeredBody body = *this;
    body.layers_.push_back(profile);
    return body;
}

LayeredBody LayeredBody::prefix(int k) const {
    if (k < 1 || k > dim()) throw Error("prefix: level out of range");
    LayeredBody body;
    body.layers_.assign(layers_.begin(), layers_.begin() + (k - 1));
    return body;
}

const Profile& LayeredBody::top_profile() const {
    if (layers_.empty()) throw Error("top_profile: the base segment has no layer");
    return layers_.back();
}

double LayeredBody::section_ratio(double t) const {
    const Profile& top = top_profile();
    const double a = std::abs(t);
    if (a > top.t_max * (1.0 + 1e-12)) {
        throw Error("section_ratio: |t| exceeds t_max");
    }
    return top(std::min(a, top.t_max));
}

double LayeredBody::gauge_at(const Vector& x) const {
    if (dim_of(x) != dim()) {
        throw DimensionMismatch("layered_gauge: expected dimension " + std::to_string(dim()));
    }
    if (!all_finite(x)) throw NonFiniteInput("layered_gauge: non-finite coordinate");
    double g = std::abs(x[0]);
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        g = layer_gauge(layers_[k], g, x[k + 1], 1e-12);
    }
    return g;
}

GaugeBody LayeredBody::gauge_view() const {
    GaugeBody view;
    view.dim = dim();
    view.descriptor = describe();
    view.eval = [body = *this](const Vector& x) { return body.gauge_at(x); };
    return view;
}

std::string LayeredBody::describe() const {
    std::string s = "seg";
    for (const Profile& layer : layers_) s = layer.describe() + "(" + s + ")";
    return s;
}

LayeredBody make_lp_ball(double p, int n) { return LayeredBody::lp_ball(p, n); }

LayeredBody extend_layer(const LayeredBody& inner, const Profile& profile) {
    return inner.extend(profile);
}

double section_ratio(const LayeredBody& body, double t) { return body.section_ratio(t); }

double layered_gauge(const LayeredBody& body, const Vector& x) { return body.gauge_at(x); }

}  // namespace simplexforge
