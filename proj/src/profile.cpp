#include "simplexforge/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "simplexforge/errors.hpp"

namespace simplexforge {

double Profile::operator()(double t) const {
    if (t < 0.0 || t > t_max * (1.0 + 1e-12)) {
        throw Error("Profile: argument " + std::to_string(t) + " outside [0, " +
                    std::to_string(t_max) + "]");
    }
    t = std::min(t, t_max);
    switch (kind) {
        case Kind::Lp: {
            if (std::isinf(p)) return 1.0;
            const double u = 1.0 - std::pow(t, p);
            return u <= 0.0 ? 0.0 : std::pow(u, 1.0 / p);
        }
        case Kind::Cone:
            return 1.0 - t;
        case Kind::Prism:
            return 1.0;
        case Kind::Custom: {
            // Piecewise-linear interpolation; samples are sorted by t.
            auto it = std::lower_bound(samples.begin(), samples.end(), t,
                                       [](const auto& s, double v) { return s.first < v; });
            if (it == samples.begin()) return it->second;
            if (it == samples.end()) return samples.back().second;
            const auto& [t1, r1] = *it;
            const auto& [t0, r0] = *(it - 1);
            if (t1 == t0) return r1;
            const double w = (t - t0) / (t1 - t0);
            return r0 + w * (r1 - r0);
        }
    }
    return 1.0;
}

std::string Profile::describe() const {
    switch (kind) {
        case Kind::Lp:
            return std::isinf(p) ? "lp:inf" : "lp:" + std::to_string(p);
        case Kind::Cone: return "cone";
        case Kind::Prism: return "prism";
        case Kind::Custom: return "custom[" + std::to_string(samples.size()) + "]";
    }
    return "?";
}

Profile Profile::lp(double p) {
    if (!(p >= 1.0)) throw InvalidProfile("lp profile requires p >= 1");
    Profile pr;
    pr.kind = std::isinf(p) ? Kind::Prism : Kind::Lp;
    pr.p = p;
    pr.t_max = 1.0;
    return pr;
}

Profile Profile::cone() {
    Profile pr;
    pr.kind = Kind::Cone;
    pr.t_max = 1.0;
    return pr;
}

Profile Profile::prism() {
    Profile pr;
    pr.kind = Kind::Prism;
    pr.t_max = 1.0;
    return pr;
}

Profile Profile::custom(double t_max, std::vector<std::pair<double, double>> samples) {
    if (!(t_max > 0.0)) throw InvalidProfile("custom profile: t_max must be positive");
    if (samples.size() < 2) throw InvalidProfile("custom profile: need at least 2 samples");
    if (!std::is_sorted(samples.begin(), samples.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; })) {
        throw InvalidProfile("custom profile: samples not sorted by t");
    }
    for (const auto& [t, r] : samples) {
        if (!std::isfinite(t) || !std::isfinite(r)) {
            throw InvalidProfile("custom profile: non-finite sample");
        }
    }
    if (std::abs(samples.front().first) > 1e-12) {
        throw InvalidProfile("custom profile: first sample must sit at t = 0");
    }
    if (std::abs(samples.back().first - t_max) > 1e-12) {
        throw InvalidProfile("custom profile: last sample must sit at t = t_max");
    }
    Profile pr;
    pr.kind = Kind::Custom;
    pr.t_max = t_max;
    pr.samples = std::move(samples);
    return pr;
}

PropertyReport validate_profile(const Profile& profile, int grid_size, double verify_tol) {
    if (grid_size < 3) throw Error("validate_profile: grid_size must be >= 3");

    PropertyReport report;
    std::vector<double> ts(grid_size), rs(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        ts[i] = profile.t_max * static_cast<double>(i) / (grid_size - 1);
        rs[i] = profile(ts[i]);
    }

    {
        const double res = std::abs(rs[0] - 1.0);
        report.absorb({"r(0) = 1", res, res <= verify_tol ? Verdict::Pass : Verdict::Fail});
    }
    double worst_mono = 0.0;
    int worst_mono_at = 0;
    for (int i = 0; i + 1 < grid_size; ++i) {
        const double rise = rs[i + 1] - rs[i];
        if (rise > worst_mono) {
            worst_mono = rise;
            worst_mono_at = i;
        }
    }
    report.absorb({"non-increasing (worst rise at t=" + std::to_string(ts[worst_mono_at]) + ")",
                   worst_mono, worst_mono <= verify_tol ? Verdict::Pass : Verdict::Fail});

    // Midpoint concavity over all grid pairs: r((a+b)/2) >= (r(a)+r(b))/2.
    double worst_conc = 0.0;
    double worst_a = 0.0, worst_b = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        for (int j = i + 2; j < grid_size; ++j) {
            const double mid = 0.5 * (ts[i] + ts[j]);
            const double gap = 0.5 * (rs[i] + rs[j]) - profile(mid);
            if (gap > worst_conc) {
                worst_conc = gap;
                worst_a = ts[i];
                worst_b = ts[j];
            }
        }
    }
    report.absorb({"midpoint concavity (worst at a=" + std::to_string(worst_a) +
                       ", b=" + std::to_string(worst_b) + ")",
                   worst_conc, worst_conc <= verify_tol ? Verdict::Pass : Verdict::Fail});

    // Sanity: ratios stay within [0, 1].
    double range_res = 0.0;
    for (double r : rs) range_res = std::max(range_res, std::max(-r, r - 1.0));
    report.absorb({"range within [0, 1]", range_res,
                   range_res <= verify_tol ? Verdict::Pass : Verdict::Fail});

    return report;
}

Profile load_profile_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open profile file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidProfile("profile file " + path + ": " + e.what());
    }
    if (!j.contains("t_max") || !j.contains("samples")) {
        throw InvalidProfile("profile file " + path + ": needs t_max and samples");
    }
    std::vector<std::pair<double, double>> samples;
    for (const auto& s : j["samples"]) {
        if (!s.is_array() || s.size() != 2) {
            throw InvalidProfile("profile file " + path + ": samples must be [t, r] pairs");
        }
        samples.emplace_back(s[0].get<double>(), s[1].get<double>());
    }
    return Profile::custom(j["t_max"].get<double>(), std::move(samples));
}

}  // namespace simplexforge
