#pragma once

#include <string>
#include <utility>
#include <vector>

#include "simplexforge/report.hpp"

namespace simplexforge {

/// Section-ratio profile of one layer: r(t) is the homothety ratio of the
/// slice at height t relative to the central slice, on [0, t_max].
/// Required shape: r(0) = 1, continuous, non-increasing and concave
/// (concavity makes the assembled body convex).
struct Profile {
    enum class Kind { Lp, Cone, Prism, Custom };

    Kind kind = Kind::Prism;
    double p = 2.0;       ///< exponent for Kind::Lp
    double t_max = 1.0;
    std::vector<std::pair<double, double>> samples;  ///< Kind::Custom, sorted by t

    double operator()(double t) const;  ///< r(t) for t in [0, t_max]

    std::string describe() const;

    static Profile lp(double p);     ///< r(t) = (1 - t^p)^(1/p) on [0, 1]
    static Profile cone();           ///< r(t) = 1 - t on [0, 1]
    static Profile prism();          ///< r(t) = 1 on [0, 1]
    /// Piecewise-linear profile through the given (t, r) samples.
    static Profile custom(double t_max, std::vector<std::pair<double, double>> samples);
};

/// Grid check of the profile shape: r(0) = 1, monotone non-increase, and
/// midpoint concavity within verify_tol.  The report lists the worst
/// violation; invalid profiles yield verdict fail, never an exception.
PropertyReport validate_profile(const Profile& profile, int grid_size, double verify_tol = 1e-7);

/// Reads {"t_max": real, "samples": [[t, r], ...]} from a JSON file.
Profile load_profile_json(const std::string& path);

}  // namespace simplexforge
