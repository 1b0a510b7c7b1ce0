#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simplexforge/gauge.hpp"

namespace simplexforge {

struct SearchOptions {
    int restarts = 32;
    int max_iters = 5000;        ///< poll sweeps per restart
    std::uint64_t seed = 0;
    bool boundary_constrained = false;
    std::optional<double> target_distance;  ///< free when absent
    double residual_tol = 1e-8;
    double min_distance = 1e-3;  ///< coincident point sets never count as success
    std::optional<std::vector<Vector>> warm_start;  ///< initial config of restart 0
};

struct SearchResult {
    std::vector<Vector> points;
    double common_distance = 0.0;
    double residual = 0.0;  ///< max distance deviation (+ max |gauge-1| if constrained)
    bool success = false;
    int restart_index = -1;
    double objective = 0.0;
};

/// Derivative-free search for k pairwise-equidistant points in the body's
/// norm (optionally constrained to the boundary): coordinate polling with
/// step halving over restarts with deterministic per-restart seeds.
SearchResult search_equilateral(const GaugeBody& body, int k, const SearchOptions& opts);

/// Largest k <= k_max admitting a successful search; the certificate points
/// come along in the result.
struct LowerBoundResult {
    int bound = 1;
    SearchResult certificate;
};
LowerBoundResult lower_bound_e(const GaugeBody& body, int k_max, const SearchOptions& opts);

}  // namespace simplexforge
