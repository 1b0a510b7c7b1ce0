#pragma once

#include <utility>
#include <vector>

#include "simplexforge/gauge.hpp"

namespace simplexforge {

/// Ordered vertex list with cached pairwise norm distances.
struct Simplex {
    std::vector<Vector> vertices;
    std::vector<std::vector<double>> dist;  ///< symmetric, zero diagonal
    double diameter = 0.0;
    std::pair<int, int> diameter_pair{0, 0};

    int point_dim() const { return vertices.empty() ? 0 : dim_of(vertices.front()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

/// Builds a simplex, caching distances under the body's norm.
Simplex make_simplex(const GaugeBody& body, std::vector<Vector> vertices);

/// True iff the vertices are affinely independent (Gram-rank test).
bool affinely_independent(const Simplex& s, double tol = 1e-10);

}  // namespace simplexforge
