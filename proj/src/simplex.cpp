#include "simplexforge/simplex.hpp"

#include "simplexforge/errors.hpp"

namespace simplexforge {

Simplex make_simplex(const GaugeBody& body, std::vector<Vector> vertices) {
    if (vertices.empty()) throw Error("make_simplex: no vertices");
    Simplex s;
    s.vertices = std::move(vertices);
    const int m = s.vertex_count();
    s.dist.assign(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double d = norm_dist(body, s.vertices[i], s.vertices[j]);
            s.dist[i][j] = s.dist[j][i] = d;
            if (d > s.diameter) {
                s.diameter = d;
                s.diameter_pair = {i, j};
            }
        }
    }
    return s;
}

bool affinely_independent(const Simplex& s, double tol) {
    return affine_rank(s.vertices, tol) == s.vertex_count() - 1;
}

}  // namespace simplexforge
