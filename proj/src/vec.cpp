#include "simplexforge/vec.hpp"

#include <algorithm>
#include <cstdlib>

namespace simplexforge {

bool all_finite(const Vector& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scale(const Vector& a, double s) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double l2_norm(const Vector& v) { return std::sqrt(dot(v, v)); }

Vector lift(const Vector& v, double height) {
    Vector r = v;
    r.push_back(height);
    return r;
}

Vector drop_last(const Vector& v) { return Vector(v.begin(), v.end() - 1); }

Vector zeros(int n) { return Vector(static_cast<std::size_t>(n), 0.0); }

Vector centroid(const std::vector<Vector>& pts) {
    Vector c = zeros(dim_of(pts.front()));
    for (const Vector& p : pts) c = add(c, p);
    return scale(c, 1.0 / static_cast<double>(pts.size()));
}

int affine_rank(const std::vector<Vector>& pts, double tol) {
    if (pts.size() < 2) return 0;
    const std::size_t k = pts.size() - 1;
    std::vector<Vector> edges;
    edges.reserve(k);
    for (std::size_t i = 1; i < pts.size(); ++i) edges.push_back(sub(pts[i], pts[0]));

    // Gram matrix elimination with full pivoting on the diagonal.
    std::vector<std::vector<double>> g(k, std::vector<double>(k));
    double max_diag = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(edges[i], edges[j]);
        max_diag = std::max(max_diag, g[i][i]);
    }
    if (max_diag <= 0.0) return 0;

    const double pivot_floor = tol * max_diag;
    int rank = 0;
    std::vector<bool> used(k, false);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t p = k;
        double best = pivot_floor;
        for (std::size_t i = 0; i < k; ++i) {
            if (!used[i] && g[i][i] > best) {
                best = g[i][i];
                p = i;
            }
        }
        if (p == k) break;
        used[p] = true;
        ++rank;
        for (std::size_t i = 0; i < k; ++i) {
            if (used[i]) continue;
            const double f = g[i][p] / g[p][p];
            for (std::size_t j = 0; j < k; ++j) g[i][j] -= f * g[p][j];
        }
    }
    return rank;
}

}  // namespace simplexforge
