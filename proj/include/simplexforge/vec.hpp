#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace simplexforge {

/// Coordinates of a point; the dimension is the length.
using Vector = std::vector<double>;

inline int dim_of(const Vector& v) { return static_cast<int>(v.size()); }

bool all_finite(const Vector& v);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, double s);
double dot(const Vector& a, const Vector& b);
double l2_norm(const Vector& v);

/// Appends one coordinate, embedding R^{n-1} into R^n at the given height.
Vector lift(const Vector& v, double height);

/// Drops the last coordinate.
Vector drop_last(const Vector& v);

Vector zeros(int n);

/// Vertex centroid of a point list.
Vector centroid(const std::vector<Vector>& pts);

/// Rank of the set of edge vectors v_i - v_0 (Euclidean Gram elimination
/// with a relative pivot tolerance).  Points are affinely independent iff
/// the rank equals their count minus one.
int affine_rank(const std::vector<Vector>& pts, double tol = 1e-10);

/// Deterministic 64-bit generator (xorshift-star family) used wherever the
/// library needs reproducible pseudo-random streams.  Not for cryptography.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  private:
    std::uint64_t state_;
};

}  // namespace simplexforge
