#pragma once

#include <string>
#include <vector>

#include "simplexforge/gauge.hpp"
#include "simplexforge/profile.hpp"

namespace simplexforge {

/// A body built as a tower of section-ratio profiles over the base segment
/// [-e1, e1]:  layer k makes the slice of the (k+2)-dimensional body at
/// height t along its top axis equal to r(|t|) times the inner body, centered
/// on the axis.  Every slice is therefore homothetic to the central one by
/// construction.  lp balls, doubled cones and prisms all fit this shape.
class LayeredBody {
  public:
    /// The base segment [-e1, e1] (dimension 1).
    static LayeredBody segment();

    /// lp unit ball of dimension n as a tower of lp profiles.
    static LayeredBody lp_ball(double p, int n);

    /// Adds one layer on top; the profile is validated first.
    LayeredBody extend(const Profile& profile) const;

    int dim() const { return static_cast<int>(layers_.size()) + 1; }

    /// The sub-tower spanned by the first k coordinates (1 <= k <= dim).
    LayeredBody prefix(int k) const;

    /// Profile of the top layer; the body must have dimension >= 2.
    const Profile& top_profile() const;

    const std::vector<Profile>& layers() const { return layers_; }

    /// Homothety ratio r(|t|) of the slice at height t along the top axis.
    double section_ratio(double t) const;

    /// Gauge of the assembled body (closed forms for lp/cone/prism layers,
    /// bisection for custom profiles).  Input must have matching dimension.
    double gauge_at(const Vector& x) const;

    /// GaugeBody view of the tower.
    GaugeBody gauge_view() const;

    std::string describe() const;

  private:
    std::vector<Profile> layers_;  // layers_[k] tops the (k+2)-dimensional prefix
};

/// Free-function forms mirroring the gauge_core vocabulary.
LayeredBody make_lp_ball(double p, int n);
LayeredBody extend_layer(const LayeredBody& inner, const Profile& profile);
double section_ratio(const LayeredBody& body, double t);
double layered_gauge(const LayeredBody& body, const Vector& x);

}  // namespace simplexforge
