#include <cmath>

#include <doctest.h>

#include "simplexforge/errors.hpp"
#include "simplexforge/layered.hpp"
#include "simplexforge/smoothed.hpp"

using namespace simplexforge;

TEST_CASE("lp towers evaluate the lp norm") {
    CHECK(layered_gauge(make_lp_ball(2.0, 2), {1.0, 1.0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(layered_gauge(make_lp_ball(2.0, 3), {1.0, 2.0, 2.0}) == doctest::Approx(3.0));
    CHECK(layered_gauge(make_lp_ball(INFINITY, 3), {0.3, -1.0, 0.7}) == doctest::Approx(1.0));
    CHECK(make_lp_ball(1.0, 2).section_ratio(0.5) == doctest::Approx(0.5));
    CHECK_THROWS_AS(make_lp_ball(0.5, 2), Error);
}

TEST_CASE("lp tower gauge matches the direct formula on random points") {
    Rng rng(3);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const LayeredBody tower = make_lp_ball(p, 4);
        for (int trial = 0; trial < 100; ++trial) {
            Vector x(4);
            for (auto& c : x) c = rng.next_in(-1.5, 1.5);
            double direct = 0.0;
            for (double c : x) direct += std::pow(std::abs(c), p);
            direct = std::pow(direct, 1.0 / p);
            CHECK(layered_gauge(tower, x) == doctest::Approx(direct).epsilon(1e-10));
        }
    }
    const LayeredBody cube = make_lp_ball(INFINITY, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Vector x(4);
        double m = 0.0;
        for (auto& c : x) {
            c = rng.next_in(-1.5, 1.5);
            m = std::max(m, std::abs(c));
        }
        CHECK(layered_gauge(cube, x) == doctest::Approx(m).epsilon(1e-10));
    }
}

TEST_CASE("extend_layer builds cones and prisms") {
    // Doubled cone over the disk: gauge = euclidean(x, y) + |z|.
    const LayeredBody cone = extend_layer(make_lp_ball(2.0, 2), Profile::cone());
    CHECK(layered_gauge(cone, {0.25, 0.0, 0.5}) == doctest::Approx(0.75));
    CHECK(layered_gauge(cone, {0.0, 0.0, 1.0}) == doctest::Approx(1.0));

    // Prism over the segment: the unit square.
    const LayeredBody square = extend_layer(LayeredBody::segment(), Profile::prism());
    CHECK(layered_gauge(square, {0.5, 2.0}) == doctest::Approx(2.0));
    CHECK(layered_gauge(square, {1.0, 1.0}) == doctest::Approx(1.0));

    // Cone over the segment: the l1 diamond.
    const LayeredBody diamond = extend_layer(LayeredBody::segment(), Profile::cone());
    CHECK(layered_gauge(diamond, {0.5, 0.5}) == doctest::Approx(1.0));
    CHECK(layered_gauge(diamond, {-0.25, 0.25}) == doctest::Approx(0.5));
}

TEST_CASE("section_ratio") {
    const LayeredBody disk_layer = make_lp_ball(2.0, 2);
    CHECK(section_ratio(disk_layer, 0.5) == doctest::Approx(std::sqrt(0.75)));
    CHECK(section_ratio(disk_layer, -0.5) == doctest::Approx(std::sqrt(0.75)));
    const LayeredBody cone = extend_layer(make_lp_ball(2.0, 2), Profile::cone());
    CHECK(section_ratio(cone, 0.5) == doctest::Approx(0.5));
    CHECK(section_ratio(cone, 0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(section_ratio(cone, 1.5), Error);
}

TEST_CASE("validate_profile") {
    CHECK(validate_profile(Profile::cone(), 33).passed());
    CHECK(validate_profile(Profile::prism(), 33).passed());
    for (double p : {1.0, 1.5, 2.0, 3.0}) CHECK(validate_profile(Profile::lp(p), 65).passed());

    // Increasing ratios are rejected.
    std::vector<std::pair<double, double>> rising;
    for (int i = 0; i <= 8; ++i) rising.emplace_back(i / 8.0, 1.0 + i / 8.0);
    CHECK(validate_profile(Profile::custom(1.0, rising), 17).verdict == Verdict::Fail);

    // r(t) = (1 - sqrt(t))^2 is convex: the midpoint test at (0, 1) sees
    // r(1/2) = (1 - sqrt(1/2))^2 ~ 0.0858 below the chord value 0.5.
    std::vector<std::pair<double, double>> convex;
    for (int i = 0; i <= 64; ++i) {
        const double t = i / 64.0;
        convex.emplace_back(t, (1.0 - std::sqrt(t)) * (1.0 - std::sqrt(t)));
    }
    const PropertyReport r = validate_profile(Profile::custom(1.0, convex), 65);
    CHECK(r.verdict == Verdict::Fail);
    CHECK(r.worst_residual > 0.3);  // chord gap at the extreme pair is ~0.414
}

TEST_CASE("custom profile layers gauge by bisection") {
    // Piecewise-linear concave roof r(t) = 1 - t^2 sampled densely.
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i <= 128; ++i) {
        const double t = i / 128.0;
        samples.emplace_back(t, 1.0 - t * t);
    }
    const Profile roof = Profile::custom(1.0, samples);
    CHECK(validate_profile(roof, 65).passed());
    const LayeredBody body = extend_layer(make_lp_ball(2.0, 2), roof);

    // On-axis and in-plane points have closed-form gauges.
    CHECK(layered_gauge(body, {0.0, 0.0, 0.7}) == doctest::Approx(0.7).epsilon(1e-9));
    CHECK(layered_gauge(body, {0.3, -0.4, 0.0}) == doctest::Approx(0.5).epsilon(1e-9));
    // A boundary point: at height t the slice radius is r(t).
    const double t = 0.5;
    const double r = roof(t);
    CHECK(layered_gauge(body, {r, 0.0, t}) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("slices equal ratio-scaled inner bodies (intersection property)") {
    std::vector<LayeredBody> towers = {
        make_lp_ball(1.5, 3),
        extend_layer(make_lp_ball(2.0, 2), Profile::cone()),
        extend_layer(make_lp_ball(3.0, 2), Profile::prism()),
    };
    Rng rng(23);
    for (const LayeredBody& body : towers) {
        const LayeredBody inner = body.prefix(body.dim() - 1);
        const GaugeBody view = body.gauge_view();
        const GaugeBody inner_view = inner.gauge_view();
        for (double t : {0.0, 0.25, 0.6, 0.85}) {
            const double ratio = body.section_ratio(t);
            for (int trial = 0; trial < 16; ++trial) {
                Vector dir(inner.dim());
                for (auto& c : dir) c = rng.next_in(-1, 1);
                if (l2_norm(dir) < 1e-3) continue;
                // Boundary of the slice vs the scaled inner boundary.
                const Vector inner_bd = boundary_scale(inner_view, dir);
                const Vector slice_pt = lift(scale(inner_bd, ratio), t);
                CHECK(gauge(view, slice_pt) == doctest::Approx(1.0).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("smoothed doubled cone gauge") {
    const SmoothedBody body = make_smoothed_doubled_cone(0.1);
    CHECK(smoothed_gauge(body, {0.0, 0.0, 1.1}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(smoothed_gauge(body, {0.0, 0.0, -0.55}) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(smoothed_gauge(body, {1.1, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(smoothed_gauge(body, {1.0, 2.0}), DimensionMismatch);
}

TEST_CASE("smoothed gauge approaches the core gauge as eps shrinks") {
    const GaugeBody core = extend_layer(make_lp_ball(2.0, 2), Profile::cone()).gauge_view();
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Vector x = {rng.next_in(-1.5, 1.5), rng.next_in(-1.5, 1.5),
                          rng.next_in(-1.5, 1.5)};
        const double g_core = gauge(core, x);
        double prev_dev = 1e9;
        for (double eps : {0.2, 0.1, 0.05}) {
            const SmoothedBody smooth = make_smoothed_doubled_cone(eps);
            const double dev = std::abs(smoothed_gauge(smooth, x) - g_core);
            CHECK(dev <= prev_dev + 1e-9);
            prev_dev = dev;
        }
    }
}
