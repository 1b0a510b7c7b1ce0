#include <cmath>

#include <doctest.h>

#include "simplexforge/checks.hpp"
#include "simplexforge/construct.hpp"
#include "simplexforge/errors.hpp"

using namespace simplexforge;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const Tolerance kTol{};

Simplex segment_facet() {
    GaugeBody seg;
    seg.dim = 1;
    seg.descriptor = "seg";
    seg.eval = [](const Vector& x) { return std::abs(x[0]); };
    return make_simplex(seg, {Vector{-1.0}, Vector{1.0}});
}

/// The equilateral triangle the planar step inscribes in the unit disk:
/// chord at height 1/2, apex at the south pole.
Simplex disk_triangle() {
    return make_simplex(make_lp_gauge(2.0, 2),
                        {Vector{-kSqrt3 / 2.0, 0.5}, Vector{kSqrt3 / 2.0, 0.5},
                         Vector{0.0, -1.0}});
}

}  // namespace

TEST_CASE("find_t_star closed forms") {
    // Chord of norm-length 1 in the unit disk: 2 sqrt(1 - t^2) = 1.
    auto t1 = find_t_star(2.0, Profile::lp(2.0), kTol);
    REQUIRE(t1.has_value());
    CHECK(*t1 == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-9));

    // Sphere level with facet diameter sqrt(3): sqrt(3) sqrt(1 - t^2) = 1.
    auto t2 = find_t_star(kSqrt3, Profile::lp(2.0), kTol);
    REQUIRE(t2.has_value());
    CHECK(*t2 == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-9));

    // Cone profile with facet diameter sqrt(3): sqrt(3) (1 - t) = 1.
    auto t3 = find_t_star(kSqrt3, Profile::cone(), kTol);
    REQUIRE(t3.has_value());
    CHECK(*t3 == doctest::Approx((kSqrt3 - 1.0) / kSqrt3).epsilon(1e-9));

    // Prism profiles never drop to 1: the growth branch.
    CHECK_FALSE(find_t_star(2.0, Profile::prism(), kTol).has_value());

    CHECK_THROWS_AS(find_t_star(0.9, Profile::lp(2.0), kTol), Error);
}

TEST_CASE("case1_slide on the disk: t' = 1/2") {
    const LayeredBody disk = make_lp_ball(2.0, 2);
    const double t_star = kSqrt3 / 2.0;
    const SlideResult res = case1_slide(disk, segment_facet(), t_star, kTol, 2);
    // Root of the apex-boundary equation 4t^2 + 2t - 2 = 0 inside (-t*, t*).
    CHECK(res.t_prime == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(res.simplex.diameter == doctest::Approx(kSqrt3).epsilon(1e-8));
    CHECK_FALSE(res.degenerate);
    // Apex lands at the south pole.
    CHECK(res.simplex.vertices.back()[1] == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("case1_slide on the ball level: t' = 1/3") {
    const LayeredBody ball = make_lp_ball(2.0, 3);
    const double t_star = std::sqrt(2.0 / 3.0);
    const SlideResult res = case1_slide(ball, disk_triangle(), t_star, kTol, 3);
    // Root of 3t^2 + 2t - 1 = 0 inside (-t*, t*).
    CHECK(res.t_prime == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(res.simplex.diameter ==
          doctest::Approx(2.0 * std::sqrt(6.0) / 3.0).epsilon(1e-8));
}

TEST_CASE("case1_slide refuses the doubled cone") {
    const LayeredBody cone = extend_layer(make_lp_ball(2.0, 2), Profile::cone());
    const double t_star = (kSqrt3 - 1.0) / kSqrt3;
    try {
        case1_slide(cone, disk_triangle(), t_star, kTol, 3);
        FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
        CHECK(e.level == 3);
        // Apex at depth 2t* ~ 0.845 has gauge 0.845: inside by ~0.155.
        CHECK(e.margin == doctest::Approx(2.0 * t_star - 1.0).epsilon(1e-9));
    }
}

TEST_CASE("case2_grow on the square: phase 1, s = 2") {
    const LayeredBody square = extend_layer(LayeredBody::segment(), Profile::prism());
    const GrowResult res = case2_grow(square, segment_facet(), kTol, 2);
    CHECK(res.phase == 1);
    CHECK(res.rho0 == doctest::Approx(0.5));
    CHECK(res.parameter == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(res.simplex.diameter == doctest::Approx(2.0).epsilon(1e-8));
    // Vertices (+-1, 1) and (0, -1).
    CHECK(res.simplex.vertices[0][0] == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(res.simplex.vertices[1][0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(res.simplex.vertices[2][1] == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("case2_grow on the cylinder: phase 2, t = sqrt(3) - 1") {
    const LayeredBody cylinder = extend_layer(make_lp_ball(2.0, 2), Profile::prism());
    const GrowResult res = case2_grow(cylinder, disk_triangle(), kTol, 3);
    CHECK(res.phase == 2);
    CHECK(res.parameter == doctest::Approx(kSqrt3 - 1.0).epsilon(1e-8));
    CHECK(res.simplex.diameter == doctest::Approx(kSqrt3).epsilon(1e-8));
    // Apex reaches the bottom face centre.
    CHECK(res.simplex.vertices.back()[2] == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("case2_grow requires a top facet wider than 1") {
    const LayeredBody square = extend_layer(LayeredBody::segment(), Profile::prism());
    GaugeBody seg;
    seg.dim = 1;
    seg.descriptor = "seg";
    seg.eval = [](const Vector& x) { return std::abs(x[0]); };
    const Simplex short_facet = make_simplex(seg, {Vector{-0.5}, Vector{0.5}});
    CHECK_THROWS_AS(case2_grow(square, short_facet, kTol, 2), Error);
}

TEST_CASE("planar_construct on the disk") {
    auto [simplex, record] = planar_construct(make_lp_ball(2.0, 2), kTol);
    CHECK(record.branch == Branch::Case1);
    CHECK(*record.t_star == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-9));
    CHECK(*record.t_prime == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(simplex.diameter == doctest::Approx(kSqrt3).epsilon(1e-8));
    CHECK(affinely_independent(simplex));
}

TEST_CASE("planar_construct on the square") {
    auto [simplex, record] = planar_construct(
        extend_layer(LayeredBody::segment(), Profile::prism()), kTol);
    CHECK(record.branch == Branch::Case2);
    CHECK(simplex.diameter == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("planar_construct flags the diamond boundary-degeneracy") {
    // The cone over the segment (the l1 diamond) has t* = 1/2 with the
    // reflected apex landing exactly on the boundary: t_max = 2t*.
    auto [simplex, record] = planar_construct(
        extend_layer(LayeredBody::segment(), Profile::cone()), kTol);
    CHECK(record.branch == Branch::Case1);
    CHECK(*record.t_star == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(record.degenerate);
    CHECK(std::abs(*record.apex_outside_margin) < kTol.margin_tol);
    CHECK(simplex.diameter > 1.0);
    CHECK(simplex.diameter == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("construct on the disk and ball matches the closed forms") {
    const ConstructionResult disk = construct(make_lp_ball(2.0, 2));
    CHECK(disk.trace.levels.size() == 1);
    CHECK(*disk.trace.levels[0].t_star == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-9));
    CHECK(*disk.trace.levels[0].t_prime == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(disk.trace.final_diameter == doctest::Approx(kSqrt3).epsilon(1e-6));

    const ConstructionResult ball = construct(make_lp_ball(2.0, 3));
    CHECK(ball.trace.levels.size() == 2);
    CHECK(*ball.trace.levels[1].t_prime == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(ball.trace.final_diameter ==
          doctest::Approx(2.0 * std::sqrt(6.0) / 3.0).epsilon(1e-6));
    CHECK_FALSE(ball.trace.degenerate_margin);
    CHECK(affinely_independent(ball.simplex));
}

TEST_CASE("construct refuses the doubled cone at level 3") {
    const LayeredBody cone = extend_layer(make_lp_ball(2.0, 2), Profile::cone());
    try {
        construct(cone);
        FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
        CHECK(e.level == 3);
        CHECK(e.margin < 0.0);
    }
}

TEST_CASE("construct certificate passes the verification ops") {
    for (double p : {1.5, 2.0, 3.0}) {
        for (int n : {2, 3, 4}) {
            const LayeredBody body = make_lp_ball(p, n);
            const GaugeBody view = body.gauge_view();
            const ConstructionResult res = construct(body);
            CHECK(verify_equilateral(res.simplex.vertices, view, 1e-7).passed());
            CHECK(verify_inscribed(res.simplex.vertices, view, 1e-7).passed());
            CHECK(res.simplex.diameter >= 1.0 + 1e-6);
        }
    }
}

TEST_CASE("construct is deterministic") {
    const LayeredBody body = make_lp_ball(1.5, 4);
    const ConstructionResult a = construct(body);
    const ConstructionResult b = construct(body);
    REQUIRE(a.simplex.vertices.size() == b.simplex.vertices.size());
    for (std::size_t i = 0; i < a.simplex.vertices.size(); ++i) {
        for (std::size_t c = 0; c < a.simplex.vertices[i].size(); ++c) {
            CHECK(a.simplex.vertices[i][c] == b.simplex.vertices[i][c]);
        }
    }
    CHECK(a.trace.final_diameter == b.trace.final_diameter);
}

TEST_CASE("branch dichotomy: shrink branch iff the top product drops to 1") {
    // Profile families where the top ratio decides the branch.
    const LayeredBody disk = make_lp_ball(2.0, 2);
    CHECK(construct(disk).trace.levels[0].branch == Branch::Case1);
    const LayeredBody square = extend_layer(LayeredBody::segment(), Profile::prism());
    CHECK(construct(square).trace.levels[0].branch == Branch::Case2);
}

TEST_CASE("monotone section products along valid profiles") {
    for (const Profile& p :
         {Profile::lp(1.5), Profile::lp(2.0), Profile::lp(3.0), Profile::cone(),
          Profile::prism()}) {
        double prev = 2.0 * p(0.0);
        for (int k = 1; k <= 64; ++k) {
            const double t = p.t_max * k / 64.0;
            const double cur = 2.0 * p(t);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("construct rejects dimension 1 and invalid profiles") {
    CHECK_THROWS_AS(construct(LayeredBody::segment()), Error);
}
