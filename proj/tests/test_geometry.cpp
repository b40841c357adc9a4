#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "risbeam/geometry.hpp"
#include "risbeam/rng.hpp"

using namespace risbeam;

namespace {

constexpr double kLambda28 = kSpeedOfLight / 28e9;
const Point3 kTx{0.0, 12.0, 0.0};
const Point3 kRx{5.0, 0.0, 0.0};

Point3 random_point(std::mt19937_64& eng, double span) {
    return {span * (2.0 * rng::uniform01(eng) - 1.0),
            span * (2.0 * rng::uniform01(eng) - 1.0),
            span * (2.0 * rng::uniform01(eng) - 1.0)};
}

PlaneFrame random_frame(std::mt19937_64& eng, const Point3& center) {
    const Vec3 a = rng::unit_sphere(eng);
    Vec3 b = rng::unit_sphere(eng);
    b = b - dot(b, a) * a;
    while (norm(b) < 1e-3) {
        b = rng::unit_sphere(eng);
        b = b - dot(b, a) * a;
    }
    return PlaneFrame::from_axes(center, a, b);
}

}  // namespace

TEST_CASE("element positions: single element sits at the center") {
    RisGeometry geom;
    geom.frame = PlaneFrame::from_axes({1.0, 2.0, 3.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    geom.nx = 1;
    geom.ny = 1;
    geom.spacing = 0.37;
    const auto positions = element_positions(geom);
    REQUIRE(positions.size() == 1);
    CHECK(norm(positions[0] - Point3{1.0, 2.0, 3.0}) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("element positions: two elements straddle the center symmetrically") {
    const Point3 c{0.5, -1.0, 2.0};
    RisGeometry geom;
    geom.frame = PlaneFrame::from_axes(c, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0});
    geom.nx = 2;
    geom.ny = 1;
    geom.spacing = 0.4;
    const auto positions = element_positions(geom);
    REQUIRE(positions.size() == 2);
    CHECK(norm(positions[0] - (c + Vec3{0.0, 0.0, -0.2})) < 1e-15);
    CHECK(norm(positions[1] - (c + Vec3{0.0, 0.0, 0.2})) < 1e-15);
}

TEST_CASE("element positions: row-major order matches the grid formula") {
    RisGeometry geom;
    geom.frame = PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    geom.nx = 3;
    geom.ny = 4;
    geom.spacing = 0.25;
    const auto positions = element_positions(geom);
    REQUIRE(positions.size() == 12);
    for (int i = 0; i < geom.nx; ++i) {
        for (int j = 0; j < geom.ny; ++j) {
            const Point3 expect = geom.frame.at((i - 1.0) * 0.25, (j - 1.5) * 0.25);
            CHECK(norm(positions[i * geom.ny + j] - expect) < 1e-15);
        }
    }
}

TEST_CASE("element positions: 80x80 half-wavelength grid at 28 GHz spans 0.4229 m") {
    RisGeometry geom;
    geom.frame = PlaneFrame::bisector({0.0, 0.0, 0.0}, kTx, kRx);
    geom.nx = 80;
    geom.ny = 80;
    geom.spacing = kLambda28 / 2.0;
    const auto positions = element_positions(geom);
    REQUIRE(positions.size() == 6400);
    // extent per side = 79 * lambda/2 = 0.42292150325 m
    const double extent = distance(positions[0], positions[79 * 80]);  // along u
    CHECK(extent == doctest::Approx(0.42292150325).epsilon(1e-12));
    const double extent_v = distance(positions[0], positions[79]);  // along v
    CHECK(extent_v == doctest::Approx(0.42292150325).epsilon(1e-12));
}

TEST_CASE("excess path: midpoint of the segment has zero excess") {
    const Point3 tx{-3.0, 1.0, 2.0};
    const Point3 rx{5.0, -1.0, 0.0};
    const Point3 mid = (tx + rx) * 0.5;
    CHECK(excess_path(tx, rx, mid) == 0.0);
}

TEST_CASE("excess path: 5-12-13 right triangle gives exactly 4 m") {
    CHECK(excess_path(kTx, kRx, {0.0, 0.0, 0.0}) == 4.0);
}

TEST_CASE("excess path: equidistant off-axis point gives 2d - L") {
    const Point3 tx{0.0, 0.0, -2.0};
    const Point3 rx{0.0, 0.0, 2.0};
    const Point3 q{3.0, 0.0, 0.0};  // distance sqrt(13) from both foci
    const double d = std::sqrt(13.0);
    CHECK(excess_path(tx, rx, q) == doctest::Approx(2.0 * d - 4.0).epsilon(1e-15));
}

TEST_CASE("excess path: coincident foci are rejected") {
    const Point3 p{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(excess_path(p, p + Vec3{0.0, 0.0, 5e-10}, {0.0, 0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("excess path: nonnegative over random triples") {
    auto eng = rng::derive_stream(42, {1});
    for (int k = 0; k < 100000; ++k) {
        const Point3 tx = random_point(eng, 50.0);
        Point3 rx = random_point(eng, 50.0);
        if (distance(tx, rx) < 1e-6) {
            rx.x += 1.0;
        }
        const Point3 q = random_point(eng, 50.0);
        CHECK(excess_path(tx, rx, q) >= 0.0);
    }
}

TEST_CASE("zone bucket: conventions at zero, mid-zone and the half-wave edge") {
    const double lam = kLambda28;

    const ZoneBucket b0 = zone_bucket(0.0, lam);
    CHECK(b0.zone == 1);
    CHECK(b0.residual == 0.0);

    const ZoneBucket b1 = zone_bucket(0.6 * lam, lam);
    CHECK(b1.zone == 2);
    CHECK(b1.residual == doctest::Approx(0.1 * lam).epsilon(1e-12));

    // half-open convention: delta = lambda/2 belongs to zone 2
    const ZoneBucket b2 = zone_bucket(lam / 2.0, lam);
    CHECK(b2.zone == 2);
    CHECK(b2.residual == 0.0);
}

TEST_CASE("zone bucket: buckets tile [0, inf) and reconstruct the excess") {
    auto eng = rng::derive_stream(7, {2});
    const double lam = 0.01;
    for (int k = 0; k < 20000; ++k) {
        const double delta = 10.0 * rng::uniform01(eng);
        const ZoneBucket b = zone_bucket(delta, lam);
        CHECK(b.zone >= 1);
        CHECK(b.residual >= 0.0);
        CHECK(b.residual < lam / 2.0);
        const double rebuilt = static_cast<double>(b.zone - 1) * lam / 2.0 + b.residual;
        CHECK(rebuilt == doctest::Approx(delta).epsilon(1e-9));
    }
}

TEST_CASE("fresnel map: element on the focal segment falls in zone 1") {
    RisGeometry geom;
    geom.frame = PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    geom.nx = 3;
    geom.ny = 3;
    geom.spacing = 0.01;
    const Point3 tx{0.0, 0.0, -2.0};
    const Point3 rx{0.0, 0.0, 3.0};  // segment crosses the plane at the center element
    const FresnelMap map = build_fresnel_map(tx, rx, geom, 0.05);
    const std::size_t center = 1 * 3 + 1;
    CHECK(map.excess[center] == 0.0);
    CHECK(map.zone[center] == 1);
    CHECK(map.residual[center] == 0.0);
    CHECK(map.los_distance == doctest::Approx(5.0).epsilon(1e-15));
    for (std::size_t n = 0; n < map.size(); ++n) {
        CHECK(map.excess[n] >= 0.0);
        CHECK(map.zone[n] == zone_bucket(map.excess[n], 0.05).zone);
    }
}

TEST_CASE("fresnel map: scaling positions and wavelength preserves zones") {
    auto eng = rng::derive_stream(11, {3});
    const double lam = 0.02;
    const double k = 3.7;

    RisGeometry geom;
    geom.frame = random_frame(eng, {0.2, -0.4, 0.1});
    geom.nx = 6;
    geom.ny = 5;
    geom.spacing = lam / 2.0;
    const Point3 tx = random_point(eng, 4.0);
    Point3 rx = random_point(eng, 4.0);
    rx.x += 5.0;

    RisGeometry scaled = geom;
    scaled.frame.center = geom.frame.center * k;
    scaled.spacing = geom.spacing * k;

    const FresnelMap a = build_fresnel_map(tx, rx, geom, lam);
    const FresnelMap b = build_fresnel_map(tx * k, rx * k, scaled, lam * k);
    REQUIRE(a.size() == b.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        CHECK(a.zone[n] == b.zone[n]);
        CHECK(b.excess[n] == doctest::Approx(k * a.excess[n]).epsilon(1e-9));
        CHECK(b.residual[n] ==
              doctest::Approx(k * a.residual[n]).epsilon(1e-9).scale(lam));
    }
}

TEST_CASE("conic classification: canonical forms") {
    CHECK(classify_conic(1.0, 0.0, 1.0, 0.0, 0.0, -1.0) == ConicClass::Ellipse);
    CHECK(classify_conic(1.0, 0.0, 1.0, 0.0, 0.0, 0.0) == ConicClass::Point);
    CHECK(classify_conic(1.0, 0.0, 1.0, 0.0, 0.0, 1.0) == ConicClass::Empty);
    CHECK(classify_conic(1.0, 0.0, -1.0, 0.0, 0.0, 1.0) == ConicClass::Degenerate);
    CHECK(classify_conic(0.0, 0.0, 0.0, 1.0, 0.0, 1.0) == ConicClass::Degenerate);
}

TEST_CASE("zone boundary conic: plane far beyond the ellipsoid is empty") {
    const PlaneFrame frame = PlaneFrame::from_axes({0.0, 0.0, 100.0}, {1.0, 0.0, 0.0},
                                                   {0.0, 1.0, 0.0});
    const ConicSection conic = zone_boundary_conic(kTx, kRx, frame, 3, kLambda28);
    CHECK(conic.classification == ConicClass::Empty);
}

TEST_CASE("zone boundary conic: plane perpendicular to the focal axis is a circle") {
    const Point3 tx{0.0, 0.0, -1.5};
    const Point3 rx{0.0, 0.0, 1.5};
    const PlaneFrame frame = PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0},
                                                   {0.0, 1.0, 0.0});
    const double lam = 0.1;
    const ConicSection conic = zone_boundary_conic(tx, rx, frame, 2, lam);
    CHECK(conic.classification == ConicClass::Ellipse);
    CHECK(conic.b == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(conic.a == doctest::Approx(conic.c).epsilon(1e-15));
    CHECK(conic.d == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(conic.e == doctest::Approx(0.0).epsilon(1e-15));

    // radius equals the semi-minor axis of the boundary ellipsoid
    const auto points = conic_sample(conic, frame, 8);
    REQUIRE(points.size() == 8);
    const double a = 0.5 * (3.0 + 2.0 * lam / 2.0);
    const double expect_r = std::sqrt(a * a - 1.5 * 1.5);
    for (const auto& p : points) {
        CHECK(norm(p) == doctest::Approx(expect_r).epsilon(1e-12));
    }
}

TEST_CASE("zone boundary conic: sampled roots reproduce the boundary excess path") {
    // Oblique plane through the focal segment, paper terminals.
    const Point3 mid = (kTx + kRx) * 0.5;
    const PlaneFrame frame =
        PlaneFrame::from_axes(mid, normalized({1.0, 2.0, 0.5}), normalized({-2.0, 1.0, 0.0}));
    const double los = distance(kTx, kRx);
    for (std::int64_t m = 1; m <= 20; ++m) {
        const ConicSection conic = zone_boundary_conic(kTx, kRx, frame, m, kLambda28);
        REQUIRE(conic.classification == ConicClass::Ellipse);
        const auto points = conic_sample(conic, frame, 64);
        REQUIRE(points.size() == 64);
        for (const auto& p : points) {
            const double delta = excess_path(kTx, kRx, p);
            CHECK(std::abs(delta - m * kLambda28 / 2.0) < 1e-9 * los);
        }
    }
}

TEST_CASE("zone boundary conic: random scenes keep the residual bound") {
    auto eng = rng::derive_stream(23, {5});
    for (int scene = 0; scene < 25; ++scene) {
        const Point3 tx = random_point(eng, 10.0);
        Point3 rx = random_point(eng, 10.0);
        if (distance(tx, rx) < 1.0) {
            rx.z += 3.0;
        }
        // plane through a point on the segment, random orientation
        const double t = 0.2 + 0.6 * rng::uniform01(eng);
        const Point3 anchor = tx + t * (rx - tx);
        const PlaneFrame frame = random_frame(eng, anchor);
        const double lam = 0.002 + 0.02 * rng::uniform01(eng);
        const double los = distance(tx, rx);
        for (const std::int64_t m : {1, 2, 5, 20}) {
            const ConicSection conic = zone_boundary_conic(tx, rx, frame, m, lam);
            const auto points = conic_sample(conic, frame, 16);
            CHECK(!points.empty());
            for (const auto& p : points) {
                CHECK(std::abs(excess_path(tx, rx, p) - m * lam / 2.0) < 1e-9 * los);
            }
        }
    }
}

TEST_CASE("far-field excess path: zero at the expansion point, linear in the offset") {
    const PlaneFrame frame =
        PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    const Point3 tx{200.0, 300.0, 500.0};
    const Point3 rx{-100.0, 50.0, 800.0};
    CHECK(far_field_excess_path(tx, rx, frame, frame.center) == 0.0);

    const Vec3 w = 0.3 * frame.u_axis + 0.1 * frame.v_axis;
    const double one = far_field_excess_path(tx, rx, frame, frame.center + w);
    const double two = far_field_excess_path(tx, rx, frame, frame.center + 2.0 * w);
    CHECK(two == doctest::Approx(2.0 * one).epsilon(1e-12));

    CHECK_THROWS_AS(far_field_excess_path(tx, rx, frame, frame.center + frame.normal * 1e-6),
                    std::invalid_argument);
}

TEST_CASE("far-field excess path: matches the exact path at megameter range") {
    const PlaneFrame frame =
        PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    const Vec3 dir_tx = normalized({0.3, 0.5, 0.81});
    const Vec3 dir_rx = normalized({-0.4, 0.2, 0.89});
    const Point3 tx = 1e6 * dir_tx;
    const Point3 rx = 0.7e6 * dir_rx;

    RisGeometry geom;
    geom.frame = frame;
    geom.nx = 80;
    geom.ny = 80;
    geom.spacing = kLambda28 / 2.0;

    const double delta_center = excess_path(tx, rx, frame.center);
    for (const auto& q : element_positions(geom)) {
        const double exact = excess_path(tx, rx, q);
        const double ff = far_field_excess_path(tx, rx, frame, q);
        const double err = std::abs(exact - delta_center - ff) /
                           std::max(std::abs(ff), kLambda28);
        CHECK(err < 1e-3);
    }
}

TEST_CASE("far-field excess path: error decays monotonically over three decades") {
    const PlaneFrame frame =
        PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    const Vec3 dir_tx = normalized({0.2, -0.4, 0.89});
    const Vec3 dir_rx = normalized({0.5, 0.3, 0.81});

    RisGeometry geom;
    geom.frame = frame;
    geom.nx = 20;
    geom.ny = 20;
    geom.spacing = kLambda28 / 2.0;
    const auto positions = element_positions(geom);

    double previous = std::numeric_limits<double>::infinity();
    for (const double range : {1e3, 1e4, 1e5, 1e6}) {
        const Point3 tx = range * dir_tx;
        const Point3 rx = 0.8 * range * dir_rx;
        const double delta_center = excess_path(tx, rx, frame.center);
        double worst = 0.0;
        for (const auto& q : positions) {
            const double exact = excess_path(tx, rx, q);
            const double ff = far_field_excess_path(tx, rx, frame, q);
            worst = std::max(worst, std::abs(exact - delta_center - ff));
        }
        CHECK(worst < previous);
        previous = worst;
    }
}

TEST_CASE("far-field zone boundary: parallel lines for an oblique frame") {
    const PlaneFrame frame =
        PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    const Point3 tx{50.0, 80.0, 120.0};
    const Point3 rx{-40.0, 10.0, 90.0};
    const ConicSection one = far_field_zone_boundary(tx, rx, frame, 1, 0.01);
    const ConicSection two = far_field_zone_boundary(tx, rx, frame, 2, 0.01);
    CHECK(one.classification == ConicClass::Degenerate);
    CHECK(two.classification == ConicClass::Degenerate);
    CHECK(one.a == 0.0);
    CHECK(one.b == 0.0);
    CHECK(one.c == 0.0);
    // identical gradients: the boundaries are parallel lines
    CHECK(one.d == doctest::Approx(two.d).epsilon(1e-15));
    CHECK(one.e == doctest::Approx(two.e).epsilon(1e-15));
    CHECK(one.f != two.f);
}

TEST_CASE("fraunhofer distance: zero aperture and the square-meter reference") {
    CHECK(fraunhofer_distance(0.0, 0.01) == 0.0);

    // 1 m^2 square surface at 30 GHz: D = sqrt(2) m diagonal -> about 400 m
    const double lam30 = kSpeedOfLight / 30e9;
    const double df = fraunhofer_distance(std::sqrt(2.0), lam30);
    CHECK(df == doctest::Approx(400.2769142377825).epsilon(1e-12));
    CHECK(df > 350.0);
    CHECK(df < 450.0);
}

TEST_CASE("fraunhofer distance: the 80x80 surface keeps the paper terminals near-field") {
    const double side = 79.0 * kLambda28 / 2.0;
    const double diagonal = std::sqrt(2.0) * side;
    CHECK(diagonal == doctest::Approx(0.598101325715367).epsilon(1e-12));
    const double df = fraunhofer_distance(diagonal, kLambda28);
    CHECK(df == doctest::Approx(66.8215975135).epsilon(1e-9));
    CHECK(df > distance(kTx, Point3{0.0, 0.0, 0.0}));
    CHECK(df > distance(kRx, Point3{0.0, 0.0, 0.0}));
}

TEST_CASE("plane frame: orthonormality is enforced") {
    CHECK_THROWS_AS(PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {1.0, 1e-6, 0.0}),
                    std::invalid_argument);
    PlaneFrame frame = PlaneFrame::from_axes({0.0, 0.0, 0.0}, {2.0, 0.0, 0.0},
                                             {0.0, 3.0, 0.0});  // axes get normalised
    CHECK(norm(frame.u_axis) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm(frame.v_axis) == doctest::Approx(1.0).epsilon(1e-15));
    frame.normal = Vec3{0.0, 0.0, -1.0};
    CHECK_THROWS_AS(frame.validate(), std::invalid_argument);
}

TEST_CASE("plane frame: bisector orientation for the paper terminals") {
    const PlaneFrame frame = PlaneFrame::bisector({0.0, 0.0, 0.0}, kTx, kRx);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(norm(frame.normal - Vec3{inv_sqrt2, inv_sqrt2, 0.0}) < 1e-12);
    CHECK(norm(frame.u_axis - Vec3{inv_sqrt2, -inv_sqrt2, 0.0}) < 1e-12);
    CHECK(norm(frame.v_axis - Vec3{0.0, 0.0, -1.0}) < 1e-12);
    CHECK(std::abs(dot(frame.normal, frame.u_axis)) < 1e-12);
    // the frame center is the specular point: the excess path has a minimum there
    const double d0 = excess_path(kTx, kRx, frame.center);
    for (const auto& w : {frame.u_axis, frame.v_axis}) {
        CHECK(excess_path(kTx, kRx, frame.center + 1e-5 * w) >= d0);
    }
    CHECK_THROWS_AS(PlaneFrame::bisector({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {-2.0, 0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("ris geometry validation") {
    RisGeometry geom;
    geom.frame = PlaneFrame::from_axes({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    geom.nx = 0;
    geom.ny = 1;
    geom.spacing = 0.1;
    CHECK_THROWS_AS(geom.validate(), std::invalid_argument);
    geom.nx = 1;
    geom.spacing = 0.0;
    CHECK_THROWS_AS(geom.validate(), std::invalid_argument);
}
