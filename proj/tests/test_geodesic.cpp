#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "cusp/curve.hpp"
#include "cusp/errors.hpp"
#include "cusp/geodesic.hpp"
#include "cusp/slitmap.hpp"

using cusp::CircularArc;
using cusp::cx;
using cusp::GeodesicMap;
using cusp::SlitPolyline;

TEST_CASE("a single vertical stage is the closed-form slit map") {
    SlitPolyline slit;
    slit.vertices = {cx(0.0, 0.0), cx(0.0, 0.7)};
    GeodesicMap m = cusp::fit_geodesic(slit);
    REQUIRE(m.stages.size() == 1);
    CHECK(m.stages[0].vertical);
    double h = m.stages[0].h;
    CHECK(h == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(m.p_plus == doctest::Approx(h));
    CHECK(m.p_minus == doctest::Approx(-h));
    CHECK(std::isinf(m.p_inf));

    // Uncalibrated evaluation is the bare inverse sqrt(z^2 - h^2).
    cx wi = cusp::eval_geodesic(m, cx(0.0, 1.0));
    CHECK(std::abs(wi - cx(0.0, std::sqrt(1.0 + h * h))) <= 1e-14);
    cx wr = cusp::eval_geodesic(m, cx(2.0, 0.0));
    CHECK(std::abs(wr - cx(std::sqrt(4.0 - h * h), 0.0)) <= 1e-14);
    cx wl = cusp::eval_geodesic(m, cx(-2.0, 0.0));
    CHECK(std::abs(wl - cx(-std::sqrt(4.0 - h * h), 0.0)) <= 1e-14);

    // The origin is the slit tip; inside the interval the image walks the slit.
    cx tip = cusp::eval_geodesic(m, cx(0.0, 0.0));
    CHECK(std::abs(tip - cx(0.0, 0.7)) <= 1e-14);
    cx side = cusp::eval_geodesic(m, cx(0.5 * h, 0.0));
    CHECK(side.real() == doctest::Approx(0.0));
    CHECK(side.imag() > 0.0);
    CHECK(side.imag() < 0.7);

    CHECK_THROWS_AS(cusp::eval_geodesic(m, cx(m.p_plus, 0.0)), cusp::SingularPoint);
    CHECK_THROWS_AS(cusp::eval_geodesic(m, cx(m.p_minus, 0.0)), cusp::SingularPoint);
    CHECK_THROWS_AS(cusp::eval_geodesic(m, cx(0.0, -1.0)), cusp::OutOfDomain);
}

TEST_CASE("an empty composition is the identity") {
    GeodesicMap m;
    CHECK(cusp::eval_geodesic(m, cx(0.3, 0.4)) == cx(0.3, 0.4));
    CHECK(cusp::eval_geodesic(m, cx(-1.5, 0.0)) == cx(-1.5, 0.0));
}

TEST_CASE("fitting validates the polyline") {
    SlitPolyline bad;
    CHECK_THROWS_AS(cusp::fit_geodesic(bad), cusp::DegenerateSegment);
    bad.vertices = {cx(0.0, 0.0)};
    CHECK_THROWS_AS(cusp::fit_geodesic(bad), cusp::DegenerateSegment);
    bad.vertices = {cx(0.1, 0.0), cx(0.0, 1.0)};
    CHECK_THROWS_AS(cusp::fit_geodesic(bad), cusp::OutOfDomain);
    bad.vertices = {cx(0.0, 0.0), cx(0.0, 1.0), cx(0.0, 1.0)};
    CHECK_THROWS_AS(cusp::fit_geodesic(bad), cusp::DegenerateSegment);
    bad.vertices = {cx(0.0, 0.0), cx(0.0, 1.0), cx(1.0, 0.0)};
    CHECK_THROWS_AS(cusp::fit_geodesic(bad), cusp::OutOfDomain);  // dips to the axis
    bad.vertices = {cx(0.0, 0.0), cx(2.0, 2.0), cx(2.0, 1.0), cx(-1.0, 1.5)};
    CHECK_THROWS_AS(cusp::fit_geodesic(bad), cusp::SelfIntersectingInput);
}

TEST_CASE("stage composition interpolates every polyline vertex") {
    CircularArc arc{M_PI};
    SlitPolyline slit = cusp::arc_polyline(arc, 30);
    GeodesicMap m = cusp::fit_geodesic(slit);
    CHECK(m.stages.size() == slit.vertices.size() - 1);
    REQUIRE(m.tip_preimage.size() == slit.vertices.size() - 1);
    // The cusp channel crowds the first preimages exponentially close to the
    // base prevertex; in doubles the nearest ones collapse onto p_plus (exact
    // hits are singular) and the next sits ulps away, where the square-root
    // branch point caps the accuracy. Those crowded entries are skipped; the
    // rest must reproduce their vertex to well under the chord sag.
    int crowded = 0;
    for (std::size_t j = 0; j < m.tip_preimage.size(); ++j) {
        double t = m.tip_preimage[j];
        if (std::fabs(t - m.p_plus) <= 1e-12 * std::fabs(m.p_plus)) {
            ++crowded;
            CHECK(j < 3);  // crowding is a near-cusp effect only
            continue;
        }
        cx got = cusp::eval_geodesic(m, cx(t, 0.0));
        cx want = slit.vertices[j + 1];
        CHECK(std::abs(got - want) <= 1e-6 * (1.0 + std::abs(want)));
    }
    CHECK(crowded <= 3);
    CHECK(crowded >= 1);  // the scale really is that extreme near the cusp
}

TEST_CASE("calibration recovers a known half-plane scale") {
    SlitPolyline slit;
    slit.vertices = {cx(0.0, 0.0), cx(0.0, 1.0)};
    GeodesicMap truth = cusp::fit_geodesic(slit);
    truth.normalized = true;
    truth.lambda = 0.37;
    cx z_ref(0.0, 2.0);
    cx w_ref = cusp::eval_geodesic(truth, z_ref);

    GeodesicMap m = cusp::fit_geodesic(slit);
    double resid = cusp::calibrate(m, z_ref, w_ref);
    CHECK(m.normalized);
    CHECK(resid <= 1e-10);
    CHECK(m.lambda == doctest::Approx(0.37).epsilon(1e-6));
}

TEST_CASE("arc polylines sample the circle about i") {
    for (double alpha : {M_PI, 2.0 * M_PI}) {
        CircularArc arc{alpha};
        SlitPolyline slit = cusp::arc_polyline(arc, 50);
        REQUIRE(slit.vertices.size() == 50);
        CHECK(slit.vertices.front() == cx(0.0, 0.0));
        for (std::size_t i = 1; i < slit.vertices.size(); ++i) {
            CAPTURE(alpha);
            CAPTURE(i);
            CHECK(std::fabs(std::abs(slit.vertices[i] - cx(0.0, 1.0)) - 1.0) <= 1e-9);
            CHECK(slit.vertices[i].imag() > 0.0);
        }
        CHECK(!cusp::polyline_self_intersects(slit.vertices));
    }
    CHECK_THROWS_AS(cusp::arc_polyline(CircularArc{M_PI}, 1), cusp::DegenerateSegment);
}

TEST_CASE("depth parameter and its inverse round-trip") {
    CircularArc pi_arc{M_PI};
    // The near-branch tip sits at x = -pi/2 where the depth is exactly 2.
    CHECK(cusp::arc_depth(pi_arc, -M_PI_2) == doctest::Approx(2.0).epsilon(1e-14));
    for (double A : {600.0, 100.0, 20.0, 5.0, 2.1}) {
        double x = cusp::x_from_depth(pi_arc, A);
        CHECK(x < 0.0);
        CHECK(x > -M_PI_2);
        CHECK(cusp::arc_depth(pi_arc, x) == doctest::Approx(A).epsilon(1e-9));
    }
    CHECK_THROWS_AS(cusp::x_from_depth(pi_arc, 1.9), cusp::OutOfDomain);
    CHECK_THROWS_AS(cusp::arc_depth(pi_arc, 0.1), cusp::OutOfDomain);
    CHECK_THROWS_AS(cusp::arc_depth(pi_arc, -4.0), cusp::OutOfDomain);

    CircularArc full{2.0 * M_PI};
    // Closed form for the full circle: A = log((x + 2pi)/(-x)).
    CHECK(cusp::x_from_depth(full, 0.0) == doctest::Approx(-M_PI).epsilon(1e-14));
    for (double A : {-5.0, 0.0, 10.0, 300.0}) {
        double x = cusp::x_from_depth(full, A);
        CHECK(cusp::arc_depth(full, x) == doctest::Approx(A).epsilon(1e-12));
    }
}

TEST_CASE("oracle matches the closed-form map and sharpens under refinement") {
    CircularArc arc{M_PI};
    auto pts = cusp::default_compare_points();
    double e100 = cusp::compare_with_explicit(arc, 100, pts);
    double e200 = cusp::compare_with_explicit(arc, 200, pts);
    CHECK(e100 <= 5e-4);
    CHECK(e200 < e100);
    CHECK(e100 >= 4.0 * e200);

    CHECK_THROWS_AS(cusp::compare_with_explicit(arc, 100, {}), cusp::EmptyGrid);
    CHECK_THROWS_AS(cusp::compare_with_explicit(arc, 100, {cx(0.5, -0.1)}), cusp::OutOfDomain);
    CHECK_THROWS_AS(cusp::compare_with_explicit(arc, 100, {cx(0.2, 0.0)}), cusp::OutOfDomain);
    CHECK_THROWS_AS(cusp::compare_with_explicit(arc, 100, {cx(0.0, 0.5)}), cusp::OutOfDomain);
}

TEST_CASE("calibrated oracle reproduces boundary behavior near the cusp") {
    CircularArc arc{2.0 * M_PI};
    SlitPolyline slit = cusp::arc_polyline(arc, 200);
    GeodesicMap m = cusp::fit_geodesic(slit);
    double resid = cusp::calibrate(m, cx(0.0, 1.0), cusp::chr_eval(arc, cx(0.0, 1.0)));
    CHECK(resid <= 1e-3);

    // A point deep on the negative axis lands on the unit circle about i.
    cx w = cusp::eval_geodesic(m, cx(-1e-6, 0.0));
    CHECK(std::fabs(std::abs(w - cx(0.0, 1.0)) - 1.0) <= 1e-2);

    // Real points either stay on the real axis or land on the discretized
    // arc; chord sag keeps the latter within the polyline resolution.
    for (double y : {-11.0, -0.4, 0.8, 7.5}) {
        double off = std::fabs(cusp::eval_geodesic(m, cx(y, 0.0)).imag());
        double on = std::fabs(std::abs(cusp::eval_geodesic(m, cx(y, 0.0)) - cx(0.0, 1.0)) - 1.0);
        CHECK(std::min(off, on) <= 2e-3);
    }
    for (double r : {1e-3, 0.1, 2.0}) {
        for (double th : {0.4, M_PI_2, 2.6}) {
            CHECK(cusp::eval_geodesic(m, std::polar(r, th)).imag() > 0.0);
        }
    }
}
