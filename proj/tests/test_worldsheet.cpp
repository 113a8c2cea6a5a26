#include <doctest.h>

#include <cmath>
#include <numbers>

#include "strbut/worldsheet.hpp"

using namespace strbut;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("flat sheets") {
    const FlatSheet s(4.0, 2.0, 3);
    CHECK(s.area() == 8.0);
    const auto strings = s.strings(10);
    REQUIRE(strings.size() == 3);
    CHECK(strings[1].vertices().front()[1] == doctest::Approx(1.0));
    CHECK(strings[2].arc_length() == doctest::Approx(4.0));
    CHECK_THROWS_AS(FlatSheet(0.0, 1.0), Error);
    CHECK_THROWS_AS(FlatSheet(1.0, 1.0, 1), Error);

    const Worldsheet w = FlatSheet(4.0, 2.0, 5).worldsheet(0.5, 9);
    CHECK(cover_check(w));
    CHECK(w.carrier().size() == 9 * 5);
    CHECK_THROWS_AS(FlatSheet(4.0, 20.0, 2).worldsheet(0.5, 9), Error);
}

TEST_CASE("rolling a sheet into a cylinder") {
    const auto cyl = roll_to_cylinder(FlatSheet(2.0 * pi, 1.0));
    CHECK(cyl.radius == doctest::Approx(1.0));
    CHECK(cyl.lateral_area() == doctest::Approx(2.0 * pi));
    for (double w : {1.0, 2.5, 7.0}) {
        for (double h : {0.5, 3.0}) {
            const auto c = roll_to_cylinder(FlatSheet(w, h));
            CHECK(c.lateral_area() == doctest::Approx(w * h).epsilon(1e-15));
            CHECK(c.height == h);
            for (const auto& s : c.strings) {
                for (const auto& p : s.vertices()) CHECK(std::hypot(p[0], p[1]) == doctest::Approx(c.radius));
            }
            // The two vertical edges of the sheet meet on the seam.
            CHECK(distance(cylinder_point(0.0, h, c.radius), cylinder_point(w, h, c.radius)) <= 1e-12);
        }
    }
}

TEST_CASE("bending a cylinder into a torus") {
    CHECK(bend_to_torus(1.0, 4.0 * pi).c() == doctest::Approx(2.0));
    CHECK_THROWS_AS(bend_to_torus(1.0, 2.0 * pi), Error);
    CHECK_THROWS_AS(bend_to_torus(1.0, 1.0), Error);
    const RingTorus t = bend_to_torus(0.5, 10.0);
    CHECK(t.c() == doctest::Approx(10.0 / (2.0 * pi)));
    CHECK(t.c() == doctest::Approx(1.5915).epsilon(1e-4));
    // Aspect ratio of the sheet carries over to the torus.
    const FlatSheet sheet(2.0, 30.0);
    const auto cyl = roll_to_cylinder(sheet);
    const RingTorus tor = bend_to_torus(cyl.radius, cyl.height);
    CHECK(tor.c() / tor.r() == doctest::Approx(sheet.height() / sheet.width()));
    CHECK_THROWS_AS(RingTorus(1.0, 1.0), Error);
    CHECK_THROWS_AS(RingTorus(1.0, 0.0), Error);
}

TEST_CASE("torus parametrization") {
    const RingTorus t(2.0, 1.0);
    CHECK(torus_point(0, 0, t) == Point{3, 0, 0});
    const Point p = torus_point(pi, 0, t);
    CHECK(p[0] == doctest::Approx(-3.0));
    CHECK(std::abs(p[1]) < 1e-12);
    const Point q = torus_point(0, pi / 2, t);
    CHECK(q[0] == doctest::Approx(2.0));
    CHECK(q[2] == doctest::Approx(1.0));
    for (int i = 0; i < 20; ++i) {
        const double u = 0.37 * i, v = 1.3 * i;
        CHECK(std::abs(torus_implicit_residual(torus_point(u, v, t), t)) < 1e-12);
        CHECK(distance(torus_point(u, v, t), torus_point(u + 2 * pi, v, t)) < 1e-12);
        CHECK(distance(torus_point(u, v, t), torus_point(u, v + 2 * pi, t)) < 1e-12);
    }
}

TEST_CASE("closed-form torus measures") {
    const RingTorus t(2.0, 1.0);
    CHECK(torus_surface_area(t) == doctest::Approx(8.0 * pi * pi));
    CHECK(torus_surface_area(t) == doctest::Approx(78.9568).epsilon(1e-6));
    CHECK(torus_volume(t) == doctest::Approx(4.0 * pi * pi));
    CHECK(torus_volume(t) == doctest::Approx(39.4784).epsilon(1e-6));
    CHECK(torus_surface_area(RingTorus(2.0, 1e-9)) < 1e-7);
    CHECK(torus_volume(RingTorus(2.0, 1e-9)) < 1e-16);
}

TEST_CASE("quadrature agrees with the closed forms") {
    for (auto [c, r] : {std::pair{2.0, 1.0}, {3.0, 0.5}, {10.0, 1.0}}) {
        const RingTorus t(c, r);
        const double area = torus_surface_area(t);
        CHECK(std::abs(torus_area_quadrature(t, 512) - area) / area <= 1e-6);
        const double vol = torus_volume(t);
        CHECK(std::abs(torus_volume_quadrature(t, 64) - vol) / vol <= 1e-4);
        // Coarse grids are already close; refinement never hurts.
        const double e16 = std::abs(torus_area_quadrature(t, 16) - area);
        const double e512 = std::abs(torus_area_quadrature(t, 512) - area);
        CHECK(e16 / area < 1e-6);
        CHECK(e512 <= e16 + 1e-9 * area);
    }
    CHECK_THROWS_AS(torus_area_quadrature(RingTorus(2, 1), 8), Error);
    CHECK_THROWS_AS(torus_volume_quadrature(RingTorus(2, 1), 15), Error);
}

TEST_CASE("area quadrature matches a direct integrand sum") {
    // Independent check: |P_u x P_v| = r (c + r cos v) summed on the same grid.
    const RingTorus t(3.0, 0.5);
    const std::size_t n = 64;
    const double h = 2 * pi / n;
    double direct = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = (j + 0.5) * h;
            direct += t.r() * (t.c() + t.r() * std::cos(v)) * h * h;
        }
    }
    CHECK(torus_area_quadrature(t, n) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("antipodal worldsheets") {
    const StringPath s0({Point{0, 0}, Point{1, 0}});
    const StringPath s1({Point{0, 1}, Point{1, 1}});
    const StringPath s2({Point{0, 2}, Point{1, 2}});
    const StringPath s3({Point{0, 3}, Point{1, 3}});
    auto sheet = [](std::vector<StringPath> strings) {
        std::vector<Point> carrier;
        for (const auto& s : strings) carrier.insert(carrier.end(), s.vertices().begin(), s.vertices().end());
        return Worldsheet(std::move(strings), Region(std::move(carrier), 1.0));
    };

    SUBCASE("all strings shared") {
        const Worldsheet a = sheet({s0, s1, s2});
        CHECK_FALSE(antipodal_worldsheets(a, a));
        CHECK_FALSE(antipodal_worldsheets(a, sheet({s2, s0, s1})));
    }
    SUBCASE("disjoint half-planes") {
        const Worldsheet left = FlatSheet(2.0, 1.0, 3).worldsheet(0.5, 5);
        std::vector<StringPath> shifted;
        for (const auto& s : left.strings()) {
            std::vector<Point> v;
            for (const auto& p : s.vertices()) v.push_back(Point{p[0] + 10.0, p[1]});
            shifted.emplace_back(std::move(v));
        }
        CHECK(antipodal_worldsheets(left, sheet(shifted)));
    }
    SUBCASE("overlap except one string") {
        CHECK(antipodal_worldsheets(sheet({s0, s1, s2}), sheet({s0, s1, s3})));
        CHECK(antipodal_worldsheets(sheet({s0, s1}), sheet({s0, s1, s3})));
        CHECK_FALSE(antipodal_worldsheets(sheet({s0, s1}), sheet({s0, s1}), AntipodalityMode::symmdiff));
    }
    SUBCASE("symmetric") {
        const Worldsheet a = sheet({s0, s1});
        const Worldsheet b = sheet({s1, s2});
        CHECK(antipodal_worldsheets(a, b) == antipodal_worldsheets(b, a));
    }
}
