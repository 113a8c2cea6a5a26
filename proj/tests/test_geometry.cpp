#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "strbut/geometry.hpp"

using namespace strbut;

namespace {

Region grid(int x0, int y0, int w, int h) {
    std::vector<Point> pts;
    for (int x = x0; x < x0 + w; ++x) {
        for (int y = y0; y < y0 + h; ++y) pts.push_back(Point{double(x), double(y)});
    }
    return Region(std::move(pts), 1.0);
}

Region pts(std::initializer_list<std::pair<double, double>> xs, double res = 1.0) {
    std::vector<Point> out;
    for (auto [x, y] : xs) out.push_back(Point{x, y});
    return Region(std::move(out), res);
}

} // namespace

TEST_CASE("points reject non-finite coordinates") {
    CHECK_THROWS_AS(Point({0.0, std::nan("")}), Error);
    CHECK_THROWS_AS(Point({INFINITY}), Error);
    CHECK(-Point{1.0, -2.0} == Point{-1.0, 2.0});
    CHECK(distance(Point{0, 0}, Point{3, 4}) == doctest::Approx(5.0));
}

TEST_CASE("regions deduplicate by cell and keep sorted order") {
    const Region r = pts({{1, 0}, {0, 0}, {1.2, 0.1}}, 1.0);
    CHECK(r.size() == 2);
    CHECK(r.points().front() == Point{0, 0});
    CHECK(r.points().back() == Point{1, 0});
    CHECK(r.contains(Point{0.9, 0.0}));
    CHECK_FALSE(r.contains(Point{2.0, 0.0}));
}

TEST_CASE("region construction errors") {
    CHECK_THROWS_AS(Region(std::vector<Point>{}, 1.0), Error);
    CHECK_THROWS_AS(Region({Point{0, 0}, Point{1, 0, 0}}, 1.0), Error);
    CHECK_THROWS_AS(Region({Point{0, 0}}, 0.0), Error);
    CHECK_THROWS_AS(Region({Point{0, 0}}, -1.0), Error);
}

TEST_CASE("set operations") {
    const Region a = grid(0, 0, 2, 2);
    const Region b = grid(1, 0, 2, 2);
    CHECK(region_union(a, b).size() == 6);
    CHECK(region_intersection(a, b).size() == 2);
    CHECK(region_difference(a, b).size() == 2);
    CHECK(is_subset(region_intersection(a, b), a));
    CHECK_FALSE(is_subset(b, a));
    CHECK(region_intersection(grid(0, 0, 1, 1), grid(5, 5, 1, 1)).is_empty());
}

TEST_CASE("interior examples") {
    SUBCASE("single point has empty interior") { CHECK(interior(pts({{0, 0}})).is_empty()); }
    SUBCASE("two disjoint points have empty interior") { CHECK(interior(pts({{0, 0}, {5, 5}})).is_empty()); }
    SUBCASE("5x5 grid has the inner 3x3 as interior") { CHECK(interior(grid(0, 0, 5, 5)) == grid(1, 1, 3, 3)); }
}

TEST_CASE("interior is contained in the region and monotone") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coord(0, 7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> p;
        for (int i = 0; i < 40; ++i) p.push_back(Point{double(coord(rng)), double(coord(rng))});
        const Region a(p, 1.0);
        const Region ia = interior(a);
        if (!ia.is_empty()) CHECK(is_subset(ia, a));
        const Region bigger = region_union(a, grid(2, 2, 4, 4));
        const Region ib = interior(bigger);
        if (!ia.is_empty()) CHECK(is_subset(ia, ib));
    }
}

TEST_CASE("antipodal_disjoint") {
    CHECK(antipodal_disjoint(grid(0, 0, 2, 2), grid(5, 0, 2, 2)));
    CHECK_FALSE(antipodal_disjoint(grid(0, 0, 2, 2), grid(0, 0, 2, 2)));
    CHECK_FALSE(antipodal_disjoint(pts({{0, 0}}), pts({{0, 0}, {1, 0}})));
    CHECK_THROWS_AS(antipodal_disjoint(pts({{0, 0}}), Region({Point{0, 0, 0}}, 1.0)), Error);
}

TEST_CASE("antipodal_symmdiff") {
    CHECK(antipodal_symmdiff(pts({{0, 0}}), pts({{0, 0}, {1, 0}})));
    CHECK_FALSE(antipodal_symmdiff(grid(0, 0, 3, 3), grid(0, 0, 3, 3)));
    CHECK(antipodal_symmdiff(grid(0, 0, 2, 2), grid(5, 0, 2, 2)));
}

TEST_CASE("antipodal_separable examples") {
    SUBCASE("separated singletons") {
        const auto w = antipodal_separable(pts({{0, 0}}), pts({{1, 0}}));
        REQUIRE(w);
        CHECK(w->plane_a.normal[0] == doctest::Approx(1.0));
        CHECK(w->plane_a.normal[1] == doctest::Approx(0.0));
        CHECK(w->plane_a.offset == doctest::Approx(0.0));
        CHECK(w->plane_b.offset == doctest::Approx(1.0));
        CHECK(are_disjoint_parallel(w->plane_a, w->plane_b));
    }
    SUBCASE("identical singletons") { CHECK_FALSE(antipodal_separable(pts({{0, 0}}), pts({{0, 0}}))); }
    SUBCASE("parallel vertical segments") {
        const auto w = antipodal_separable(pts({{0, 0}, {0, 1}, {0, 2}}), pts({{3, 0}, {3, 1}, {3, 2}}));
        REQUIRE(w);
        CHECK(std::abs(w->plane_a.normal[0]) == doctest::Approx(1.0));
        CHECK(w->plane_a.normal[1] == doctest::Approx(0.0));
        CHECK(w->witness_a.size() == 3);
        CHECK(w->witness_b.size() == 3);
    }
}

TEST_CASE("separation witnesses lie on their planes") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Point> pa, pb;
        for (int i = 0; i < 4; ++i) pa.push_back(Point{double(coord(rng)), double(coord(rng))});
        for (int i = 0; i < 4; ++i) pb.push_back(Point{double(coord(rng)), double(coord(rng))});
        const Region a(pa, 1.0), b(pb, 1.0);
        const auto w = antipodal_separable(a, b);
        if (!w) {
            // Only possible when both regions are the same single point.
            CHECK((a.is_singleton() && a == b));
            continue;
        }
        CHECK(are_disjoint_parallel(w->plane_a, w->plane_b));
        for (const auto& p : w->witness_a.points()) CHECK(w->plane_a.contains(p));
        for (const auto& p : w->witness_b.points()) CHECK(w->plane_b.contains(p));
        CHECK(is_subset(w->witness_a, a));
        CHECK(is_subset(w->witness_b, b));
    }
}

TEST_CASE("hyperplane construction") {
    const auto h = Hyperplane::make({3.0, 4.0}, 10.0);
    CHECK(h.normal[0] == doctest::Approx(0.6));
    CHECK(h.offset == doctest::Approx(2.0));
    CHECK_THROWS_AS(Hyperplane::make({0.0, 0.0}, 1.0), Error);
    CHECK_FALSE(are_disjoint_parallel(h, h));
    CHECK(are_disjoint_parallel(Hyperplane::make({1, 0}, 0), Hyperplane::make({-1, 0}, 1)));
    CHECK_FALSE(are_disjoint_parallel(Hyperplane::make({1, 0}, 1), Hyperplane::make({-1, 0}, -1)));
}

TEST_CASE("antipodality mode parsing") {
    CHECK(parse_antipodality_mode("disjoint") == AntipodalityMode::disjoint);
    CHECK(parse_antipodality_mode("symmdiff") == AntipodalityMode::symmdiff);
    CHECK(parse_antipodality_mode("separable") == AntipodalityMode::separable);
    CHECK_THROWS_AS(parse_antipodality_mode("nope"), Error);
    CHECK(to_string(AntipodalityMode::symmdiff) == "symmdiff");
}

TEST_CASE("antipode map") {
    SUBCASE("point on the circle") {
        const SphericalRegion a(Region({Point{1, 0}}, 1e-9));
        CHECK(antipode_map(a).region().points().front() == Point{-1, 0});
    }
    SUBCASE("symmetric region is a fixed point") {
        const SphericalRegion a(Region({Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}, 1e-9));
        CHECK(antipode_map(a).region() == a.region());
    }
    SUBCASE("off-sphere points rejected") { CHECK_THROWS_AS(SphericalRegion(Region({Point{2, 0}}, 1e-9)), Error); }
    SUBCASE("cap of 20 points") {
        const auto sample = sphere_sample(2, 2000, 9);
        const Point centre{0, 0, 1};
        std::vector<Point> cap;
        for (const auto& p : sample) {
            if (cap.size() < 20 && dot(p, centre) > std::cos(0.6)) cap.push_back(p);
        }
        REQUIRE(cap.size() == 20);
        const SphericalRegion a(Region(cap, 1e-9));
        const SphericalRegion b = antipode_map(a);
        CHECK(b.region().size() == 20);
        CHECK(antipodal_disjoint(a.region(), b.region()));
        CHECK(antipode_map(b).region() == a.region());
        // Negation is an isometry: pairwise distances survive exactly.
        const auto& pa = a.region().points();
        for (std::size_t i = 0; i < pa.size(); ++i) {
            for (std::size_t j = 0; j < pa.size(); ++j) CHECK(distance(pa[i], pa[j]) == distance(-pa[i], -pa[j]));
        }
    }
}

TEST_CASE("sphere_sample") {
    const auto s = sphere_sample(1, 4, 123);
    REQUIRE(s.size() == 4);
    for (const auto& p : s) {
        CHECK(p.dim() == 2);
        CHECK(norm(p) == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (std::size_t seed = 0; seed < 5; ++seed) {
        const auto t = sphere_sample(3, 100, seed);
        const std::set<Point> all(t.begin(), t.end());
        for (const auto& p : t) CHECK(all.count(-p) == 1);
    }
    CHECK(sphere_sample(2, 10, 4) == sphere_sample(2, 10, 4));
    CHECK_THROWS_AS(sphere_sample(2, 3, 0), Error);
    CHECK_THROWS_AS(sphere_sample(2, 0, 0), Error);
}

TEST_CASE("string paths") {
    const StringPath s({Point{0, 0}, Point{3, 0}, Point{3, 4}});
    CHECK(s.arc_length() == doctest::Approx(7.0));
    CHECK(s.params() == std::vector<double>{0, 1, 2});
    CHECK_THROWS_AS(StringPath({Point{0, 0}}), Error);
    CHECK_THROWS_AS(StringPath({Point{0, 0}, Point{1, 0}}, {1.0, 1.0}), Error);
    CHECK_THROWS_AS(StringPath({Point{0, 0}, Point{0, 0}}), Error);
    CHECK(s.vertex_region(1.0).size() == 3);
}

TEST_CASE("cover_check") {
    SUBCASE("single cell with a vertex inside") {
        const std::vector<StringPath> strings{StringPath({Point{0, 0}, Point{0.2, 0}})};
        CHECK(cover_check(strings, pts({{0, 0}})));
    }
    SUBCASE("string ten pitches away") {
        const std::vector<StringPath> strings{StringPath({Point{10, 0}, Point{10, 1}})};
        CHECK_FALSE(cover_check(strings, pts({{0, 0}})));
        CHECK_THROWS_AS(Worldsheet(strings, pts({{0, 0}})), Error);
    }
    SUBCASE("dense horizontal raster over a rectangle") {
        std::vector<StringPath> strings;
        for (int y = 0; y <= 4; ++y) strings.emplace_back(std::vector<Point>{Point{0, double(y)}, Point{6, double(y)}});
        const Worldsheet w(strings, grid(0, 0, 7, 5));
        CHECK(cover_check(w));
    }
    SUBCASE("adding strings never breaks coverage") {
        std::vector<StringPath> strings;
        for (int y = 0; y <= 4; y += 2) strings.emplace_back(std::vector<Point>{Point{0, double(y)}, Point{6, double(y)}});
        const Region carrier = grid(0, 0, 7, 5);
        const bool before = cover_check(strings, carrier);
        strings.emplace_back(std::vector<Point>{Point{0, 1}, Point{6, 1}});
        if (before) CHECK(cover_check(strings, carrier));
        CHECK(before);
    }
}
