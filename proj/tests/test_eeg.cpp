#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "strbut/eeg.hpp"
#include "strbut/io.hpp"

using namespace strbut;

namespace {

constexpr double pi = std::numbers::pi;

ProximityConfig config(const char* pipeline, double tol = 0.0) {
    ProximityConfig cfg;
    cfg.pipeline = DescriptorPipeline::parse(pipeline);
    cfg.tol = tol;
    return cfg;
}

} // namespace

TEST_CASE("trace parsing") {
    SUBCASE("well-formed") {
        std::istringstream in("t,x,z\n0,1,2\n0.5,1.5,2.5\n1,2,3\n");
        const EegTrace t = parse_trace(in);
        REQUIRE(t.size() == 3);
        CHECK(t.samples()[1] == EegSample{0.5, 1.5, 2.5});
    }
    SUBCASE("reordered header") {
        std::istringstream in("x,t,z\n1,0,2\n3,1,4\n");
        const EegTrace t = parse_trace(in);
        CHECK(t.samples()[0] == EegSample{0, 1, 2});
        CHECK(t.samples()[1] == EegSample{1, 3, 4});
    }
    SUBCASE("duplicate times") {
        std::istringstream in("t,x,z\n0,1,2\n0,1,2\n");
        try {
            parse_trace(in, "dup.csv");
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("dup.csv:3") != std::string::npos);
        }
    }
    SUBCASE("malformed row") {
        std::istringstream in("t,x,z\n0,1,2\n1,oops,2\n");
        CHECK_THROWS_AS(parse_trace(in), Error);
    }
    SUBCASE("missing column") {
        std::istringstream in("t,x\n0,1\n1,2\n");
        CHECK_THROWS_AS(parse_trace(in), Error);
    }
    SUBCASE("too short") {
        std::istringstream in("t,x,z\n0,1,2\n");
        CHECK_THROWS_AS(parse_trace(in), Error);
    }
    CHECK_THROWS_AS(load_trace("/nonexistent/trace.csv"), Error);
}

TEST_CASE("twist values") {
    CHECK(twist(0, 1) == 0.0);
    CHECK(twist(0, 0) == doctest::Approx(1.2).epsilon(1e-15));
    for (double z : {-1.0, 0.0, 1.0, 7.5}) CHECK(std::abs(twist(pi / 10, z)) <= 1e-12);
    CHECK(twist_of_time(0) == 0.0);
    CHECK(std::abs(twist_of_time(pi / 10)) <= 1e-12);
    CHECK(std::abs(twist_of_time(2 * pi / 2.5)) <= 1e-12);
    // The time form is the planar form on the line z = 1, x = t and nowhere else in general.
    CHECK(twist(1.0, 1.0) == twist_of_time(1.0));
    CHECK(twist(1.0, 0.5) != doctest::Approx(twist_of_time(1.0)));
}

TEST_CASE("embedding into three dimensions") {
    // A stationary trace has no arc length, so it only embeds as rows.
    const EegTrace still({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}});
    std::stringstream rows;
    write_embedded_csv(rows, still);
    for (const auto& r : read_csv(rows).rows) CHECK(r[3] == 0.0);
    CHECK_THROWS_AS(embed3d(still), Error);

    const EegTrace sine = sine_trace(100);
    const StringPath e = embed3d(sine);
    REQUIRE(e.size() == 100);
    for (std::size_t i = 0; i < 100; ++i) {
        const auto& s = sine.samples()[i];
        CHECK(e.vertices()[i][0] == s.x);
        CHECK(e.vertices()[i][1] == s.z);
        CHECK(e.vertices()[i][2] == 1.2 * (1.0 - s.z * std::cos(2.5 * s.x)) * std::cos(5.0 * s.x));
        CHECK(e.params()[i] == s.t);
    }

    std::stringstream csv;
    write_embedded_csv(csv, sine);
    const CsvTable table = read_csv(csv);
    CHECK(table.header == std::vector<std::string>{"t", "x", "z", "twist"});
    CHECK(table.rows.size() == 100);
    CHECK(table.rows[42][1] == sine.samples()[42].x);
}

TEST_CASE("trace validation") {
    CHECK_THROWS_AS(EegTrace({{0, 0, 0}}), Error);
    CHECK_THROWS_AS(EegTrace({{1, 0, 0}, {0, 0, 0}}), Error);
    CHECK_THROWS_AS(sine_trace(1), Error);
    const EegTrace m = mirror_trace(sine_trace(5));
    CHECK(m.samples()[2].x == -std::sin(m.samples()[2].t));
}

TEST_CASE("wrapping traces on a torus") {
    const RingTorus torus(2.0, 1.0);
    SUBCASE("constant trace becomes the outer equator") {
        const EegTrace constant({{0, 0.3, 0.3}, {1, 0.3, 0.3}, {2, 0.3, 0.3}, {3, 0.3, 0.3}});
        const Worldsheet w = wrap_traces_on_torus({constant}, torus);
        REQUIRE(w.strings().size() == 1);
        for (const auto& p : w.strings()[0].vertices()) {
            CHECK(std::hypot(p[0], p[1]) == doctest::Approx(3.0));
            CHECK(std::abs(p[2]) < 1e-12);
        }
    }
    SUBCASE("four traces sit on four latitudes") {
        std::vector<EegTrace> traces;
        for (int i = 0; i < 4; ++i) traces.push_back(sine_trace(20, 0.0, 5.0 + i));
        const Worldsheet w = wrap_traces_on_torus(traces, torus);
        REQUIRE(w.strings().size() == 4);
        for (int i = 0; i < 4; ++i) {
            const double v = pi / 2 * i;
            const Point start = w.strings()[i].vertices().front();
            CHECK(distance(start, torus_point(0.0, v, torus)) < 1e-12);
            for (const auto& p : w.strings()[i].vertices()) CHECK(std::abs(torus_implicit_residual(p, torus)) <= 1e-9);
        }
        CHECK(cover_check(w));
    }
    CHECK_THROWS_AS(wrap_traces_on_torus({}, torus), Error);
}

TEST_CASE("matching mirrored traces") {
    const EegTrace a = sine_trace(100, 0.0, 10.0, "a");
    SUBCASE("trace and its mirror") {
        const auto res = match_antipodal_traces({a, mirror_trace(a)}, config("length"));
        REQUIRE(res.pairs.size() == 1);
        CHECK(res.pairs.front().mismatch == 0.0);
    }
    SUBCASE("order does not matter") {
        const EegTrace b = sine_trace(50, 0.0, 3.0, "b");
        const std::vector<EegTrace> fwd{a, mirror_trace(a), b};
        const std::vector<EegTrace> rev{b, mirror_trace(a), a};
        CHECK(match_antipodal_traces(fwd, config("length")).pairs.size() ==
              match_antipodal_traces(rev, config("length")).pairs.size());
    }
    SUBCASE("different lengths do not match") {
        const EegTrace shorter = sine_trace(100, 0.0, 5.0);
        CHECK(match_antipodal_traces({a, mirror_trace(shorter)}, config("length")).pairs.empty());
    }
    CHECK_THROWS_AS(match_antipodal_traces({a}, config("length")), Error);
}
