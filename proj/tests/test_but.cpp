#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "strbut/but.hpp"
#include "strbut/io.hpp"

using namespace strbut;

namespace {

ProximityConfig config(const char* pipeline, double tol = 0.0, AntipodalityMode mode = AntipodalityMode::disjoint) {
    ProximityConfig cfg;
    cfg.pipeline = DescriptorPipeline::parse(pipeline);
    cfg.tol = tol;
    cfg.antipodality_mode = mode;
    return cfg;
}

RegionFamily random_family(std::uint64_t seed, std::size_t max_size = 30) {
    RegionGenerator gen(seed);
    const std::size_t m = 2 + gen.next(max_size - 1);
    std::vector<Region> members;
    for (std::size_t i = 0; i < m; ++i) members.push_back(gen.region());
    return RegionFamily(std::move(members));
}

Region rect(int x0, int y0, int w, int h) {
    std::vector<Point> pts;
    for (int x = x0; x < x0 + w; ++x) {
        for (int y = y0; y < y0 + h; ++y) pts.push_back(Point{double(x), double(y)});
    }
    return Region(std::move(pts), 1.0);
}

} // namespace

TEST_CASE("family construction errors") {
    CHECK_THROWS_AS(RegionFamily(std::vector<Region>{}), Error);
    CHECK_THROWS_AS(RegionFamily({rect(0, 0, 1, 1), Region({Point{0, 0, 0}}, 1.0)}), Error);
    std::vector<FamilyMember> mixed{rect(0, 0, 1, 1), StringPath({Point{0, 0}, Point{1, 0}})};
    CHECK_THROWS_AS(RegionFamily::from_members(mixed), Error);
    RegionFamily fam({rect(0, 0, 1, 1), rect(3, 0, 1, 1), rect(6, 0, 1, 1)});
    CHECK_THROWS_AS(fam.set_antipode_pairing({1, 0}), Error);
    CHECK_THROWS_AS(fam.set_antipode_pairing({1, 2, 0}), Error);
    fam.set_antipode_pairing({1, 0, 2});
    CHECK(fam.antipode_pairing());
}

TEST_CASE("a single member cannot be searched") {
    const RegionFamily one({rect(0, 0, 2, 2)});
    CHECK_THROWS_AS(find_matching_antipodal(one, config("area")), Error);
    CHECK_THROWS_AS(brute_force_oracle(one, config("area")), Error);
}

TEST_CASE("2x2 corner tiling matches all six corner pairs") {
    const Tiling t(2, 2);
    std::vector<Region> cells;
    for (std::size_t c = 0; c < 4; ++c) cells.push_back(t.cell_region(c));
    auto cfg = config("corner");
    cfg.context.tiling = &t;
    const auto res = find_matching_antipodal(RegionFamily(cells), cfg);
    REQUIRE(res.pairs.size() == 6);
    for (const auto& p : res.pairs) {
        CHECK(p.description_a == FeatureVector({2}));
        CHECK(p.description_b == FeatureVector({2}));
        CHECK(p.mismatch == 0.0);
    }
}

TEST_CASE("constant pipeline reports exactly the antipodal pairs") {
    const RegionFamily fam({rect(0, 0, 2, 2), rect(1, 1, 2, 2), rect(8, 8, 1, 1)});
    const auto res = find_matching_antipodal(fam, config("constant"));
    using IP = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(res.index_pairs() == IP{{0, 2}, {1, 2}});
}

TEST_CASE("oracle examples") {
    const RegionFamily twins({rect(0, 0, 2, 2), rect(5, 5, 2, 2)});
    CHECK(brute_force_oracle(twins, config("area")).pairs.size() == 1);
    const RegionFamily overlapping({rect(0, 0, 3, 3), rect(1, 1, 3, 3), rect(2, 0, 3, 3)});
    CHECK(brute_force_oracle(overlapping, config("area")).pairs.empty());
    CHECK(find_matching_antipodal(overlapping, config("area")).pairs.empty());
}

TEST_CASE("search agrees with the oracle") {
    const std::vector<ProximityConfig> configs{
        config("area"),
        config("area", 2.0),
        config("diameter", 0.5),
        config("centroid", 1.0),
        config("area,diameter", 1.0, AntipodalityMode::symmdiff),
        config("area", 0.0, AntipodalityMode::separable),
    };
    std::size_t found = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const RegionFamily fam = random_family(seed);
        for (const auto& cfg : configs) {
            const auto fast = find_matching_antipodal(fam, cfg);
            const auto slow = brute_force_oracle(fam, cfg);
            CHECK(fast.index_pairs() == slow.index_pairs());
            CHECK(fast.pairs == slow.pairs);
            CHECK(fast.comparisons <= slow.comparisons);
            found += slow.pairs.size();
        }
    }
    CHECK(found > 100);
}

TEST_CASE("search output does not depend on worker count") {
    const RegionFamily fam = random_family(99, 200);
    const auto a = find_matching_antipodal(fam, config("area", 1.0), 1);
    const auto b = find_matching_antipodal(fam, config("area", 1.0), 8);
    CHECK(a.pairs == b.pairs);
}

TEST_CASE("search is invariant under relabelling") {
    std::mt19937_64 rng(6);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RegionFamily fam = random_family(seed);
        std::vector<std::size_t> order(fam.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const RegionFamily shuffled = fam.permuted(order);
        const auto base = find_matching_antipodal(fam, config("area"));
        const auto moved = find_matching_antipodal(shuffled, config("area"));
        std::vector<std::pair<std::size_t, std::size_t>> mapped;
        for (auto [i, j] : moved.index_pairs()) mapped.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == base.index_pairs());
    }
}

TEST_CASE("raising the tolerance only adds pairs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RegionFamily fam = random_family(seed);
        auto prev = find_matching_antipodal(fam, config("area,diameter", 0.0)).index_pairs();
        for (double tol : {0.5, 1.0, 3.0, 10.0}) {
            const auto cur = find_matching_antipodal(fam, config("area,diameter", tol)).index_pairs();
            CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
            prev = cur;
        }
    }
}

TEST_CASE("string and worldsheet families") {
    const StringPath a({Point{0, 0}, Point{1, 0}});
    const StringPath b({Point{0, 1}, Point{1, 1}});
    const StringPath c({Point{0, 0}, Point{2, 0}});
    const RegionFamily strings({a, b, c}, 1e-9);
    CHECK(strings.kind() == MemberKind::string);
    const auto res = find_matching_antipodal(strings, config("length"));
    using IP = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(res.index_pairs() == IP{{0, 1}});

    const Worldsheet w1({a}, Region({Point{0, 0}, Point{1, 0}}, 1.0));
    const Worldsheet w2({b}, Region({Point{0, 1}, Point{1, 1}}, 1.0));
    const RegionFamily sheets({w1, w2}, 1e-9);
    CHECK(sheets.kind() == MemberKind::worldsheet);
    CHECK(members_antipodal(sheets, 0, 1, AntipodalityMode::disjoint));
    CHECK(find_matching_antipodal(sheets, config("length")).pairs.size() == 1);
}

TEST_CASE("directory loading") {
    const auto dir = std::filesystem::temp_directory_path() / "strbut_test_family";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "a.csv") << "x0,x1\n0,0\n1,0\n";
        std::ofstream(dir / "b.csv") << "x0,x1\n5,5\n6,5\n";
        std::ofstream(dir / "notes.txt") << "ignored\n";
    }
    const auto fam = RegionFamily::load_directory(dir, 1.0);
    CHECK(fam.size() == 2);
    CHECK(fam.kind() == MemberKind::region);
    CHECK(find_matching_antipodal(fam, config("area")).pairs.size() == 1);
    std::ofstream(dir / "c.csv") << "t,x0,x1\n0,0,0\n1,1,1\n";
    CHECK_THROWS_AS(RegionFamily::load_directory(dir, 1.0), Error);
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(RegionFamily::load_directory(dir, 1.0), Error);
}

TEST_CASE("sphere witness") {
    SUBCASE("n=2, 100 caps") {
        const auto w = verify_strbut_on_sphere(2, 100, 3, config("area"));
        CHECK(w.pass);
        CHECK(w.matched_caps + w.degenerate_caps == 100);
        CHECK(w.result.pairs.size() >= w.matched_caps);
    }
    SUBCASE("n=1, 10 caps") {
        const auto w = verify_strbut_on_sphere(1, 10, 0, config("area"));
        CHECK(w.pass);
        CHECK(w.matched_caps == 10);
    }
    SUBCASE("full-sphere cap is degenerate") {
        SphereWitnessOptions opts;
        opts.cap_radius_deg = 180.0;
        const auto w = verify_strbut_on_sphere(2, 1, 0, config("area"), opts);
        CHECK(w.pass);
        CHECK(w.degenerate_caps == 1);
        CHECK_FALSE(w.warnings.empty());
        CHECK(verify_strbut_on_sphere(2, 1, 0, config("area", 0.0, AntipodalityMode::symmdiff), opts).pass);
    }
    SUBCASE("caps match their antipodes with zero mismatch") {
        const auto sample = sphere_sample(2, 2000, 5);
        const Region cap = spherical_cap(sample, Point{0, 0, 1}, 0.7);
        const Region anti = antipode_map(SphericalRegion(cap)).region();
        const auto res = find_matching_antipodal(RegionFamily({cap, anti}), config("area,diameter"));
        REQUIRE(res.pairs.size() == 1);
        CHECK(res.pairs.front().mismatch == 0.0);
    }
    SUBCASE("position-dependent pipelines are rejected") {
        CHECK_THROWS_AS(verify_strbut_on_sphere(2, 5, 0, config("centroid")), Error);
    }
    SUBCASE("seeded runs repeat") {
        const auto a = verify_strbut_on_sphere(2, 20, 42, config("area"));
        const auto b = verify_strbut_on_sphere(2, 20, 42, config("area"));
        CHECK(a.result.pairs == b.result.pairs);
    }
}
