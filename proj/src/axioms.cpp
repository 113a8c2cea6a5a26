#include <algorithm>
#include <vector>

#include "strbut/io.hpp"
#include "strbut/parallel.hpp"
#include "strbut/proximity.hpp"

namespace strbut {

namespace {

constexpr std::int64_t kLatticeMin = -10;
constexpr std::int64_t kLatticeMax = 10;
constexpr std::size_t kMaxPoints = 50;

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s);
    std::uint64_t t = a ^ static_cast<std::uint64_t>(trial);
    return splitmix64(t);
}

} // namespace

RegionGenerator::RegionGenerator(std::uint64_t seed) : state_(seed) {}

std::uint64_t RegionGenerator::next(std::uint64_t bound) {
    if (bound == 0) throw Error("bound must be positive");
    return splitmix64(state_) % bound;
}

Point RegionGenerator::lattice_point() {
    const auto span = static_cast<std::uint64_t>(kLatticeMax - kLatticeMin + 1);
    return Point{static_cast<double>(kLatticeMin + static_cast<std::int64_t>(next(span))),
                 static_cast<double>(kLatticeMin + static_cast<std::int64_t>(next(span)))};
}

Point RegionGenerator::member(const Region& r) { return r.points()[next(r.size())]; }

Region RegionGenerator::universe() {
    std::vector<Point> pts;
    for (auto x = kLatticeMin; x <= kLatticeMax; ++x) {
        for (auto y = kLatticeMin; y <= kLatticeMax; ++y) {
            pts.push_back(Point{static_cast<double>(x), static_cast<double>(y)});
        }
    }
    return Region(std::move(pts), 1.0);
}

Region RegionGenerator::region() {
    std::vector<Point> pts;
    auto scatter = [&](std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) pts.push_back(lattice_point());
    };
    auto rectangle = [&](std::uint64_t min_side, std::uint64_t max_side) {
        const auto w = static_cast<std::int64_t>(min_side + next(max_side - min_side + 1));
        const auto h = static_cast<std::int64_t>(min_side + next(max_side - min_side + 1));
        const auto x0 = kLatticeMin + static_cast<std::int64_t>(next(static_cast<std::uint64_t>(21 - w + 1)));
        const auto y0 = kLatticeMin + static_cast<std::int64_t>(next(static_cast<std::uint64_t>(21 - h + 1)));
        for (std::int64_t i = 0; i < w; ++i) {
            for (std::int64_t j = 0; j < h; ++j) {
                pts.push_back(Point{static_cast<double>(x0 + i), static_cast<double>(y0 + j)});
            }
        }
    };
    switch (next(8)) {
    case 0:
    case 1: scatter(1 + next(5)); break;
    case 2:
    case 3: scatter(1 + next(kMaxPoints)); break;
    case 4:
    case 5: rectangle(1, 7); break;
    case 6:
        rectangle(2, 5);
        scatter(1 + next(kMaxPoints - pts.size()));
        break;
    default: scatter(1); break;
    }
    return Region(std::move(pts), 1.0);
}

Region RegionGenerator::rectangle_around(const Point& p) {
    const auto w = static_cast<std::int64_t>(3 + next(5));
    const auto h = static_cast<std::int64_t>(3 + next(5));
    const auto px = static_cast<std::int64_t>(p[0]);
    const auto py = static_cast<std::int64_t>(p[1]);
    const auto x0 = px - 1 - static_cast<std::int64_t>(next(static_cast<std::uint64_t>(w - 2)));
    const auto y0 = py - 1 - static_cast<std::int64_t>(next(static_cast<std::uint64_t>(h - 2)));
    std::vector<Point> pts;
    for (auto x = std::max(x0, kLatticeMin); x <= std::min(x0 + w - 1, kLatticeMax); ++x) {
        for (auto y = std::max(y0, kLatticeMin); y <= std::min(y0 + h - 1, kLatticeMax); ++y) {
            pts.push_back(Point{static_cast<double>(x), static_cast<double>(y)});
        }
    }
    return Region(std::move(pts), 1.0);
}

namespace {

std::string show(const Region& r) { return describe_points(r); }

Region singleton(const Point& p) { return Region({p}, 1.0); }

// One trial of every axiom, all relations evaluated on the same instance.
void run_axiom_trial(RegionGenerator& gen, const ProximityConfig& base, const Region& universe,
                     AxiomReport& rep) {
    ProximityConfig cfg = base;
    cfg.universe = universe;
    const Region* X = &universe;
    const Region empty = Region::empty(2, 1.0);

    // Regions built around interior points of A make the strong-contact
    // hypotheses hold on a share of trials; a superset of B does the same for
    // dP4.
    const Region A = gen.region();
    const Region intA = interior(A);
    auto overlapping_or_random = [&] {
        return (!intA.is_empty() && gen.next(2) == 0) ? gen.rectangle_around(gen.member(intA)) : gen.region();
    };
    const Region B = overlapping_or_random();
    const Region C = gen.next(3) == 0 ? region_union(B, gen.region()) : gen.region();
    std::vector<Region> family;
    const std::size_t family_size = 2 + gen.next(4);
    for (std::size_t i = 0; i < family_size; ++i) family.push_back(overlapping_or_random());
    const Region intB = interior(B);
    const Point x = (!intA.is_empty() && gen.next(2) == 0) ? gen.member(intA) : gen.lattice_point();
    const Point y = gen.next(4) == 0 ? x : gen.lattice_point();
    const Region sx = singleton(x);
    const Region sy = singleton(y);

    auto ab = [&] { return "A=" + show(A) + " B=" + show(B); };
    auto phi_close = [&](const Point& p, const Point& q) {
        return linf_distance(phi_point(p, cfg.pipeline, cfg.context), phi_point(q, cfg.pipeline, cfg.context)) <=
               cfg.tol;
    };

    // Descriptive Lodato proximity.
    const bool near_ab = near_descriptive(A, B, cfg);
    const Region dint_ab = descriptive_intersection(A, B, cfg);
    rep.record("dP0", !near_descriptive(empty, A, cfg) && !near_descriptive(A, empty, cfg),
               [&] { return "A=" + show(A); });
    rep.record("dP1", near_ab == near_descriptive(B, A, cfg), ab);
    rep.record_implication("dP2", !dint_ab.is_empty(), near_ab, ab);
    rep.record("dP3", near_descriptive(A, region_union(B, C), cfg) == (near_ab || near_descriptive(A, C, cfg)),
               [&] { return ab() + " C=" + show(C); });
    {
        bool hyp = near_ab;
        for (std::size_t i = 0; hyp && i < B.size(); ++i) hyp = near_descriptive(singleton(B.points()[i]), C, cfg);
        rep.record_implication("dP4", hyp, hyp && near_descriptive(A, C, cfg),
                               [&] { return ab() + " C=" + show(C); });
    }
    rep.record_implication("dP5", near_descriptive(sx, sy, cfg), phi_close(x, y),
               [&] { return "x=" + show(sx) + " y=" + show(sy); });
    rep.record_implication("near=>meet", near_ab, !dint_ab.is_empty(), ab);
    rep.record_implication("meet=>near", !dint_ab.is_empty(), near_ab, ab);

    // Strong proximity.
    const bool sn_ab = strongly_near(A, B, X);
    rep.record("snN0", !strongly_near(empty, A, X) && !strongly_near(A, empty, X) && strongly_near(*X, A, X) &&
                           strongly_near(A, *X, X),
               [&] { return "A=" + show(A); });
    rep.record("snN1", sn_ab == strongly_near(B, A, X), ab);
    rep.record_implication("snN2", sn_ab, !region_intersection(A, B).is_empty(), ab);
    {
        Region all = family.front();
        for (std::size_t i = 1; i < family.size(); ++i) all = region_union(all, family[i]);
        const bool union_near = strongly_near(A, all, X);
        bool hyp = false;
        for (const auto& bi : family) {
            if (strongly_near(A, bi, X) && !interior(bi).is_empty()) hyp = true;
        }
        rep.record_implication("snN3", hyp, union_near, [&] { return "A=" + show(A) + " union=" + show(all); });
    }
    rep.record_implication("snN4", !antipodal_disjoint(intA, intB), sn_ab, ab);
    rep.record_implication("snN5", intA.contains(x), strongly_near(sx, A, X),
               [&] { return "x=" + show(sx) + " A=" + show(A); });
    rep.record("snN6", strongly_near(sx, sy, X) == (x == y), [&] { return "x=" + show(sx) + " y=" + show(sy); });

    // Descriptive strong proximity. dsnP3 has no counterpart to check.
    const bool dsn_ab = descriptively_strongly_near(A, B, cfg);
    rep.record("dsnP0", !descriptively_strongly_near(empty, A, cfg) && !descriptively_strongly_near(A, empty, cfg) &&
                            descriptively_strongly_near(*X, A, cfg) && descriptively_strongly_near(A, *X, cfg),
               [&] { return "A=" + show(A); });
    rep.record("dsnP1", dsn_ab == descriptively_strongly_near(B, A, cfg), ab);
    rep.record_implication("dsnP2", dsn_ab, !dint_ab.is_empty(), ab);
    rep.record_implication("dsnP4", !descriptive_intersection(intA, intB, cfg).is_empty(), dsn_ab, ab);
    {
        bool hyp = false;
        if (!intA.is_empty()) {
            const auto v = phi_point(x, cfg.pipeline, cfg.context);
            for (const auto& w : phi_region_set(intA, cfg.pipeline, cfg.context)) {
                if (linf_distance(v, w) <= cfg.tol) hyp = true;
            }
        }
        rep.record_implication("dsnP5", hyp, descriptively_strongly_near(sx, A, cfg),
                   [&] { return "x=" + show(sx) + " A=" + show(A); });
    }
    rep.record("dsnP6", descriptively_strongly_near(sx, sy, cfg) == phi_close(x, y),
               [&] { return "x=" + show(sx) + " y=" + show(sy); });
}

template <class Trial>
AxiomReport fan_out(std::uint64_t seed, std::size_t trials, std::size_t threads, const std::string& header,
                    Trial&& trial) {
    if (trials < 1) throw Error("trials must be >= 1");
    std::vector<AxiomReport> partial(trials);
    parallel_for(trials, worker_count(threads), [&](std::size_t i) {
        RegionGenerator gen(trial_seed(seed, i));
        trial(gen, partial[i]);
    });
    AxiomReport report;
    report.header = header;
    for (const auto& p : partial) report.merge(p);
    return report;
}

} // namespace

AxiomReport check_axioms(std::uint64_t seed, std::size_t trials, const ProximityConfig& cfg, std::size_t threads) {
    cfg.validate();
    const Region universe = RegionGenerator::universe();
    const std::string header =
        "finite instances only: lattice regions of 1-50 points in [-10,10]^2, unions over <= 5 sets; "
        "snN0/dsnP0 read as: empty set is near nothing, X is near every nonempty set; tol=" +
        format_double(cfg.tol) + " pipeline=" + cfg.pipeline.to_string();
    return fan_out(seed, trials, threads, header, [&](RegionGenerator& gen, AxiomReport& rep) {
        run_axiom_trial(gen, cfg, universe, rep);
    });
}

AxiomReport check_near_intersection(std::size_t trials, const ProximityConfig& cfg, std::uint64_t seed,
                               std::size_t threads) {
    cfg.validate();
    const std::string header = "near => nonempty descriptive intersection, and converse; tol=" + format_double(cfg.tol) +
                               " pipeline=" + cfg.pipeline.to_string();
    return fan_out(seed, trials, threads, header, [&](RegionGenerator& gen, AxiomReport& rep) {
        const Region A = gen.region();
        const Region B = gen.next(4) == 0 ? region_union(A, gen.region()) : gen.region();
        const bool near = near_descriptive(A, B, cfg);
        const bool meets = !descriptive_intersection(A, B, cfg).is_empty();
        auto ab = [&] { return "A=" + show(A) + " B=" + show(B); };
        rep.record_implication("near=>meet", near, meets, ab);
        rep.record_implication("meet=>near", meets, near, ab);
    });
}

} // namespace strbut
