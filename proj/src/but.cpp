#include "strbut/but.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "strbut/io.hpp"
#include "strbut/worldsheet.hpp"
#include "strbut/parallel.hpp"

namespace strbut {

std::string to_string(MemberKind kind) {
    switch (kind) {
    case MemberKind::region: return "region";
    case MemberKind::string: return "string";
    case MemberKind::worldsheet: return "worldsheet";
    }
    return "?";
}

namespace {

MemberKind kind_of(const FamilyMember& m) { return static_cast<MemberKind>(m.index()); }

std::size_t dim_of(const FamilyMember& m) {
    return std::visit([](const auto& x) { return x.dim(); }, m);
}

template <class T>
std::vector<FamilyMember> wrap(std::vector<T> members) {
    std::vector<FamilyMember> out;
    out.reserve(members.size());
    for (auto& m : members) out.emplace_back(std::move(m));
    return out;
}

} // namespace

RegionFamily::RegionFamily(std::vector<FamilyMember> members, MemberKind kind, double resolution)
    : members_(std::move(members)), kind_(kind), resolution_(resolution) {
    validate();
}

void RegionFamily::validate() const {
    if (members_.empty()) throw Error("region family must be nonempty");
    if (!(resolution_ > 0.0)) throw Error("family resolution must be positive");
    const std::size_t d = dim_of(members_.front());
    for (const auto& m : members_) {
        if (kind_of(m) != kind_) throw Error("region family mixes member kinds");
        if (dim_of(m) != d) throw Error("region family mixes dimensions");
        if (const auto* r = std::get_if<Region>(&m); r && r->is_empty()) {
            throw Error("region family members must be nonempty");
        }
    }
}

RegionFamily::RegionFamily(std::vector<Region> members)
    : kind_(MemberKind::region), resolution_(members.empty() ? kDefaultResolution : members.front().resolution()) {
    members_ = wrap(std::move(members));
    validate();
}

RegionFamily::RegionFamily(std::vector<StringPath> members, double resolution)
    : RegionFamily(wrap(std::move(members)), MemberKind::string, resolution) {}

RegionFamily::RegionFamily(std::vector<Worldsheet> members, double resolution)
    : RegionFamily(wrap(std::move(members)), MemberKind::worldsheet, resolution) {}

RegionFamily RegionFamily::from_members(std::vector<FamilyMember> members, double resolution) {
    if (members.empty()) throw Error("region family must be nonempty");
    const MemberKind kind = kind_of(members.front());
    if (kind == MemberKind::region) resolution = std::get<Region>(members.front()).resolution();
    return RegionFamily(std::move(members), kind, resolution);
}

RegionFamily RegionFamily::load_directory(const std::filesystem::path& dir, double resolution) {
    if (!std::filesystem::is_directory(dir)) throw Error("not a directory: '" + dir.string() + "'");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<FamilyMember> members;
    for (const auto& f : files) {
        const CsvTable table = read_csv_file(f);
        if (!table.header.empty() && table.header.front() == "t") {
            members.emplace_back(string_from_table(table));
        } else {
            members.emplace_back(region_from_table(table, resolution));
        }
    }
    if (members.empty()) throw Error("no .csv files in '" + dir.string() + "'");
    const MemberKind kind = kind_of(members.front());
    return RegionFamily(std::move(members), kind, resolution);
}

std::size_t RegionFamily::dim() const { return dim_of(members_.front()); }

void RegionFamily::set_antipode_pairing(std::vector<std::size_t> pairing) {
    if (pairing.size() != members_.size()) throw Error("antipode pairing must cover every member");
    for (std::size_t i = 0; i < pairing.size(); ++i) {
        if (pairing[i] >= pairing.size() || pairing[pairing[i]] != i) {
            throw Error("antipode pairing must be an involution on indices");
        }
    }
    pairing_ = std::move(pairing);
}

RegionFamily RegionFamily::permuted(const std::vector<std::size_t>& order) const {
    if (order.size() != members_.size()) throw Error("permutation size mismatch");
    std::vector<FamilyMember> out;
    std::vector<std::size_t> inverse(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= order.size() || inverse[order[i]] != order.size()) throw Error("not a permutation");
        inverse[order[i]] = i;
        out.push_back(members_[order[i]]);
    }
    RegionFamily f(std::move(out), kind_, resolution_);
    if (pairing_) {
        std::vector<std::size_t> p(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) p[i] = inverse[(*pairing_)[order[i]]];
        f.pairing_ = std::move(p);
    }
    return f;
}

FeatureVector describe_member(const RegionFamily& family, std::size_t i, const DescriptorPipeline& pipeline,
                              const DescriptionContext& ctx) {
    DescriptionContext local = ctx;
    local.string_resolution = family.resolution();
    return std::visit([&](const auto& m) { return describe_region(m, pipeline, local); }, family[i]);
}

bool members_antipodal(const RegionFamily& family, std::size_t i, std::size_t j, AntipodalityMode mode) {
    const double res = family.resolution();
    switch (family.kind()) {
    case MemberKind::region:
        return is_antipodal(std::get<Region>(family[i]), std::get<Region>(family[j]), mode);
    case MemberKind::string:
        return is_antipodal(std::get<StringPath>(family[i]).vertex_region(res),
                            std::get<StringPath>(family[j]).vertex_region(res), mode);
    case MemberKind::worldsheet:
        return antipodal_worldsheets(std::get<Worldsheet>(family[i]), std::get<Worldsheet>(family[j]), mode, res);
    }
    return false;
}

std::vector<std::pair<std::size_t, std::size_t>> MatchResult::index_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.emplace_back(p.index_a, p.index_b);
    return out;
}

namespace {

void check_searchable(const RegionFamily& family, const ProximityConfig& cfg) {
    cfg.validate();
    if (family.size() < 2) throw Error("matching search needs at least 2 family members");
}

bool pair_less(const MatchedPair& a, const MatchedPair& b) {
    return std::tie(a.index_a, a.index_b) < std::tie(b.index_a, b.index_b);
}

} // namespace

MatchResult find_matching_antipodal(const RegionFamily& family, const ProximityConfig& cfg, std::size_t threads) {
    check_searchable(family, cfg);
    const std::size_t m = family.size();
    const std::size_t workers = worker_count(threads);

    std::vector<FeatureVector> desc(m);
    parallel_for(m, workers, [&](std::size_t i) { desc[i] = describe_member(family, i, cfg.pipeline, cfg.context); });

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return desc[a][0] < desc[b][0]; });

    // |a0 - b0| <= ||a - b||_inf, so once the sorted first coordinates drift
    // apart by more than tol no later member can match.
    std::vector<std::vector<MatchedPair>> found(m);
    std::vector<std::size_t> compared(m, 0);
    parallel_for(m, workers, [&](std::size_t p) {
        const std::size_t i = order[p];
        for (std::size_t q = p + 1; q < m; ++q) {
            const std::size_t j = order[q];
            if (std::abs(desc[j][0] - desc[i][0]) > cfg.tol) break;
            ++compared[p];
            const double mismatch = linf_distance(desc[i], desc[j]);
            if (mismatch > cfg.tol) continue;
            const auto [a, b] = std::minmax(i, j);
            if (!members_antipodal(family, a, b, cfg.antipodality_mode)) continue;
            found[p].push_back(MatchedPair{a, b, desc[a], desc[b], mismatch});
        }
    });

    MatchResult result;
    result.tol = cfg.tol;
    result.mode = cfg.antipodality_mode;
    for (std::size_t p = 0; p < m; ++p) {
        result.comparisons += compared[p];
        result.pairs.insert(result.pairs.end(), found[p].begin(), found[p].end());
    }
    std::sort(result.pairs.begin(), result.pairs.end(), pair_less);
    return result;
}

MatchResult brute_force_oracle(const RegionFamily& family, const ProximityConfig& cfg) {
    check_searchable(family, cfg);
    if (family.size() > 1000) throw Error("oracle is limited to families of at most 1000 members");
    MatchResult result;
    result.tol = cfg.tol;
    result.mode = cfg.antipodality_mode;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            ++result.comparisons;
            const bool antipodal = members_antipodal(family, i, j, cfg.antipodality_mode);
            const FeatureVector da = describe_member(family, i, cfg.pipeline, cfg.context);
            const FeatureVector db = describe_member(family, j, cfg.pipeline, cfg.context);
            double mismatch = 0.0;
            for (std::size_t k = 0; k < da.size(); ++k) mismatch = std::max(mismatch, std::abs(da[k] - db[k]));
            if (antipodal && mismatch <= cfg.tol) result.pairs.push_back(MatchedPair{i, j, da, db, mismatch});
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Sphere witness

Region spherical_cap(const std::vector<Point>& sample, const Point& centre, double radius_rad, double resolution) {
    const double threshold = std::cos(radius_rad) - 1e-12;
    std::vector<Point> pts;
    for (const auto& p : sample) {
        if (dot(p, centre) >= threshold) pts.push_back(p);
    }
    if (pts.empty()) return Region::empty(centre.dim(), resolution);
    return Region(std::move(pts), resolution);
}

namespace {

// Portable uniform draws; std distributions differ between standard libraries.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : state_(seed ^ 0xD1B54A32D192ED03ULL) {}
    std::uint64_t bits() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(bits() % n);
    }

private:
    std::uint64_t state_;
};

} // namespace

SphereWitness verify_strbut_on_sphere(std::size_t n, std::size_t caps, std::uint64_t seed,
                                      const ProximityConfig& cfg, const SphereWitnessOptions& options) {
    if (n < 1) throw Error("sphere dimension must be >= 1");
    if (caps < 1) throw Error("need at least one cap");
    if (!cfg.pipeline.isometry_invariant()) {
        throw Error("sphere witness needs an isometry-invariant pipeline (no centroid/corner_level)");
    }
    const auto sample = sphere_sample(n, options.sample_size, seed);
    Uniform rng(seed);

    std::vector<Region> members;
    std::vector<std::size_t> pairing;
    SphereWitness out;
    out.caps = caps;
    std::vector<bool> degenerate(caps, false);
    for (std::size_t c = 0; c < caps; ++c) {
        const Point& centre = sample[rng.index(sample.size())];
        const double deg = options.cap_radius_deg ? *options.cap_radius_deg : 10.0 + 70.0 * rng.unit();
        const Region cap = spherical_cap(sample, centre, deg * std::numbers::pi / 180.0);
        const Region anti = antipode_map(SphericalRegion(cap)).region();
        if (cap == anti) degenerate[c] = true;
        members.push_back(cap);
        members.push_back(anti);
        pairing.push_back(2 * c + 1);
        pairing.push_back(2 * c);
    }
    RegionFamily family(std::move(members));
    family.set_antipode_pairing(std::move(pairing));
    out.result = find_matching_antipodal(family, cfg, options.threads);

    for (std::size_t c = 0; c < caps; ++c) {
        if (degenerate[c]) {
            ++out.degenerate_caps;
            continue;
        }
        const MatchedPair key{2 * c, 2 * c + 1, {}, {}, 0.0};
        const auto it = std::lower_bound(out.result.pairs.begin(), out.result.pairs.end(), key, pair_less);
        if (it != out.result.pairs.end() && it->index_a == 2 * c && it->index_b == 2 * c + 1 && it->mismatch == 0.0) {
            ++out.matched_caps;
        }
    }
    if (out.degenerate_caps > 0) {
        out.warnings.push_back(std::to_string(out.degenerate_caps) +
                               " cap(s) equal their own antipode; no antipodal pair exists for them");
    }
    out.pass = out.matched_caps + out.degenerate_caps == caps;
    return out;
}

} // namespace strbut
