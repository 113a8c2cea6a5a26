#include "strbut/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "strbut/io.hpp"

namespace strbut {

void ProximityConfig::validate() const {
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw Error("tolerance must be a finite value >= 0");
}

namespace {

// Distance from a description to the nearest member of a sorted set.
bool matches_any(const FeatureVector& v, const std::vector<FeatureVector>& set, double tol) {
    if (tol == 0.0) return std::binary_search(set.begin(), set.end(), v);
    return std::any_of(set.begin(), set.end(),
                       [&](const FeatureVector& w) { return linf_distance(v, w) <= tol; });
}

bool sets_match(const std::vector<FeatureVector>& a, const std::vector<FeatureVector>& b, double tol) {
    if (tol == 0.0) {
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j) ++i;
            else if (*j < *i) ++j;
            else return true;
        }
        return false;
    }
    for (const auto& v : a) {
        if (matches_any(v, b, tol)) return true;
    }
    return false;
}

bool is_universe(const Region& r, const Region* universe) {
    return universe != nullptr && !r.is_empty() && r == *universe;
}

void require_same_dim(const Region& a, const Region& b) {
    if (a.dim() != b.dim()) throw Error("dimension mismatch between regions");
}

} // namespace

bool near_descriptive(const Region& a, const Region& b, const ProximityConfig& cfg) {
    require_same_dim(a, b);
    if (a.is_empty() || b.is_empty()) return false;
    return sets_match(phi_region_set(a, cfg.pipeline, cfg.context),
                      phi_region_set(b, cfg.pipeline, cfg.context), cfg.tol);
}

Region descriptive_intersection(const Region& a, const Region& b, const ProximityConfig& cfg) {
    require_same_dim(a, b);
    const double res = std::max(a.resolution(), b.resolution());
    if (a.is_empty() || b.is_empty()) return Region::empty(a.dim(), res);
    const auto phi_a = phi_region_set(a, cfg.pipeline, cfg.context);
    const auto phi_b = phi_region_set(b, cfg.pipeline, cfg.context);
    std::vector<Point> out;
    const Region both = region_union(a, b);
    for (const auto& x : both.points()) {
        const auto v = phi_point(x, cfg.pipeline, cfg.context);
        if (matches_any(v, phi_a, cfg.tol) && matches_any(v, phi_b, cfg.tol)) out.push_back(x);
    }
    if (out.empty()) return Region::empty(a.dim(), res);
    return Region(std::move(out), res);
}

bool strongly_near(const Region& a, const Region& b, const Region* universe) {
    require_same_dim(a, b);
    if (a.is_empty() || b.is_empty()) return false;
    if (is_universe(a, universe) || is_universe(b, universe)) return true;
    if (a.is_singleton() && b.is_singleton()) return !antipodal_disjoint(a, b);
    if (a.is_singleton()) return !antipodal_disjoint(a, interior(b));
    if (b.is_singleton()) return !antipodal_disjoint(b, interior(a));
    return !antipodal_disjoint(interior(a), interior(b));
}

bool descriptively_strongly_near(const Region& a, const Region& b, const ProximityConfig& cfg) {
    require_same_dim(a, b);
    if (a.is_empty() || b.is_empty()) return false;
    const Region* universe = cfg.universe ? &*cfg.universe : nullptr;
    if (is_universe(a, universe) || is_universe(b, universe)) return true;

    auto singleton_vs = [&](const Region& single, const Region& other) {
        const auto v = phi_point(single.points().front(), cfg.pipeline, cfg.context);
        const Region target = other.is_singleton() ? other : interior(other);
        if (target.is_empty()) return false;
        return matches_any(v, phi_region_set(target, cfg.pipeline, cfg.context), cfg.tol);
    };
    if (a.is_singleton()) return singleton_vs(a, b);
    if (b.is_singleton()) return singleton_vs(b, a);
    return !descriptive_intersection(interior(a), interior(b), cfg).is_empty();
}

// ---------------------------------------------------------------------------
// Reports

bool AxiomReport::passed() const { return total_violations() == 0; }

std::size_t AxiomReport::total_violations() const {
    std::size_t v = 0;
    for (const auto& r : results) v += r.violations;
    return v;
}

AxiomResult& AxiomReport::entry(const std::string& axiom) {
    for (auto& r : results) {
        if (r.axiom == axiom) return r;
    }
    AxiomResult r;
    r.axiom = axiom;
    results.push_back(std::move(r));
    return results.back();
}

void AxiomReport::record(const std::string& axiom, bool holds, const std::function<std::string()>& describe) {
    auto& r = entry(axiom);
    ++r.trials;
    ++r.exercised;
    if (!holds) {
        ++r.violations;
        if (!r.counterexample) r.counterexample = describe();
    }
}

void AxiomReport::record_implication(const std::string& axiom, bool hypothesis, bool conclusion,
                                     const std::function<std::string()>& describe) {
    auto& r = entry(axiom);
    ++r.trials;
    if (!hypothesis) return;
    ++r.exercised;
    if (!conclusion) {
        ++r.violations;
        if (!r.counterexample) r.counterexample = describe();
    }
}

void AxiomReport::merge(const AxiomReport& other) {
    if (header.empty()) header = other.header;
    for (const auto& o : other.results) {
        auto& r = entry(o.axiom);
        r.trials += o.trials;
        r.exercised += o.exercised;
        r.violations += o.violations;
        if (!r.counterexample && o.counterexample) r.counterexample = o.counterexample;
    }
}

std::string AxiomReport::to_text() const {
    std::ostringstream out;
    if (!header.empty()) out << "# " << header << '\n';
    for (const auto& r : results) {
        out << r.axiom << " trials=" << r.trials << " exercised=" << r.exercised << " violations=" << r.violations << '\n';
        if (r.counterexample) out << "  counterexample: " << *r.counterexample << '\n';
    }
    out << "total violations=" << total_violations() << '\n';
    return out.str();
}

std::string describe_points(const Region& r) {
    std::string s = "{";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ';';
        s += '(';
        const auto& p = r.points()[i];
        for (std::size_t k = 0; k < p.dim(); ++k) {
            if (k) s += ',';
            s += format_double(p[k]);
        }
        s += ')';
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// Sample-level continuity

AxiomReport spc_check(const RegionMap& f, const std::vector<std::pair<Region, Region>>& pairs,
                      ContinuityMode mode, const ProximityConfig& cfg) {
    cfg.validate();
    AxiomReport report;
    const bool spatial = mode == ContinuityMode::spatial_strong;
    const std::string name = spatial ? "s.p.c." : "Re.d.s.p.c.";
    report.header = name + " checked on " + std::to_string(pairs.size()) + " supplied pairs only";
    report.entry(name);
    const Region* universe = cfg.universe ? &*cfg.universe : nullptr;
    for (const auto& [a, b] : pairs) {
        const bool source = spatial ? strongly_near(a, b, universe) : descriptively_strongly_near(a, b, cfg);
        if (!source) continue;
        const Region fa = f(a);
        const Region fb = f(b);
        const bool target = spatial ? strongly_near(fa, fb, universe) : descriptively_strongly_near(fa, fb, cfg);
        report.record_implication(name, true, target, [&] {
            return "A=" + describe_points(a) + " B=" + describe_points(b) + " f(A)=" + describe_points(fa) +
                   " f(B)=" + describe_points(fb);
        });
    }
    return report;
}

} // namespace strbut
