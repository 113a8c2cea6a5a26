#include "strbut/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace strbut {

namespace {

void require_same_dim(const Region& a, const Region& b) {
    if (a.dim() != b.dim()) {
        throw Error("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
    }
}

// Keys of a region's points at an arbitrary pitch (may differ from its own).
std::vector<CellKey> keys_at(const Region& r, double resolution) {
    if (resolution == r.resolution()) return r.keys();
    std::vector<CellKey> keys;
    keys.reserve(r.size());
    for (const auto& p : r.points()) keys.push_back(snap(p, resolution));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

bool sorted_contains(const std::vector<CellKey>& keys, const CellKey& k) {
    return std::binary_search(keys.begin(), keys.end(), k);
}

bool keys_intersect(const std::vector<CellKey>& a, const std::vector<CellKey>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

} // namespace

// ---------------------------------------------------------------------------
// Point

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error("point must have dimension >= 1");
    for (double c : coords_) {
        if (!std::isfinite(c)) throw Error("point coordinates must be finite");
    }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point Point::operator-() const {
    std::vector<double> neg(coords_.size());
    std::transform(coords_.begin(), coords_.end(), neg.begin(), [](double c) { return -c; });
    return Point(std::move(neg));
}

double dot(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw Error("dimension mismatch in dot product");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double distance(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw Error("dimension mismatch in distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

CellKey snap(const Point& p, double resolution) {
    CellKey key(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double scaled = p[i] / resolution;
        if (std::abs(scaled) > 4.0e18) throw Error("coordinate too large for grid resolution");
        // llround rounds halves away from zero, so snap(-p) == -snap(p).
        key[i] = std::llround(scaled);
    }
    return key;
}

// ---------------------------------------------------------------------------
// Region

Region::Region(std::size_t dim, double resolution) : dim_(dim), resolution_(resolution) {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw Error("region resolution must be a positive finite number");
    }
}

Region::Region(std::vector<Point> points, double resolution)
    : Region(points.empty() ? 0 : points.front().dim(), resolution) {
    if (points.empty()) throw Error("region must be nonempty");
    for (const auto& p : points) {
        if (p.dim() != dim_) throw Error("dimension mismatch among region points");
    }

    std::vector<CellKey> keys;
    keys.reserve(points.size());
    for (const auto& p : points) keys.push_back(snap(p, resolution_));

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return keys[i] < keys[j]; });

    for (std::size_t idx : order) {
        if (!keys_.empty() && keys_.back() == keys[idx]) continue;
        keys_.push_back(std::move(keys[idx]));
        points_.push_back(std::move(points[idx]));
    }
}

Region Region::empty(std::size_t dim, double resolution) {
    if (dim == 0) throw Error("region dimension must be >= 1");
    return Region(dim, resolution);
}

bool Region::contains_cell(const CellKey& key) const { return sorted_contains(keys_, key); }

bool Region::contains(const Point& p) const {
    return p.dim() == dim_ && contains_cell(snap(p, resolution_));
}

bool operator==(const Region& a, const Region& b) {
    return a.dim_ == b.dim_ && a.resolution_ == b.resolution_ && a.keys_ == b.keys_;
}

namespace {

enum class SetOp { unite, intersect, subtract };

Region combine(const Region& a, const Region& b, SetOp op) {
    require_same_dim(a, b);
    const double res = std::max(a.resolution(), b.resolution());
    const auto b_keys = keys_at(b, res);
    std::vector<Point> out;
    std::vector<CellKey> seen;
    for (const auto& p : a.points()) {
        const bool in_b = sorted_contains(b_keys, snap(p, res));
        if (op == SetOp::unite || (op == SetOp::intersect) == in_b) out.push_back(p);
    }
    if (op == SetOp::unite) {
        const auto a_keys = keys_at(a, res);
        for (const auto& p : b.points()) {
            if (!sorted_contains(a_keys, snap(p, res))) out.push_back(p);
        }
    }
    if (out.empty()) return Region::empty(a.dim(), res);
    return Region(std::move(out), res);
}

} // namespace

Region region_union(const Region& a, const Region& b) { return combine(a, b, SetOp::unite); }

Region region_intersection(const Region& a, const Region& b) {
    return combine(a, b, SetOp::intersect);
}

Region region_difference(const Region& a, const Region& b) {
    return combine(a, b, SetOp::subtract);
}

bool is_subset(const Region& a, const Region& b) {
    require_same_dim(a, b);
    const double res = std::max(a.resolution(), b.resolution());
    const auto a_keys = keys_at(a, res);
    const auto b_keys = keys_at(b, res);
    return std::includes(b_keys.begin(), b_keys.end(), a_keys.begin(), a_keys.end());
}

Region interior(const Region& a) {
    std::vector<Point> inner;
    CellKey probe;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const CellKey& key = a.keys()[i];
        bool surrounded = true;
        for (std::size_t axis = 0; axis < a.dim() && surrounded; ++axis) {
            for (int step : {-1, 1}) {
                probe = key;
                probe[axis] += step;
                if (!a.contains_cell(probe)) {
                    surrounded = false;
                    break;
                }
            }
        }
        if (surrounded) inner.push_back(a.points()[i]);
    }
    if (inner.empty()) return Region::empty(a.dim(), a.resolution());
    return Region(std::move(inner), a.resolution());
}

// ---------------------------------------------------------------------------
// Sphere

SphericalRegion::SphericalRegion(Region region) : region_(std::move(region)) {
    if (region_.dim() < 2) throw Error("spherical region needs ambient dimension >= 2");
    for (const auto& p : region_.points()) {
        if (std::abs(norm(p) - 1.0) > 1e-9) throw Error("spherical region point off the unit sphere");
    }
}

SphericalRegion antipode_map(const SphericalRegion& a) {
    const Region& r = a.region();
    if (r.is_empty()) return a;
    std::vector<Point> neg;
    neg.reserve(r.size());
    for (const auto& p : r.points()) neg.push_back(-p);
    return SphericalRegion(Region(std::move(neg), r.resolution()));
}

std::vector<Point> sphere_sample(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1) throw Error("sphere dimension must be >= 1");
    if (m < 2 || m % 2 != 0) throw Error("sphere sample count must be even and >= 2");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Point> out;
    out.reserve(m);
    while (out.size() < m / 2) {
        std::vector<double> v(n + 1);
        double len2 = 0.0;
        for (double& c : v) {
            c = gauss(rng);
            len2 += c * c;
        }
        if (len2 < 1e-24) continue;
        const double len = std::sqrt(len2);
        for (double& c : v) c /= len;
        out.emplace_back(std::move(v));
    }
    for (std::size_t i = 0; i < m / 2; ++i) out.push_back(-out[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Strings and worldsheets

StringPath::StringPath(std::vector<Point> vertices, std::vector<double> params)
    : vertices_(std::move(vertices)), params_(std::move(params)) {
    if (vertices_.size() < 2) throw Error("string needs at least 2 vertices");
    if (params_.size() != vertices_.size()) throw Error("string params/vertices length mismatch");
    for (const auto& v : vertices_) {
        if (v.dim() != vertices_.front().dim()) throw Error("dimension mismatch among string vertices");
    }
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (!std::isfinite(params_[i])) throw Error("string params must be finite");
        if (i > 0 && !(params_[i] > params_[i - 1])) {
            throw Error("string params must be strictly increasing");
        }
    }
    if (!(arc_length() > 0.0)) throw Error("string must have positive arc length");
}

namespace {
std::vector<double> iota_params(std::size_t n) {
    std::vector<double> t(n);
    std::iota(t.begin(), t.end(), 0.0);
    return t;
}
} // namespace

StringPath::StringPath(std::vector<Point> vertices)
    : StringPath(vertices, iota_params(vertices.size())) {}

double StringPath::arc_length() const {
    double len = 0.0;
    for (std::size_t i = 1; i < vertices_.size(); ++i) len += distance(vertices_[i - 1], vertices_[i]);
    return len;
}

Region StringPath::vertex_region(double resolution) const { return Region(vertices_, resolution); }

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const std::size_t n = p.dim();
    if (a.dim() != n || b.dim() != n) throw Error("dimension mismatch in segment distance");
    double ab2 = 0.0, ap_ab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ab = b[i] - a[i];
        ab2 += ab * ab;
        ap_ab += (p[i] - a[i]) * ab;
    }
    const double t = ab2 > 0.0 ? std::clamp(ap_ab / ab2, 0.0, 1.0) : 0.0;
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = p[i] - (a[i] + t * (b[i] - a[i]));
        d2 += d * d;
    }
    return std::sqrt(d2);
}

bool cover_check(std::span<const StringPath> strings, const Region& carrier) {
    if (carrier.is_empty()) throw Error("worldsheet carrier must be nonempty");
    const double pitch = carrier.resolution();
    for (const auto& key : carrier.keys()) {
        std::vector<double> centre(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) centre[i] = static_cast<double>(key[i]) * pitch;
        const Point c(std::move(centre));
        bool hit = false;
        for (const auto& s : strings) {
            if (s.dim() != carrier.dim()) throw Error("string/carrier dimension mismatch");
            const auto& v = s.vertices();
            for (std::size_t i = 1; i < v.size() && !hit; ++i) {
                hit = point_segment_distance(c, v[i - 1], v[i]) <= pitch;
            }
            if (hit) break;
        }
        if (!hit) return false;
    }
    return true;
}

Worldsheet::Worldsheet(std::vector<StringPath> strings, Region carrier)
    : strings_(std::move(strings)), carrier_(std::move(carrier)) {
    if (strings_.empty()) throw Error("worldsheet needs at least one string");
    if (!cover_check(strings_, carrier_)) throw Error("strings do not cover the worldsheet carrier");
}

bool cover_check(const Worldsheet& w) { return cover_check(w.strings(), w.carrier()); }

// ---------------------------------------------------------------------------
// Hyperplanes and antipodality

Hyperplane Hyperplane::make(std::vector<double> normal, double offset) {
    double len2 = 0.0;
    for (double c : normal) len2 += c * c;
    const double len = std::sqrt(len2);
    if (normal.empty() || !(len > 0.0) || !std::isfinite(len)) throw Error("hyperplane normal must be nonzero");
    for (double& c : normal) c /= len;
    return Hyperplane{std::move(normal), offset / len};
}

double Hyperplane::signed_distance(const Point& p) const {
    if (p.dim() != normal.size()) throw Error("dimension mismatch against hyperplane");
    double s = 0.0;
    for (std::size_t i = 0; i < normal.size(); ++i) s += p[i] * normal[i];
    return s - offset;
}

bool Hyperplane::contains(const Point& p, double tol) const { return std::abs(signed_distance(p)) <= tol; }

bool are_disjoint_parallel(const Hyperplane& p, const Hyperplane& q) {
    if (p.normal.size() != q.normal.size()) return false;
    auto same = [&](double sign) {
        for (std::size_t i = 0; i < p.normal.size(); ++i) {
            if (std::abs(p.normal[i] - sign * q.normal[i]) > 1e-12) return false;
        }
        return true;
    };
    if (same(1.0)) return std::abs(p.offset - q.offset) > 2 * kPlaneTolerance;
    if (same(-1.0)) return std::abs(p.offset + q.offset) > 2 * kPlaneTolerance;
    return false;
}

bool antipodal_disjoint(const Region& a, const Region& b) {
    require_same_dim(a, b);
    const double res = std::max(a.resolution(), b.resolution());
    return !keys_intersect(keys_at(a, res), keys_at(b, res));
}

bool antipodal_symmdiff(const Region& a, const Region& b) {
    require_same_dim(a, b);
    const double res = std::max(a.resolution(), b.resolution());
    return keys_at(a, res) != keys_at(b, res);
}

namespace {

Region on_plane(const Region& r, const Hyperplane& h) {
    std::vector<Point> pts;
    for (const auto& p : r.points()) {
        if (h.contains(p)) pts.push_back(p);
    }
    if (pts.empty()) return Region::empty(r.dim(), r.resolution());
    return Region(std::move(pts), r.resolution());
}

// Planes normal to `normal` through offsets a_off, b_off, if they yield a
// valid witness.
std::optional<SeparationWitness> try_planes(const Region& a, const Region& b,
                                            const std::vector<double>& normal, double a_off,
                                            double b_off) {
    if (std::abs(a_off - b_off) <= 2 * kPlaneTolerance) return std::nullopt;
    SeparationWitness w{Hyperplane{normal, a_off}, Hyperplane{normal, b_off},
                        Region::empty(a.dim(), a.resolution()), Region::empty(b.dim(), b.resolution())};
    w.witness_a = on_plane(a, w.plane_a);
    w.witness_b = on_plane(b, w.plane_b);
    if (w.witness_a.is_empty() || w.witness_b.is_empty()) return std::nullopt;
    if (!antipodal_disjoint(w.witness_a, w.witness_b)) return std::nullopt;
    return w;
}

std::optional<SeparationWitness> try_normal(const Region& a, const Region& b,
                                            const std::vector<double>& normal) {
    const Hyperplane through_origin{normal, 0.0};
    // Offsets in point order; the first A offset paired with the farthest B
    // offset is the most robust choice, then fall back to any other pairing.
    std::vector<double> a_off, b_off;
    for (const auto& p : a.points()) a_off.push_back(through_origin.signed_distance(p));
    for (const auto& q : b.points()) b_off.push_back(through_origin.signed_distance(q));
    for (double ao : a_off) {
        const auto far = std::max_element(b_off.begin(), b_off.end(), [&](double x, double y) {
            return std::abs(x - ao) < std::abs(y - ao);
        });
        if (auto w = try_planes(a, b, normal, ao, *far)) return w;
    }
    return std::nullopt;
}

} // namespace

std::optional<SeparationWitness> antipodal_separable(const Region& a, const Region& b) {
    require_same_dim(a, b);
    if (a.is_empty() || b.is_empty()) return std::nullopt;
    const std::size_t n = a.dim();

    for (std::size_t axis = 0; axis < n; ++axis) {
        std::vector<double> e(n, 0.0);
        e[axis] = 1.0;
        if (auto w = try_normal(a, b, e)) return w;
    }
    for (const auto& p : a.points()) {
        for (const auto& q : b.points()) {
            std::vector<double> d(n);
            double len2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = q[i] - p[i];
                len2 += d[i] * d[i];
            }
            if (len2 <= 0.0) continue;
            const Hyperplane h = Hyperplane::make(std::move(d), 0.0);
            if (auto w = try_planes(a, b, h.normal, h.signed_distance(p), h.signed_distance(q))) return w;
        }
    }
    return std::nullopt;
}

AntipodalityMode parse_antipodality_mode(const std::string& text) {
    if (text == "disjoint") return AntipodalityMode::disjoint;
    if (text == "symmdiff") return AntipodalityMode::symmdiff;
    if (text == "separable") return AntipodalityMode::separable;
    throw Error("unknown antipodality mode '" + text + "' (expected disjoint|symmdiff|separable)");
}

std::string to_string(AntipodalityMode mode) {
    switch (mode) {
    case AntipodalityMode::disjoint: return "disjoint";
    case AntipodalityMode::symmdiff: return "symmdiff";
    case AntipodalityMode::separable: return "separable";
    }
    return "disjoint";
}

bool is_antipodal(const Region& a, const Region& b, AntipodalityMode mode) {
    switch (mode) {
    case AntipodalityMode::disjoint: return antipodal_disjoint(a, b);
    case AntipodalityMode::symmdiff: return antipodal_symmdiff(a, b);
    case AntipodalityMode::separable: return antipodal_separable(a, b).has_value();
    }
    return false;
}

} // namespace strbut
