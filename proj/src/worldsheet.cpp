#include "strbut/worldsheet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace strbut {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
        else comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct Vec3 {
    double x, y, z;
};

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double dot3(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

} // namespace

// ---------------------------------------------------------------------------
// Flat sheet and cylinder

FlatSheet::FlatSheet(double width, double height, std::size_t string_count)
    : width_(width), height_(height), string_count_(string_count) {
    if (!(width > 0.0) || !std::isfinite(width) || !(height > 0.0) || !std::isfinite(height)) {
        throw Error("sheet width and height must be finite and positive");
    }
    if (string_count < 2) throw Error("sheet raster needs at least 2 strings");
}

std::vector<StringPath> FlatSheet::strings(std::size_t samples) const {
    if (samples < 2) throw Error("strings need at least 2 samples");
    std::vector<StringPath> out;
    for (std::size_t i = 0; i < string_count_; ++i) {
        const double t = height_ * static_cast<double>(i) / static_cast<double>(string_count_ - 1);
        std::vector<Point> pts;
        std::vector<double> params;
        for (std::size_t k = 0; k < samples; ++k) {
            const double s = width_ * static_cast<double>(k) / static_cast<double>(samples - 1);
            pts.push_back(Point{s, t});
            params.push_back(s);
        }
        out.emplace_back(std::move(pts), std::move(params));
    }
    return out;
}

Worldsheet FlatSheet::worldsheet(double resolution, std::size_t samples) const {
    const auto nx = static_cast<std::size_t>(std::floor(width_ / resolution + 1e-9));
    const auto ny = static_cast<std::size_t>(std::floor(height_ / resolution + 1e-9));
    std::vector<Point> carrier;
    for (std::size_t i = 0; i <= nx; ++i) {
        for (std::size_t j = 0; j <= ny; ++j) {
            carrier.push_back(Point{static_cast<double>(i) * resolution, static_cast<double>(j) * resolution});
        }
    }
    return Worldsheet(strings(samples), Region(std::move(carrier), resolution));
}

double Cylinder::lateral_area() const { return kTwoPi * radius * height; }

Point cylinder_point(double s, double t, double radius) {
    return Point{radius * std::cos(s / radius), radius * std::sin(s / radius), t};
}

Cylinder roll_to_cylinder(const FlatSheet& sheet, std::size_t samples) {
    Cylinder cyl;
    cyl.radius = sheet.width() / kTwoPi;
    cyl.height = sheet.height();
    for (const auto& s : sheet.strings(samples)) {
        std::vector<Point> pts;
        for (const auto& p : s.vertices()) pts.push_back(cylinder_point(p[0], p[1], cyl.radius));
        cyl.strings.emplace_back(std::move(pts), s.params());
    }
    return cyl;
}

// ---------------------------------------------------------------------------
// Ring torus

RingTorus::RingTorus(double c, double r) : c_(c), r_(r) {
    if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(c)) throw Error("torus radii must be finite and positive");
    if (!(c > r)) throw Error("ring torus requires c > r");
}

RingTorus bend_to_torus(double radius, double height) {
    if (!(radius > 0.0)) throw Error("cylinder radius must be positive");
    if (!(height > kTwoPi * radius)) throw Error("bending needs h > 2*pi*r so that c > r");
    return RingTorus(height / kTwoPi, radius);
}

Point torus_point(double u, double v, const RingTorus& t) {
    const double ring = t.c() + t.r() * std::cos(v);
    return Point{ring * std::cos(u), ring * std::sin(u), t.r() * std::sin(v)};
}

double torus_implicit_residual(const Point& p, const RingTorus& t) {
    if (p.dim() != 3) throw Error("torus residual needs a 3D point");
    const double rho = std::hypot(p[0], p[1]) - t.c();
    return rho * rho + p[2] * p[2] - t.r() * t.r();
}

double torus_surface_area(const RingTorus& t) { return 4.0 * std::numbers::pi * std::numbers::pi * t.c() * t.r(); }

double torus_volume(const RingTorus& t) { return 2.0 * std::numbers::pi * std::numbers::pi * t.c() * t.r() * t.r(); }

double torus_area_quadrature(const RingTorus& t, std::size_t n) {
    if (n < 16) throw Error("quadrature grid must be at least 16 x 16");
    const double h = kTwoPi / static_cast<double>(n);
    const double c = t.c(), r = t.r();
    CompensatedSum total;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (static_cast<double>(i) + 0.5) * h;
        const double cu = std::cos(u), su = std::sin(u);
        CompensatedSum row;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = (static_cast<double>(j) + 0.5) * h;
            const double cv = std::cos(v), sv = std::sin(v);
            const Vec3 du{-(c + r * cv) * su, (c + r * cv) * cu, 0.0};
            const Vec3 dv{-r * sv * cu, -r * sv * su, r * cv};
            const Vec3 nrm = cross(du, dv);
            row.add(std::sqrt(dot3(nrm, nrm)));
        }
        total.add(row.value());
    }
    return total.value() * h * h;
}

double torus_volume_quadrature(const RingTorus& t, std::size_t n) {
    if (n < 16) throw Error("quadrature grid must be at least 16 per axis");
    const double ha = kTwoPi / static_cast<double>(n);
    const double hr = t.r() / static_cast<double>(n);
    const double c = t.c();
    std::vector<double> cosv(n), sinv(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double v = (static_cast<double>(j) + 0.5) * ha;
        cosv[j] = std::cos(v);
        sinv[j] = std::sin(v);
    }
    CompensatedSum total;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (static_cast<double>(i) + 0.5) * ha;
        const double cu = std::cos(u), su = std::sin(u);
        CompensatedSum slab;
        for (std::size_t k = 0; k < n; ++k) {
            const double rho = (static_cast<double>(k) + 0.5) * hr;
            for (std::size_t j = 0; j < n; ++j) {
                const double cv = cosv[j], sv = sinv[j];
                const Vec3 drho{cv * cu, cv * su, sv};
                const Vec3 du{-(c + rho * cv) * su, (c + rho * cv) * cu, 0.0};
                const Vec3 dv{-rho * sv * cu, -rho * sv * su, rho * cv};
                slab.add(std::abs(dot3(drho, cross(du, dv))));
            }
        }
        total.add(slab.value());
    }
    return total.value() * ha * ha * hr;
}

bool antipodal_worldsheets(const Worldsheet& w1, const Worldsheet& w2, AntipodalityMode mode, double resolution) {
    if (w1.dim() != w2.dim()) throw Error("dimension mismatch between worldsheets");
    auto cells = [&](const Worldsheet& w) {
        std::vector<Region> out;
        for (const auto& s : w.strings()) out.push_back(s.vertex_region(resolution));
        return out;
    };
    const auto r1 = cells(w1);
    const auto r2 = cells(w2);
    auto escapes = [&](const Region& s, const std::vector<Region>& others) {
        return std::all_of(others.begin(), others.end(), [&](const Region& o) { return is_antipodal(s, o, mode); });
    };
    return std::any_of(r1.begin(), r1.end(), [&](const Region& s) { return escapes(s, r2); }) ||
           std::any_of(r2.begin(), r2.end(), [&](const Region& s) { return escapes(s, r1); });
}

bool antipodal_worldsheets(const Worldsheet& w1, const Worldsheet& w2, double resolution) {
    return antipodal_worldsheets(w1, w2, AntipodalityMode::disjoint, resolution);
}

} // namespace strbut
