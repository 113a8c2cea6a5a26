#pragma once

// Flat worldsheet -> cylinder -> ring torus, closed-form torus measures and
// quadrature cross-checks.

#include <cstddef>
#include <vector>

#include "strbut/geometry.hpp"

namespace strbut {

/// A w x h rectangle rastered by `string_count` horizontal strings.
class FlatSheet {
public:
    FlatSheet(double width, double height, std::size_t string_count = 2);

    double width() const { return width_; }
    double height() const { return height_; }
    std::size_t string_count() const { return string_count_; }
    double area() const { return width_ * height_; }

    /// Horizontal strings at heights h*i/(count-1), each sampled at
    /// `samples` evenly spaced points.
    std::vector<StringPath> strings(std::size_t samples = 64) const;

    /// The sheet as a worldsheet whose carrier is the lattice of pitch
    /// `resolution` over [0,w] x [0,h]. Throws if the raster is too sparse to
    /// cover every carrier cell.
    Worldsheet worldsheet(double resolution, std::size_t samples = 64) const;

private:
    double width_, height_;
    std::size_t string_count_;
};

struct Cylinder {
    double radius = 0.0;
    double height = 0.0;
    /// The sheet's strings wrapped onto the lateral surface.
    std::vector<StringPath> strings;

    double lateral_area() const;
};

/// (s, t) -> (r cos(s/r), r sin(s/r), t).
Point cylinder_point(double s, double t, double radius);

/// Rolls the sheet so its width becomes the circumference: r = w / (2 pi).
Cylinder roll_to_cylinder(const FlatSheet& sheet, std::size_t samples = 64);

/// Ring torus with centre-to-tube distance c and tube radius r, c > r > 0.
class RingTorus {
public:
    RingTorus(double c, double r);

    double c() const { return c_; }
    double r() const { return r_; }

private:
    double c_, r_;
};

/// Bends a cylinder of radius r and height h until its ends meet:
/// c = h / (2 pi). Requires h > 2 pi r so that c > r.
RingTorus bend_to_torus(double radius, double height);

/// ((c + r cos v) cos u, (c + r cos v) sin u, r sin v). The z term is the
/// tube "twist" r sin v.
Point torus_point(double u, double v, const RingTorus& t);

/// (sqrt(x^2 + y^2) - c)^2 + z^2 - r^2; zero on the surface.
double torus_implicit_residual(const Point& p, const RingTorus& t);

/// 4 pi^2 c r.
double torus_surface_area(const RingTorus& t);

/// 2 pi^2 c r^2.
double torus_volume(const RingTorus& t);

/// Midpoint rule for the integral of |dP/du x dP/dv| over [0,2pi]^2 on an
/// n x n grid, with compensated summation in fixed row order. n >= 16.
double torus_area_quadrature(const RingTorus& t, std::size_t n);

/// Midpoint rule over the solid torus (rho, u, v) in [0,r] x [0,2pi]^2 with
/// the Jacobian determinant evaluated numerically from partial derivatives.
double torus_volume_quadrature(const RingTorus& t, std::size_t n);

/// True iff some string of one sheet is antipodal (under `mode`, vertex sets
/// snapped at `resolution`) to every string of the other. Sheets that share
/// all their strings are never antipodal.
bool antipodal_worldsheets(const Worldsheet& w1, const Worldsheet& w2, AntipodalityMode mode,
                           double resolution = kDefaultResolution);
bool antipodal_worldsheets(const Worldsheet& w1, const Worldsheet& w2, double resolution = kDefaultResolution);

} // namespace strbut
