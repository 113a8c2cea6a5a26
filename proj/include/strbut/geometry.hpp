#pragma once

// Core spatial types: points, regions on a snapping grid, strings (polylines),
// worldsheets, hyperplanes, sphere sampling and the three antipodality
// predicates.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace strbut {

/// Thrown for every contract violation in the library (bad dimensions,
/// invalid construction arguments, malformed input files).
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Grid pitch used when a caller does not pick one. Small enough that
/// distinct double-precision sample points stay in distinct cells.
inline constexpr double kDefaultResolution = 1e-9;

/// Tolerance for membership of a point in a hyperplane.
inline constexpr double kPlaneTolerance = 1e-9;

class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const { return coords_; }

    Point operator-() const;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

double dot(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);
double norm(const Point& a);

/// Integer cell coordinates of a point snapped to a grid of the given pitch.
using CellKey = std::vector<std::int64_t>;

CellKey snap(const Point& p, double resolution);

/// A finite set of same-dimension points together with the pitch of the grid
/// that decides point identity and the interior operator.
///
/// Points are deduplicated by grid cell (first occurrence wins) and stored in
/// lexicographic cell order. Nonempty unless built through Region::empty,
/// which exists for operations whose result may legitimately be empty.
class Region {
public:
    Region(std::vector<Point> points, double resolution);

    static Region empty(std::size_t dim, double resolution);

    std::size_t dim() const { return dim_; }
    double resolution() const { return resolution_; }
    std::size_t size() const { return points_.size(); }
    bool is_empty() const { return points_.empty(); }
    bool is_singleton() const { return points_.size() == 1; }

    const std::vector<Point>& points() const { return points_; }
    const std::vector<CellKey>& keys() const { return keys_; }

    bool contains_cell(const CellKey& key) const;
    bool contains(const Point& p) const;

    /// Same cell set (and resolution).
    friend bool operator==(const Region& a, const Region& b);

private:
    Region(std::size_t dim, double resolution);

    std::size_t dim_ = 0;
    double resolution_ = kDefaultResolution;
    std::vector<Point> points_;
    std::vector<CellKey> keys_;
};

// Set operations snap both operands to the coarser of the two resolutions.
// On a shared cell the representative from the left operand is kept.
Region region_union(const Region& a, const Region& b);
Region region_intersection(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);
bool is_subset(const Region& a, const Region& b);

/// Finite interior: points whose 2n face-adjacent grid cells are all occupied.
Region interior(const Region& a);

/// A region whose points all lie on the unit sphere within 1e-9.
class SphericalRegion {
public:
    explicit SphericalRegion(Region region);

    const Region& region() const { return region_; }
    /// Dimension n of the sphere S^n (ambient dimension minus one).
    std::size_t sphere_dim() const { return region_.dim() - 1; }

private:
    Region region_;
};

/// Pointwise negation {-x : x in A}. Involutive and exact.
SphericalRegion antipode_map(const SphericalRegion& a);

/// m points on S^n closed under negation: m/2 seeded Gaussian directions,
/// normalized, followed by their negations.
std::vector<Point> sphere_sample(std::size_t n, std::size_t m, std::uint64_t seed);

/// Bounded polyline with strictly increasing parameter values (a string of
/// zero width and finite length).
class StringPath {
public:
    StringPath(std::vector<Point> vertices, std::vector<double> params);
    /// Parameters default to 0, 1, 2, ...
    explicit StringPath(std::vector<Point> vertices);

    std::size_t dim() const { return vertices_.front().dim(); }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<double>& params() const { return params_; }

    double arc_length() const;
    Region vertex_region(double resolution) const;

private:
    std::vector<Point> vertices_;
    std::vector<double> params_;
};

double point_segment_distance(const Point& p, const Point& a, const Point& b);

/// Grid realization of "every subregion contains at least one string": each
/// occupied carrier cell centre lies within one cell pitch of a string.
bool cover_check(std::span<const StringPath> strings, const Region& carrier);

/// A carrier region completely covered by a nonempty family of strings.
class Worldsheet {
public:
    Worldsheet(std::vector<StringPath> strings, Region carrier);

    const std::vector<StringPath>& strings() const { return strings_; }
    const Region& carrier() const { return carrier_; }
    std::size_t dim() const { return carrier_.dim(); }

private:
    std::vector<StringPath> strings_;
    Region carrier_;
};

bool cover_check(const Worldsheet& w);

struct Hyperplane {
    std::vector<double> normal; // unit length
    double offset = 0.0;        // plane is {x : x . normal = offset}

    /// Plane {x : x . normal = offset}; both are rescaled so the normal is unit.
    static Hyperplane make(std::vector<double> normal, double offset);
    double signed_distance(const Point& p) const;
    bool contains(const Point& p, double tol = kPlaneTolerance) const;
};

/// Normals equal or negated, offsets distinct once normals are aligned.
bool are_disjoint_parallel(const Hyperplane& p, const Hyperplane& q);

struct SeparationWitness {
    Hyperplane plane_a;
    Hyperplane plane_b;
    Region witness_a; // A restricted to plane_a
    Region witness_b; // B restricted to plane_b
};

/// Criterion 1: the point sets share no grid cell.
bool antipodal_disjoint(const Region& a, const Region& b);

/// Criterion 2: the symmetric difference is nonempty.
bool antipodal_symmdiff(const Region& a, const Region& b);

/// Criterion 3: some points of A and of B lie on disjoint parallel
/// hyperplanes. Candidate normals are the coordinate axes followed by the
/// pairwise directions q - p.
std::optional<SeparationWitness> antipodal_separable(const Region& a, const Region& b);

enum class AntipodalityMode { disjoint, symmdiff, separable };

AntipodalityMode parse_antipodality_mode(const std::string& text);
std::string to_string(AntipodalityMode mode);

bool is_antipodal(const Region& a, const Region& b, AntipodalityMode mode);

} // namespace strbut
