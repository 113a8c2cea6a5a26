#pragma once

// Feature pipelines mapping points, regions, strings and worldsheets to R^k.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strbut/geometry.hpp"

namespace strbut {

class FeatureVector {
public:
    FeatureVector() = default;
    explicit FeatureVector(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    FeatureVector concat(const FeatureVector& other) const;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
    friend auto operator<=>(const FeatureVector&, const FeatureVector&) = default;

private:
    std::vector<double> values_;
};

/// Max-norm distance; throws on length mismatch.
double linf_distance(const FeatureVector& a, const FeatureVector& b);

enum class Extractor { arc_length, area_count, diameter, centroid, boundedness, corner_level };

std::string to_string(Extractor e);

class DescriptorPipeline {
public:
    explicit DescriptorPipeline(std::vector<Extractor> extractors);

    /// Parses a comma-separated list. Accepted names: arc_length|length,
    /// area_count|area, diameter, centroid, boundedness|bounded|constant,
    /// corner_level|corner.
    static DescriptorPipeline parse(const std::string& spec);

    const std::vector<Extractor>& extractors() const { return extractors_; }
    /// Output length k for inputs of ambient dimension n.
    std::size_t output_dim(std::size_t n) const;
    /// True when every extractor is invariant under rigid motions (and hence
    /// under pointwise negation).
    bool isometry_invariant() const;
    std::string to_string() const;

private:
    std::vector<Extractor> extractors_;
};

/// Rectangular grid of disjoint planar cells; cells are indexed row-major.
/// Requires at least 2 rows and 2 columns so corners have exactly 2 neighbours.
class Tiling {
public:
    Tiling(std::size_t rows, std::size_t cols, double cell_width = 1.0, double cell_height = 1.0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t cell_count() const { return rows_ * cols_; }
    std::size_t index(std::size_t row, std::size_t col) const;

    /// Number of cells sharing an edge with `cell`.
    std::size_t adjacency_count(std::size_t cell) const;
    bool is_corner(std::size_t cell) const;

    /// Cell containing a planar point, if any. Cell (r, c) covers
    /// [c*w, (c+1)*w) x [r*h, (r+1)*h).
    std::optional<std::size_t> cell_of(const Point& p) const;

    /// The cell sampled as a k x k lattice with pitch w/k (cells' lattices
    /// never share grid cells).
    Region cell_region(std::size_t cell, std::size_t samples_per_side = 4) const;

private:
    std::size_t rows_, cols_;
    double width_, height_;
};

/// Level of a tiling cell: 2 for a corner (exactly two neighbours), otherwise
/// neighbour count + 1 (always > 2).
FeatureVector corner_level(std::size_t cell, const Tiling& tiling);

/// Extra inputs some extractors need.
struct DescriptionContext {
    /// Required by corner_level; the cell is located from the centroid.
    const Tiling* tiling = nullptr;
    /// Grid pitch for area_count on strings and worldsheets.
    double string_resolution = kDefaultResolution;
};

FeatureVector phi_point(const Point& x, const DescriptorPipeline& pipeline,
                        const DescriptionContext& ctx = {});

/// Distinct point descriptions of a region, sorted.
std::vector<FeatureVector> phi_region_set(const Region& a, const DescriptorPipeline& pipeline,
                                          const DescriptionContext& ctx = {});

/// Aggregate region description f(A).
FeatureVector describe_region(const Region& a, const DescriptorPipeline& pipeline,
                              const DescriptionContext& ctx = {});
FeatureVector describe_region(const StringPath& s, const DescriptorPipeline& pipeline,
                              const DescriptionContext& ctx = {});
/// Worldsheets aggregate over member strings: summed length, union of vertex
/// cells, diameter and centroid over all vertices.
FeatureVector describe_region(const Worldsheet& w, const DescriptorPipeline& pipeline,
                              const DescriptionContext& ctx = {});

} // namespace strbut
