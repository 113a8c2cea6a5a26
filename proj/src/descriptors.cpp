#include "strbut/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace strbut {

FeatureVector::FeatureVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error("feature vector must have length >= 1");
    for (double v : values_) {
        if (!std::isfinite(v)) throw Error("feature vector entries must be finite");
    }
}

FeatureVector FeatureVector::concat(const FeatureVector& other) const {
    std::vector<double> out = values_;
    out.insert(out.end(), other.values_.begin(), other.values_.end());
    return FeatureVector(std::move(out));
}

double linf_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.size() != b.size()) throw Error("feature vector length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::string to_string(Extractor e) {
    switch (e) {
    case Extractor::arc_length: return "arc_length";
    case Extractor::area_count: return "area_count";
    case Extractor::diameter: return "diameter";
    case Extractor::centroid: return "centroid";
    case Extractor::boundedness: return "boundedness";
    case Extractor::corner_level: return "corner_level";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Pipeline

DescriptorPipeline::DescriptorPipeline(std::vector<Extractor> extractors)
    : extractors_(std::move(extractors)) {
    if (extractors_.empty()) throw Error("descriptor pipeline needs at least one extractor");
}

DescriptorPipeline DescriptorPipeline::parse(const std::string& spec) {
    std::vector<Extractor> out;
    std::istringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name == "arc_length" || name == "length") out.push_back(Extractor::arc_length);
        else if (name == "area_count" || name == "area") out.push_back(Extractor::area_count);
        else if (name == "diameter") out.push_back(Extractor::diameter);
        else if (name == "centroid") out.push_back(Extractor::centroid);
        else if (name == "boundedness" || name == "bounded" || name == "constant")
            out.push_back(Extractor::boundedness);
        else if (name == "corner_level" || name == "corner") out.push_back(Extractor::corner_level);
        else throw Error("unknown descriptor '" + name + "'");
    }
    return DescriptorPipeline(std::move(out));
}

std::size_t DescriptorPipeline::output_dim(std::size_t n) const {
    std::size_t k = 0;
    for (auto e : extractors_) k += (e == Extractor::centroid) ? n : 1;
    return k;
}

bool DescriptorPipeline::isometry_invariant() const {
    return std::none_of(extractors_.begin(), extractors_.end(), [](Extractor e) {
        return e == Extractor::centroid || e == Extractor::corner_level;
    });
}

std::string DescriptorPipeline::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < extractors_.size(); ++i) {
        if (i) s += ',';
        s += strbut::to_string(extractors_[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Tiling

Tiling::Tiling(std::size_t rows, std::size_t cols, double cell_width, double cell_height)
    : rows_(rows), cols_(cols), width_(cell_width), height_(cell_height) {
    if (rows < 2 || cols < 2) throw Error("tiling needs at least 2 rows and 2 columns");
    if (!(cell_width > 0.0) || !(cell_height > 0.0)) throw Error("tiling cell size must be positive");
}

std::size_t Tiling::index(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw Error("tiling cell out of range");
    return row * cols_ + col;
}

std::size_t Tiling::adjacency_count(std::size_t cell) const {
    if (cell >= cell_count()) throw Error("cell does not belong to tiling");
    const std::size_t r = cell / cols_, c = cell % cols_;
    return (r > 0) + (r + 1 < rows_) + (c > 0) + (c + 1 < cols_);
}

bool Tiling::is_corner(std::size_t cell) const { return adjacency_count(cell) == 2; }

std::optional<std::size_t> Tiling::cell_of(const Point& p) const {
    if (p.dim() != 2) return std::nullopt;
    const double fc = std::floor(p[0] / width_);
    const double fr = std::floor(p[1] / height_);
    if (fc < 0 || fr < 0 || fc >= static_cast<double>(cols_) || fr >= static_cast<double>(rows_)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(fr) * cols_ + static_cast<std::size_t>(fc);
}

Region Tiling::cell_region(std::size_t cell, std::size_t samples_per_side) const {
    if (cell >= cell_count()) throw Error("cell does not belong to tiling");
    if (samples_per_side < 1) throw Error("samples per side must be >= 1");
    const std::size_t r = cell / cols_, c = cell % cols_;
    const double k = static_cast<double>(samples_per_side);
    const double px = width_ / k, py = height_ / k;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < samples_per_side; ++i) {
        for (std::size_t j = 0; j < samples_per_side; ++j) {
            pts.push_back(Point{(static_cast<double>(c * samples_per_side + j)) * px,
                                (static_cast<double>(r * samples_per_side + i)) * py});
        }
    }
    return Region(std::move(pts), std::min(px, py));
}

FeatureVector corner_level(std::size_t cell, const Tiling& tiling) {
    const std::size_t adj = tiling.adjacency_count(cell);
    return FeatureVector({adj == 2 ? 2.0 : static_cast<double>(adj + 1)});
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Inputs common to every extractor, whatever the described object is.
struct Aggregate {
    std::span<const Point> points;
    double length = 0.0;
    std::size_t cells = 0;
    double cell_measure = 1.0;
};

double diameter_of(std::span<const Point> pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, distance(pts[i], pts[j]));
    }
    return d;
}

std::vector<double> centroid_of(std::span<const Point> pts) {
    std::vector<double> c(pts.front().dim(), 0.0);
    for (const auto& p : pts) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
    }
    for (double& v : c) v /= static_cast<double>(pts.size());
    return c;
}

FeatureVector evaluate(const Aggregate& agg, const DescriptorPipeline& pipeline,
                       const DescriptionContext& ctx) {
    if (agg.points.empty()) throw Error("cannot describe an empty input");
    std::vector<double> out;
    std::vector<double> centroid;
    auto get_centroid = [&]() -> const std::vector<double>& {
        if (centroid.empty()) centroid = centroid_of(agg.points);
        return centroid;
    };
    for (auto e : pipeline.extractors()) {
        switch (e) {
        case Extractor::arc_length: out.push_back(agg.length); break;
        case Extractor::area_count:
            out.push_back(static_cast<double>(agg.cells) * agg.cell_measure);
            break;
        case Extractor::diameter: out.push_back(diameter_of(agg.points)); break;
        case Extractor::centroid: {
            const auto& c = get_centroid();
            out.insert(out.end(), c.begin(), c.end());
            break;
        }
        case Extractor::boundedness: out.push_back(1.0); break;
        case Extractor::corner_level: {
            if (ctx.tiling == nullptr) throw Error("corner_level needs a tiling");
            const auto cell = ctx.tiling->cell_of(Point(get_centroid()));
            if (!cell) throw Error("input does not lie in a tiling cell");
            out.push_back(corner_level(*cell, *ctx.tiling)[0]);
            break;
        }
        }
    }
    return FeatureVector(std::move(out));
}

double cell_measure(double resolution, std::size_t dim) {
    return std::pow(resolution, static_cast<double>(dim));
}

} // namespace

FeatureVector phi_point(const Point& x, const DescriptorPipeline& pipeline, const DescriptionContext& ctx) {
    Aggregate agg{std::span<const Point>(&x, 1), 0.0, 1, 1.0};
    return evaluate(agg, pipeline, ctx);
}

std::vector<FeatureVector> phi_region_set(const Region& a, const DescriptorPipeline& pipeline,
                                          const DescriptionContext& ctx) {
    std::vector<FeatureVector> out;
    out.reserve(a.size());
    for (const auto& p : a.points()) out.push_back(phi_point(p, pipeline, ctx));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FeatureVector describe_region(const Region& a, const DescriptorPipeline& pipeline,
                              const DescriptionContext& ctx) {
    if (a.is_empty()) throw Error("cannot describe an empty region");
    Aggregate agg{a.points(), 0.0, a.size(), cell_measure(a.resolution(), a.dim())};
    return evaluate(agg, pipeline, ctx);
}

FeatureVector describe_region(const StringPath& s, const DescriptorPipeline& pipeline,
                              const DescriptionContext& ctx) {
    const Region cells = s.vertex_region(ctx.string_resolution);
    Aggregate agg{s.vertices(), s.arc_length(), cells.size(), cell_measure(ctx.string_resolution, s.dim())};
    return evaluate(agg, pipeline, ctx);
}

FeatureVector describe_region(const Worldsheet& w, const DescriptorPipeline& pipeline,
                              const DescriptionContext& ctx) {
    std::vector<Point> all;
    double length = 0.0;
    for (const auto& s : w.strings()) {
        all.insert(all.end(), s.vertices().begin(), s.vertices().end());
        length += s.arc_length();
    }
    const Region cells(all, ctx.string_resolution);
    Aggregate agg{all, length, cells.size(), cell_measure(ctx.string_resolution, w.dim())};
    return evaluate(agg, pipeline, ctx);
}

} // namespace strbut
