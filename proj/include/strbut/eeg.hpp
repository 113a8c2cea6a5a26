#pragma once

// Planar EEG traces as strings: CSV ingestion, the twist embedding into R^3,
// wrapping trace families onto a ring torus and antipodal trace matching.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "strbut/but.hpp"
#include "strbut/geometry.hpp"
#include "strbut/worldsheet.hpp"

namespace strbut {

struct EegSample {
    double t = 0.0; // seconds
    double x = 0.0;
    double z = 0.0;

    friend bool operator==(const EegSample&, const EegSample&) = default;
};

/// A trace following a path in the xz-plane; t strictly increasing, >= 2
/// samples.
class EegTrace {
public:
    EegTrace(std::vector<EegSample> samples, std::string source_id = {});

    const std::vector<EegSample>& samples() const { return samples_; }
    const std::string& source_id() const { return source_id_; }
    std::size_t size() const { return samples_.size(); }

    /// The trace as a string in the xz-plane parametrized by t.
    StringPath planar_string() const;

private:
    std::vector<EegSample> samples_;
    std::string source_id_;
};

/// Reads a CSV with columns t, x, z (any order, matched by header name).
EegTrace parse_trace(std::istream& in, const std::string& source = "<stream>");
EegTrace load_trace(const std::filesystem::path& path);

/// 1.2 (1 - z cos(2.5 x)) cos(5 x).
double twist(double x, double z);

/// 1.2 (1 - cos(2.5 t)) cos(5 t).
double twist_of_time(double t);

/// Vertices (x_i, z_i, twist(x_i, z_i)) with parameters t_i.
StringPath embed3d(const EegTrace& trace);

/// Writes `t,x,z,twist` rows for every sample.
void write_embedded_csv(std::ostream& out, const EegTrace& trace);

/// Pointwise (x, z) -> (-x, -z), the planar stand-in for the antipode map.
EegTrace mirror_trace(const EegTrace& trace);

/// Synthetic trace (t, sin t, cos t) on `count` evenly spaced times in
/// [t0, t1].
EegTrace sine_trace(std::size_t count, double t0 = 0.0, double t1 = 10.0, std::string source_id = "sine");

/// Trace i of N becomes the torus curve u = 2 pi (t - t_min)/(t_max - t_min),
/// v = 2 pi i / N. The carrier is the set of emitted vertices.
Worldsheet wrap_traces_on_torus(const std::vector<EegTrace>& traces, const RingTorus& torus);

/// Matching antipodal search over the traces' planar strings.
MatchResult match_antipodal_traces(const std::vector<EegTrace>& traces, const ProximityConfig& cfg,
                                   double resolution = kDefaultResolution);

} // namespace strbut
