#include "strbut/eeg.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "strbut/io.hpp"

namespace strbut {

EegTrace::EegTrace(std::vector<EegSample> samples, std::string source_id)
    : samples_(std::move(samples)), source_id_(std::move(source_id)) {
    if (samples_.size() < 2) throw Error("trace needs at least 2 samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& s = samples_[i];
        if (!std::isfinite(s.t) || !std::isfinite(s.x) || !std::isfinite(s.z)) {
            throw Error("trace sample " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && !(s.t > samples_[i - 1].t)) {
            throw Error("trace times must be strictly increasing (sample " + std::to_string(i) + ")");
        }
    }
}

StringPath EegTrace::planar_string() const {
    std::vector<Point> pts;
    std::vector<double> ts;
    for (const auto& s : samples_) {
        pts.push_back(Point{s.x, s.z});
        ts.push_back(s.t);
    }
    return StringPath(std::move(pts), std::move(ts));
}

EegTrace parse_trace(std::istream& in, const std::string& source) {
    const CsvTable table = read_csv(in, source);
    const auto ct = table.column("t");
    const auto cx = table.column("x");
    const auto cz = table.column("z");
    if (table.rows.size() < 2) throw Error(source + ": trace needs at least 2 data rows");
    std::vector<EegSample> samples;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        if (!samples.empty() && !(row[ct] > samples.back().t)) {
            throw Error(source + ":" + std::to_string(table.line_numbers[i]) + ": t must be strictly increasing");
        }
        samples.push_back(EegSample{row[ct], row[cx], row[cz]});
    }
    return EegTrace(std::move(samples), source);
}

EegTrace load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return parse_trace(in, path.string());
}

double twist(double x, double z) { return 1.2 * (1.0 - z * std::cos(2.5 * x)) * std::cos(5.0 * x); }

double twist_of_time(double t) { return 1.2 * (1.0 - std::cos(2.5 * t)) * std::cos(5.0 * t); }

StringPath embed3d(const EegTrace& trace) {
    std::vector<Point> pts;
    std::vector<double> ts;
    for (const auto& s : trace.samples()) {
        pts.push_back(Point{s.x, s.z, twist(s.x, s.z)});
        ts.push_back(s.t);
    }
    return StringPath(std::move(pts), std::move(ts));
}

void write_embedded_csv(std::ostream& out, const EegTrace& trace) {
    out << "t,x,z,twist\n";
    for (const auto& s : trace.samples()) {
        out << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.z) << ','
            << format_double(twist(s.x, s.z)) << '\n';
    }
}

EegTrace mirror_trace(const EegTrace& trace) {
    std::vector<EegSample> out;
    for (const auto& s : trace.samples()) out.push_back(EegSample{s.t, -s.x, -s.z});
    return EegTrace(std::move(out), trace.source_id() + ":mirrored");
}

EegTrace sine_trace(std::size_t count, double t0, double t1, std::string source_id) {
    if (count < 2) throw Error("trace needs at least 2 samples");
    std::vector<EegSample> out;
    for (std::size_t i = 0; i < count; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(count - 1);
        out.push_back(EegSample{t, std::sin(t), std::cos(t)});
    }
    return EegTrace(std::move(out), std::move(source_id));
}

Worldsheet wrap_traces_on_torus(const std::vector<EegTrace>& traces, const RingTorus& torus) {
    if (traces.empty()) throw Error("need at least one trace to wrap");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double count = static_cast<double>(traces.size());
    std::vector<StringPath> strings;
    std::vector<Point> carrier;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const auto& samples = traces[i].samples();
        const double t_min = samples.front().t;
        const double span = samples.back().t - t_min;
        const double v = two_pi * static_cast<double>(i) / count;
        std::vector<Point> pts;
        std::vector<double> ts;
        for (const auto& s : samples) {
            pts.push_back(torus_point(two_pi * (s.t - t_min) / span, v, torus));
            ts.push_back(s.t);
        }
        carrier.insert(carrier.end(), pts.begin(), pts.end());
        strings.emplace_back(std::move(pts), std::move(ts));
    }
    return Worldsheet(std::move(strings), Region(std::move(carrier), kDefaultResolution));
}

MatchResult match_antipodal_traces(const std::vector<EegTrace>& traces, const ProximityConfig& cfg,
                                   double resolution) {
    if (traces.size() < 2) throw Error("antipodal trace matching needs at least 2 traces");
    std::vector<StringPath> strings;
    for (const auto& t : traces) strings.push_back(t.planar_string());
    return find_matching_antipodal(RegionFamily(std::move(strings), resolution), cfg);
}

} // namespace strbut
