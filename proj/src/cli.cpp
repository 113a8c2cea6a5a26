#include "strbut/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strbut/but.hpp"
#include "strbut/eeg.hpp"
#include "strbut/io.hpp"
#include "strbut/proximity.hpp"
#include "strbut/worldsheet.hpp"

namespace strbut::cli {

namespace {

constexpr const char* kSynopsis =
    "usage: strbut <subcommand> [flags]\n"
    "  axioms-check     --trials N --seed S --tol T --pipeline P [--json]\n"
    "  antipodal-search --family DIR --pipeline P --tol T --mode disjoint|symmdiff|separable [--oracle]\n"
    "  verify-sphere    --n N --caps K --seed S --pipeline P [--tol T] [--mode M]\n"
    "  torus-mesh       --c C --r R --nu N --nv N --out FILE\n"
    "  eeg-embed        --in trace.csv --out embedded.csv | --torus C,R --traces DIR --out DIR\n";

struct RunConfig {
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::string pipeline;
    std::string mode = "disjoint";
    std::size_t threads = 0;
    double resolution = kDefaultResolution;

    // axioms-check
    std::size_t trials = 500;
    bool json = false;

    // antipodal-search
    std::string family_dir;
    bool oracle = false;

    // verify-sphere
    std::size_t sphere_dim = 2;
    std::size_t caps = 100;
    std::size_t samples = 2000;
    std::optional<double> radius_deg;

    // torus-mesh
    double c = 0.0, r = 0.0;
    std::size_t nu = 64, nv = 64;

    // eeg-embed
    std::string in_path;
    std::string torus_spec;
    std::string traces_dir;

    std::string out_path;
};

ProximityConfig proximity_config(const RunConfig& rc) {
    ProximityConfig cfg;
    cfg.tol = rc.tol;
    cfg.pipeline = DescriptorPipeline::parse(rc.pipeline);
    cfg.antipodality_mode = parse_antipodality_mode(rc.mode);
    cfg.validate();
    return cfg;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    return out;
}

std::string join_features(const FeatureVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_double(v[i]);
    }
    return s;
}

void write_pairs_tsv(std::ostream& out, const MatchResult& result) {
    out << "index_a\tindex_b\tdescription_a\tdescription_b\tmismatch\n";
    for (const auto& p : result.pairs) {
        out << p.index_a << '\t' << p.index_b << '\t' << join_features(p.description_a) << '\t'
            << join_features(p.description_b) << '\t' << format_double(p.mismatch) << '\n';
    }
}

nlohmann::json report_json(const AxiomReport& report) {
    nlohmann::json j;
    j["header"] = report.header;
    j["total_violations"] = report.total_violations();
    j["passed"] = report.passed();
    auto& axioms = j["axioms"] = nlohmann::json::array();
    for (const auto& r : report.results) {
        nlohmann::json a{{"axiom", r.axiom}, {"trials", r.trials}, {"exercised", r.exercised}, {"violations", r.violations}};
        a["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json();
        axioms.push_back(std::move(a));
    }
    return j;
}

int axioms_check(const RunConfig& rc, std::ostream& out) {
    const ProximityConfig cfg = proximity_config(rc);
    const AxiomReport report = check_axioms(rc.seed, rc.trials, cfg, rc.threads);
    if (rc.json) out << report_json(report).dump(2) << '\n';
    else out << report.to_text();
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int antipodal_search(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const ProximityConfig cfg = proximity_config(rc);
    const RegionFamily family = RegionFamily::load_directory(rc.family_dir, rc.resolution);
    const MatchResult result = find_matching_antipodal(family, cfg, rc.threads);
    int code = kExitOk;
    if (!rc.out_path.empty()) {
        auto f = open_output(rc.out_path);
        write_pairs_tsv(f, result);
    } else {
        write_pairs_tsv(out, result);
    }
    out << "pairs=" << result.pairs.size() << " comparisons=" << result.comparisons << '\n';
    if (rc.oracle) {
        const MatchResult truth = brute_force_oracle(family, cfg);
        const bool agree = truth.index_pairs() == result.index_pairs();
        out << "oracle=" << (agree ? "agree" : "disagree") << " oracle_pairs=" << truth.pairs.size() << '\n';
        if (!agree) {
            err << "search and oracle disagree\n";
            code = kExitCheckFailed;
        }
    }
    return code;
}

int verify_sphere(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const ProximityConfig cfg = proximity_config(rc);
    SphereWitnessOptions opts;
    opts.sample_size = rc.samples;
    opts.cap_radius_deg = rc.radius_deg;
    opts.threads = rc.threads;
    const SphereWitness w = verify_strbut_on_sphere(rc.sphere_dim, rc.caps, rc.seed, cfg, opts);
    if (!rc.out_path.empty()) {
        auto f = open_output(rc.out_path);
        write_pairs_tsv(f, w.result);
    }
    for (const auto& msg : w.warnings) err << "warning: " << msg << '\n';
    out << (w.pass ? "PASS" : "FAIL") << " n=" << rc.sphere_dim << " caps=" << w.caps << " matched=" << w.matched_caps
        << " degenerate=" << w.degenerate_caps << '\n';
    out << "pairs=" << w.result.pairs.size() << " comparisons=" << w.result.comparisons << '\n';
    return w.pass ? kExitOk : kExitCheckFailed;
}

int torus_mesh(const RunConfig& rc, std::ostream& out) {
    const RingTorus torus(rc.c, rc.r);
    if (rc.nu < 1 || rc.nv < 1) throw Error("--nu and --nv must be >= 1");
    auto f = open_output(rc.out_path);
    f << "u,v,x,y,z\n";
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < rc.nu; ++i) {
        const double u = two_pi * static_cast<double>(i) / static_cast<double>(rc.nu);
        for (std::size_t j = 0; j < rc.nv; ++j) {
            const double v = two_pi * static_cast<double>(j) / static_cast<double>(rc.nv);
            const Point p = torus_point(u, v, torus);
            f << format_double(u) << ',' << format_double(v) << ',' << format_double(p[0]) << ','
              << format_double(p[1]) << ',' << format_double(p[2]) << '\n';
        }
    }
    out << "rows=" << rc.nu * rc.nv << " area=" << format_double(torus_surface_area(torus))
        << " volume=" << format_double(torus_volume(torus)) << '\n';
    return kExitOk;
}

RingTorus parse_torus(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) throw Error("--torus expects C,R");
    return RingTorus(parse_double(spec.substr(0, comma)), parse_double(spec.substr(comma + 1)));
}

int eeg_embed(const RunConfig& rc, std::ostream& out) {
    const bool single = !rc.in_path.empty();
    const bool torus = !rc.torus_spec.empty() || !rc.traces_dir.empty();
    if (single == torus) throw Error("eeg-embed takes either --in FILE or --torus C,R --traces DIR");
    if (single) {
        const EegTrace trace = load_trace(rc.in_path);
        auto f = open_output(rc.out_path);
        write_embedded_csv(f, trace);
        out << "samples=" << trace.size() << '\n';
        return kExitOk;
    }
    if (rc.torus_spec.empty() || rc.traces_dir.empty()) throw Error("--torus and --traces must be given together");
    const RingTorus t = parse_torus(rc.torus_spec);
    if (!std::filesystem::is_directory(rc.traces_dir)) throw Error("not a directory: '" + rc.traces_dir + "'");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(rc.traces_dir)) {
        if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("no .csv traces in '" + rc.traces_dir + "'");
    std::vector<EegTrace> traces;
    for (const auto& p : files) traces.push_back(load_trace(p));
    const Worldsheet sheet = wrap_traces_on_torus(traces, t);
    std::filesystem::create_directories(rc.out_path);
    for (std::size_t i = 0; i < files.size(); ++i) {
        auto f = open_output((std::filesystem::path(rc.out_path) / (files[i].stem().string() + ".torus.csv")).string());
        write_string_csv(f, sheet.strings()[i]);
    }
    out << "traces=" << traces.size() << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Antipodal matching and proximity checks on finite regions", "strbut"};
    app.require_subcommand(1);

    auto* axioms = app.add_subcommand("axioms-check", "check proximity axioms on random regions");
    axioms->add_option("--trials", rc.trials)->check(CLI::PositiveNumber);
    axioms->add_option("--seed", rc.seed);
    axioms->add_option("--tol", rc.tol)->check(CLI::NonNegativeNumber);
    axioms->add_option("--pipeline", rc.pipeline)->default_str("centroid");
    axioms->add_flag("--json", rc.json, "emit the report as JSON");
    axioms->add_option("--threads", rc.threads);

    auto* search = app.add_subcommand("antipodal-search", "find antipodal pairs with matching descriptions");
    search->add_option("--family", rc.family_dir, "directory of region/string CSV files")->required();
    search->add_option("--pipeline", rc.pipeline);
    search->add_option("--tol", rc.tol)->check(CLI::NonNegativeNumber);
    search->add_option("--mode", rc.mode)->check(CLI::IsMember({"disjoint", "symmdiff", "separable"}));
    search->add_flag("--oracle", rc.oracle, "cross-check against the exhaustive oracle");
    search->add_option("--resolution", rc.resolution)->check(CLI::PositiveNumber);
    search->add_option("--out", rc.out_path, "write the TSV here instead of stdout");
    search->add_option("--threads", rc.threads);

    auto* sphere = app.add_subcommand("verify-sphere", "cap/antipode witness on a sampled sphere");
    sphere->add_option("--n", rc.sphere_dim)->check(CLI::PositiveNumber);
    sphere->add_option("--caps", rc.caps)->check(CLI::PositiveNumber);
    sphere->add_option("--seed", rc.seed);
    sphere->add_option("--pipeline", rc.pipeline);
    sphere->add_option("--tol", rc.tol)->check(CLI::NonNegativeNumber);
    sphere->add_option("--mode", rc.mode)->check(CLI::IsMember({"disjoint", "symmdiff", "separable"}));
    sphere->add_option("--samples", rc.samples);
    sphere->add_option("--radius", rc.radius_deg, "fixed cap radius in degrees");
    sphere->add_option("--out", rc.out_path, "write matched pairs as TSV");
    sphere->add_option("--threads", rc.threads);

    auto* mesh = app.add_subcommand("torus-mesh", "emit a ring torus vertex grid as CSV");
    mesh->add_option("--c", rc.c)->required();
    mesh->add_option("--r", rc.r)->required();
    mesh->add_option("--nu", rc.nu);
    mesh->add_option("--nv", rc.nv);
    mesh->add_option("--out", rc.out_path)->required();

    auto* eeg = app.add_subcommand("eeg-embed", "embed EEG traces in R^3 or wrap them on a torus");
    eeg->add_option("--in", rc.in_path);
    eeg->add_option("--torus", rc.torus_spec, "C,R");
    eeg->add_option("--traces", rc.traces_dir);
    eeg->add_option("--out", rc.out_path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "strbut: " << e.what() << '\n' << kSynopsis;
        return kExitUsage;
    }

    try {
        if (axioms->parsed()) {
            if (rc.pipeline.empty()) rc.pipeline = "centroid";
            return axioms_check(rc, out);
        }
        if (rc.pipeline.empty()) rc.pipeline = "area";
        if (search->parsed()) return antipodal_search(rc, out, err);
        if (sphere->parsed()) return verify_sphere(rc, out, err);
        if (mesh->parsed()) return torus_mesh(rc, out);
        if (eeg->parsed()) return eeg_embed(rc, out);
    } catch (const std::exception& e) {
        err << "strbut: " << e.what() << '\n';
        return kExitUsage;
    }
    err << kSynopsis;
    return kExitUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace strbut::cli
