#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strbut/but.hpp"
#include "strbut/descriptors.hpp"
#include "strbut/eeg.hpp"
#include "strbut/geometry.hpp"
#include "strbut/proximity.hpp"
#include "strbut/worldsheet.hpp"

namespace py = pybind11;
using namespace strbut;

namespace {

using Rows = std::vector<std::vector<double>>;

std::vector<Point> to_points(const Rows& rows) {
    std::vector<Point> pts;
    pts.reserve(rows.size());
    for (const auto& r : rows) pts.emplace_back(r);
    return pts;
}

py::array_t<double> to_array(const std::vector<Point>& pts) {
    const std::size_t dim = pts.empty() ? 0 : pts.front().dim();
    py::array_t<double> out({pts.size(), dim});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t k = 0; k < dim; ++k) view(i, k) = pts[i][k];
    }
    return out;
}

ProximityConfig make_config(const std::string& pipeline, double tol, const std::string& mode) {
    ProximityConfig cfg;
    cfg.pipeline = DescriptorPipeline::parse(pipeline);
    cfg.tol = tol;
    cfg.antipodality_mode = parse_antipodality_mode(mode);
    cfg.validate();
    return cfg;
}

py::dict report_dict(const AxiomReport& report) {
    py::dict d;
    d["header"] = report.header;
    d["total_violations"] = report.total_violations();
    d["passed"] = report.passed();
    py::list axioms;
    for (const auto& r : report.results) {
        py::dict a;
        a["axiom"] = r.axiom;
        a["trials"] = r.trials;
        a["exercised"] = r.exercised;
        a["violations"] = r.violations;
        a["counterexample"] = r.counterexample ? py::object(py::str(*r.counterexample)) : py::object(py::none());
        axioms.append(a);
    }
    d["axioms"] = axioms;
    return d;
}

py::dict match_dict(const MatchResult& m) {
    py::list pairs;
    for (const auto& p : m.pairs) {
        pairs.append(py::make_tuple(p.index_a, p.index_b, p.description_a.values(), p.description_b.values(),
                                    p.mismatch));
    }
    py::dict d;
    d["pairs"] = pairs;
    d["comparisons"] = m.comparisons;
    d["tol"] = m.tol;
    d["mode"] = to_string(m.mode);
    return d;
}

std::vector<EegTrace> to_traces(const std::vector<Rows>& traces) {
    std::vector<EegTrace> out;
    for (const auto& rows : traces) {
        std::vector<EegSample> samples;
        for (const auto& r : rows) {
            if (r.size() != 3) throw Error("trace rows must be (t, x, z)");
            samples.push_back(EegSample{r[0], r[1], r[2]});
        }
        out.emplace_back(std::move(samples));
    }
    return out;
}

void export_geometry(py::module_& m) {
    py::register_exception<Error>(m, "StrbutError", PyExc_ValueError);

    py::class_<Region>(m, "Region")
        .def(py::init([](const Rows& points, double resolution) { return Region(to_points(points), resolution); }),
             py::arg("points"), py::arg("resolution") = kDefaultResolution)
        .def_property_readonly("dim", &Region::dim)
        .def_property_readonly("resolution", &Region::resolution)
        .def_property_readonly("points", [](const Region& r) { return to_array(r.points()); })
        .def("is_empty", &Region::is_empty)
        .def("__len__", &Region::size)
        .def("__eq__", [](const Region& a, const Region& b) { return a == b; });

    py::class_<StringPath>(m, "StringPath")
        .def(py::init([](const Rows& vertices, std::optional<std::vector<double>> params) {
                 return params ? StringPath(to_points(vertices), *params) : StringPath(to_points(vertices));
             }),
             py::arg("vertices"), py::arg("params") = py::none())
        .def_property_readonly("vertices", [](const StringPath& s) { return to_array(s.vertices()); })
        .def_property_readonly("params", &StringPath::params)
        .def("arc_length", &StringPath::arc_length);

    m.def("interior", &interior, py::arg("region"));
    m.def("antipodal_disjoint", &antipodal_disjoint);
    m.def("antipodal_symmdiff", &antipodal_symmdiff);
    m.def("antipodal_separable", [](const Region& a, const Region& b) -> py::object {
        const auto w = antipodal_separable(a, b);
        if (!w) return py::none();
        py::dict d;
        d["normal"] = w->plane_a.normal;
        d["offsets"] = py::make_tuple(w->plane_a.offset, w->plane_b.offset);
        d["witness_a"] = w->witness_a;
        d["witness_b"] = w->witness_b;
        return d;
    });
    m.def("antipode_map", [](const Region& a) { return antipode_map(SphericalRegion(a)).region(); });
    m.def("sphere_sample",
          [](std::size_t n, std::size_t count, std::uint64_t seed) { return to_array(sphere_sample(n, count, seed)); },
          py::arg("n"), py::arg("m"), py::arg("seed") = 0);
}

void export_descriptors(py::module_& m) {
    m.def(
        "describe_region",
        [](const Region& a, const std::string& pipeline) {
            return describe_region(a, DescriptorPipeline::parse(pipeline)).values();
        },
        py::arg("region"), py::arg("pipeline"));
    m.def(
        "describe_string",
        [](const StringPath& s, const std::string& pipeline, double resolution) {
            return describe_region(s, DescriptorPipeline::parse(pipeline), DescriptionContext{nullptr, resolution})
                .values();
        },
        py::arg("string"), py::arg("pipeline"), py::arg("resolution") = kDefaultResolution);
    m.def(
        "phi_point",
        [](const std::vector<double>& x, const std::string& pipeline) {
            return phi_point(Point(x), DescriptorPipeline::parse(pipeline)).values();
        },
        py::arg("x"), py::arg("pipeline"));
    m.def(
        "corner_level",
        [](std::size_t cell, std::size_t rows, std::size_t cols) { return corner_level(cell, Tiling(rows, cols))[0]; },
        py::arg("cell"), py::arg("rows"), py::arg("cols"));
}

void export_proximity(py::module_& m) {
    m.def(
        "near_descriptive",
        [](const Region& a, const Region& b, const std::string& pipeline, double tol) {
            return near_descriptive(a, b, make_config(pipeline, tol, "disjoint"));
        },
        py::arg("a"), py::arg("b"), py::arg("pipeline") = "centroid", py::arg("tol") = 0.0);
    m.def(
        "descriptive_intersection",
        [](const Region& a, const Region& b, const std::string& pipeline, double tol) {
            return descriptive_intersection(a, b, make_config(pipeline, tol, "disjoint"));
        },
        py::arg("a"), py::arg("b"), py::arg("pipeline") = "centroid", py::arg("tol") = 0.0);
    m.def("strongly_near", [](const Region& a, const Region& b) { return strongly_near(a, b); });
    m.def(
        "descriptively_strongly_near",
        [](const Region& a, const Region& b, const std::string& pipeline, double tol) {
            return descriptively_strongly_near(a, b, make_config(pipeline, tol, "disjoint"));
        },
        py::arg("a"), py::arg("b"), py::arg("pipeline") = "centroid", py::arg("tol") = 0.0);
    m.def(
        "check_axioms",
        [](std::uint64_t seed, std::size_t trials, double tol, const std::string& pipeline) {
            py::gil_scoped_release release;
            const auto report = check_axioms(seed, trials, make_config(pipeline, tol, "disjoint"));
            py::gil_scoped_acquire acquire;
            return report_dict(report);
        },
        py::arg("seed") = 0, py::arg("trials") = 500, py::arg("tol") = 0.0, py::arg("pipeline") = "centroid");
}

void export_but(py::module_& m) {
    m.def(
        "find_matching_antipodal",
        [](const std::vector<Region>& regions, const std::string& pipeline, double tol, const std::string& mode) {
            return match_dict(find_matching_antipodal(RegionFamily(regions), make_config(pipeline, tol, mode)));
        },
        py::arg("regions"), py::arg("pipeline") = "area", py::arg("tol") = 0.0, py::arg("mode") = "disjoint");
    m.def(
        "brute_force_oracle",
        [](const std::vector<Region>& regions, const std::string& pipeline, double tol, const std::string& mode) {
            return match_dict(brute_force_oracle(RegionFamily(regions), make_config(pipeline, tol, mode)));
        },
        py::arg("regions"), py::arg("pipeline") = "area", py::arg("tol") = 0.0, py::arg("mode") = "disjoint");
    m.def(
        "verify_strbut_on_sphere",
        [](std::size_t n, std::size_t caps, std::uint64_t seed, const std::string& pipeline, double tol,
           const std::string& mode, std::size_t sample_size) {
            SphereWitnessOptions opts;
            opts.sample_size = sample_size;
            const auto w = verify_strbut_on_sphere(n, caps, seed, make_config(pipeline, tol, mode), opts);
            py::dict d = match_dict(w.result);
            d["pass"] = w.pass;
            d["caps"] = w.caps;
            d["matched_caps"] = w.matched_caps;
            d["degenerate_caps"] = w.degenerate_caps;
            d["warnings"] = w.warnings;
            return d;
        },
        py::arg("n"), py::arg("caps"), py::arg("seed") = 0, py::arg("pipeline") = "area", py::arg("tol") = 0.0,
        py::arg("mode") = "disjoint", py::arg("sample_size") = 2000);
}

void export_worldsheet(py::module_& m) {
    py::class_<RingTorus>(m, "RingTorus")
        .def(py::init<double, double>(), py::arg("c"), py::arg("r"))
        .def_property_readonly("c", &RingTorus::c)
        .def_property_readonly("r", &RingTorus::r);

    m.def("roll_to_cylinder", [](double w, double h) {
        const auto cyl = roll_to_cylinder(FlatSheet(w, h));
        return py::make_tuple(cyl.radius, cyl.height, cyl.lateral_area());
    });
    m.def("bend_to_torus", &bend_to_torus, py::arg("radius"), py::arg("height"));
    m.def("torus_point", [](double u, double v, const RingTorus& t) {
        const Point p = torus_point(u, v, t);
        return py::make_tuple(p[0], p[1], p[2]);
    });
    m.def("torus_surface_area", &torus_surface_area);
    m.def("torus_volume", &torus_volume);
    m.def("torus_area_quadrature", &torus_area_quadrature, py::arg("torus"), py::arg("n") = 512);
    m.def("torus_volume_quadrature", &torus_volume_quadrature, py::arg("torus"), py::arg("n") = 256);
}

void export_eeg(py::module_& m) {
    m.def("twist", &twist, py::arg("x"), py::arg("z"));
    m.def("twist_of_time", &twist_of_time, py::arg("t"));
    m.def(
        "embed3d",
        [](const Rows& samples) { return to_array(embed3d(to_traces({samples}).front()).vertices()); },
        py::arg("samples"), "Embed (t, x, z) rows as (x, z, twist) vertices.");
    m.def(
        "match_antipodal_traces",
        [](const std::vector<Rows>& traces, const std::string& pipeline, double tol) {
            return match_dict(match_antipodal_traces(to_traces(traces), make_config(pipeline, tol, "disjoint")));
        },
        py::arg("traces"), py::arg("pipeline") = "length", py::arg("tol") = 0.0);
    m.def(
        "wrap_traces_on_torus",
        [](const std::vector<Rows>& traces, const RingTorus& t) {
            const Worldsheet w = wrap_traces_on_torus(to_traces(traces), t);
            py::list out;
            for (const auto& s : w.strings()) out.append(to_array(s.vertices()));
            return out;
        },
        py::arg("traces"), py::arg("torus"));
}

} // namespace

PYBIND11_MODULE(_strbut, m) {
    m.doc() = "Antipodal matching and proximity checks on finite regions";
    export_geometry(m);
    export_descriptors(m);
    export_proximity(m);
    export_but(m);
    export_worldsheet(m);
    export_eeg(m);
}
