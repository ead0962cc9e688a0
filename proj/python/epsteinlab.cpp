#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "epsteinlab/epstein.hpp"
#include "epsteinlab/errors.hpp"
#include "epsteinlab/foliation.hpp"
#include "epsteinlab/minkowski.hpp"
#include "epsteinlab/problem.hpp"
#include "epsteinlab/report.hpp"
#include "epsteinlab/schwarzian.hpp"
#include "epsteinlab/weingarten.hpp"

namespace py = pybind11;
using namespace epsteinlab;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

py::object json_to_py(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

MinkVec to_mink(const Array& a) {
    if (a.ndim() != 1 || a.shape(0) != 4) throw ConfigInvalid("expected a vector of length 4");
    const auto r = a.unchecked<1>();
    return {r(0), r(1), r(2), r(3)};
}

Array from_mink(const MinkVec& v) {
    Array out(4);
    auto w = out.mutable_unchecked<1>();
    for (int i = 0; i < 4; ++i) w(i) = v[i];
    return out;
}

Mat2 to_mat2(const Array& a) {
    if (a.ndim() != 2 || a.shape(0) != 2 || a.shape(1) != 2) throw ConfigInvalid("expected a 2x2 matrix");
    const auto r = a.unchecked<2>();
    return {r(0, 0), r(0, 1), r(1, 0), r(1, 1)};
}

Array from_mat2(const Mat2& m) {
    Array out({2, 2});
    auto w = out.mutable_unchecked<2>();
    w(0, 0) = m.a11;
    w(0, 1) = m.a12;
    w(1, 0) = m.a21;
    w(1, 1) = m.a22;
    return out;
}

// u[j, i] is the value at x_i + i y_j on the square [lo, hi]^2.
Array epstein_points(const Array& u, double lo, double hi, const std::string& base, int orientation, bool strict) {
    if (u.ndim() != 2 || u.shape(0) != u.shape(1)) throw ConfigInvalid("expected a square array of log-factors");
    const int n = static_cast<int>(u.shape(0));
    const auto chart = GridChart::square(lo, hi, n);
    const auto r = u.unchecked<2>();
    const ScalarField f = ScalarField::generate(chart, [&](std::size_t k) { return r(chart->row(k), chart->col(k)); });
    const EmbeddedSurface s = epstein_surface({base_from_string(base), f}, {orientation, strict});
    Array out({n, n, 4});
    auto w = out.mutable_unchecked<3>();
    const auto& c = s.x.chart();
    for (std::size_t k = 0; k < c.size(); ++k)
        for (int a = 0; a < 4; ++a) w(c.row(k), c.col(k), a) = c.active(k) ? s.x[k][a] : std::nan("");
    return out;
}

}  // namespace

PYBIND11_MODULE(epsteinlab, m) {
    m.doc() = "Numerical lab for surfaces in hyperbolic 3-space and their data at infinity.";

    static py::exception<Error> base_error(m, "Error");
    py::register_exception<ConfigInvalid>(m, "ConfigInvalid", base_error);
    py::register_exception<UnknownSuite>(m, "UnknownSuite", base_error);
    py::register_exception<IoError>(m, "IoError", base_error);
    py::register_exception<NotElliptic>(m, "NotElliptic", base_error);
    py::register_exception<SingularEnvelope>(m, "SingularEnvelope", base_error);
    py::register_exception<EigenvalueMinusOne>(m, "EigenvalueMinusOne", base_error);
    py::register_exception<StepTooLarge>(m, "StepTooLarge", base_error);

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, int grid, int levels, std::optional<double> tol,
           std::optional<unsigned long long> seed) {
            SuiteConfig cfg = SuiteConfig::defaults();
            cfg.grid = grid;
            cfg.levels = levels;
            cfg.tol = tol;
            if (seed) cfg.seed = *seed;
            cfg.validate();
            return json_to_py(run_suite(name, cfg).dump());
        },
        py::arg("name"), py::arg("grid") = 100, py::arg("levels") = 2, py::arg("tol") = py::none(),
        py::arg("seed") = py::none(), "Runs a verification suite and returns its JSON report as a dict.");

    m.def("mink_inner", [](const Array& a, const Array& b) { return mink_inner(to_mink(a), to_mink(b)); });
    m.def("null_section", [](cplx z) { return from_mink(standard_null_section(z)); });
    m.def("boundary_point", [](const Array& n) { return boundary_point(to_mink(n)); });
    m.def("hyperbolic_distance", [](const Array& x, const Array& y) { return hyperbolic_distance(to_mink(x), to_mink(y)); });
    m.def(
        "horosphere_point",
        [](const Array& sigma, const Array& d1, const Array& d2, int orientation) {
            return from_mink(horosphere_solve(to_mink(sigma), to_mink(d1), to_mink(d2), orientation).x);
        },
        py::arg("sigma"), py::arg("d1"), py::arg("d2"), py::arg("orientation") = 1);

    m.def("map_names", &builtin_map_names);
    m.def("schwarzian", [](const std::string& map, cplx z) { return schwarzian_at(map_from_name(map), z); });
    m.def(
        "nehari_ratio",
        [](const std::string& map, double radius, int n) {
            const auto r = nehari_ratio(map_from_name(map), GridChart::square(-radius, radius, n), radius);
            py::dict d;
            d["ratio"] = r.ratio;
            d["argmax"] = r.argmax;
            d["pass"] = r.pass;
            return d;
        },
        py::arg("map"), py::arg("radius") = 0.9, py::arg("n") = 181);

    m.def(
        "epstein_surface", &epstein_points, py::arg("u"), py::arg("lo"), py::arg("hi"), py::arg("base") = "flat",
        py::arg("orientation") = 1, py::arg("strict") = false,
        "Envelope points, shape (n, n, 4), for the metric e^{2u} times the base; NaN at singular nodes.");
    m.def("shape_at_infinity", [](const Array& b) { return from_mat2(shape_at_infinity(to_mat2(b))); });
    m.def("b_from_bstar", [](const Array& b) { return from_mat2(b_from_bstar(to_mat2(b))); });

    m.def("classify", [](double a, double b, double c) {
        const Classification cl = classify({a, b, c});
        py::dict d;
        d["elliptic"] = cl.elliptic;
        d["sign_ok"] = cl.sign_ok;
        d["degenerate_front"] = cl.degenerate_front;
        d["tag"] = cl.tag;
        d["k"] = cl.k;
        return d;
    });

    m.def(
        "extremal_length",
        [](int p, int q, cplx tau, double w) { return extremal_length(SlopeFoliation(p, q, w), TorusModulus(tau)); },
        py::arg("p"), py::arg("q"), py::arg("tau"), py::arg("w") = 1.0);
    m.def(
        "foliation_energy",
        [](int p, int q, cplx tau, double w) { return foliation_energy(SlopeFoliation(p, q, w), TorusModulus(tau)); },
        py::arg("p"), py::arg("q"), py::arg("tau"), py::arg("w") = 1.0);
    m.def(
        "gardiner_residual",
        [](int p, int q, cplx tau, cplx d, double eps) {
            return gardiner_residual(SlopeFoliation(p, q), TorusModulus(tau), d, eps);
        },
        py::arg("p"), py::arg("q"), py::arg("tau"), py::arg("d"), py::arg("eps"));

    m.def(
        "solve_problem",
        [](const std::string& path, const std::string& prefix) {
            const SolveOutcome o = solve_problem(load_problem(path), prefix);
            py::dict d;
            d["exit_code"] = o.exit_code;
            d["report"] = json_to_py(o.report.dump());
            d["files"] = py::make_tuple(o.u_csv, o.mesh_obj, o.report_json);
            return d;
        },
        py::arg("path"), py::arg("prefix"), "Solves a problem file and writes <prefix>_u.csv, _surface.obj, _report.json.");
}
