#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <algorithm>
#include <regex>

#include "CLI11.hpp"
#include "epsteinlab/families.hpp"
#include "epsteinlab/field_io.hpp"
#include "epsteinlab/foliation.hpp"
#include "epsteinlab/obj_io.hpp"
#include "epsteinlab/problem.hpp"
#include "epsteinlab/report.hpp"

using namespace epsteinlab;

namespace {

cplx parse_complex(std::string s) {
    // "a+bi", "a-bi", "bi", "i", "a" or "a,b".
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    auto number = [&](const std::string& t, const char* what) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (t.empty() || used != t.size()) throw ConfigInvalid("cannot parse " + std::string(what) + " in '" + s + "'");
        return v;
    };
    if (const auto comma = s.find(','); comma != std::string::npos)
        return {number(s.substr(0, comma), "real part"), number(s.substr(comma + 1), "imaginary part")};
    if (s.empty() || s.back() != 'i') return {number(s, "real number"), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    const std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : number(re, "real part"), number(im, "imaginary part")};
}

ConformalMetric builtin_metric(const std::string& name, const ChartPtr& c) {
    if (name == "flat") return ConformalMetric::flat(ScalarField(c, 0.0));
    if (name.rfind("constant:", 0) == 0) return ConformalMetric::flat(ScalarField(c, std::stod(name.substr(9))));
    if (name == "fuchsian")
        return ConformalMetric::flat(
            ScalarField::sample(c, [](cplx z) { return std::log(std::sqrt(2.0) / (1.0 - std::norm(z))); }));
    if (name == "spherical") return {BaseKind::Spherical, ScalarField(c, 0.0)};
    if (name == "hyperbolic") return {BaseKind::DiskHyperbolic, ScalarField(c, 0.0)};
    throw ConfigInvalid("unknown metric '" + name + "' (flat | constant:<u0> | fuchsian | spherical | hyperbolic | file.csv)");
}

int run_verify(const std::string& suite, SuiteConfig cfg) {
    const SuiteReport rep = run_suite(suite, cfg);
    for (const auto& c : rep.checks) {
        std::printf("%-4s %-48s residual %.3e  tol %.3e", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                    c.tolerance);
        if (c.convergence_order) std::printf("  order %.3f", *c.convergence_order);
        std::printf("\n");
    }
    std::printf("%s: %s\n", rep.suite.c_str(), rep.pass ? "PASS" : "FAIL");
    return rep.pass ? 0 : 1;
}

int run_epstein(const std::string& metric, const std::string& out, double lo, double hi, int n) {
    const ChartPtr c = GridChart::square(lo, hi, n);
    const ConformalMetric h = std::filesystem::exists(metric)
                                  ? ConformalMetric::flat(read_scalar_csv(metric))
                                  : builtin_metric(metric, c);
    const EmbeddedSurface s = epstein_surface(h);
    const ObjMesh mesh = surface_mesh(s);
    export_obj(mesh, out);
    std::printf("vertices %zu\nfaces %zu\nsingular %zu\nmodel_residual %.3e\nmesh %s\n", mesh.vertices.size(),
                mesh.faces.size(), s.singular.size(), s.model_residual(), out.c_str());
    return 0;
}

int run_solve(const std::string& path, std::string prefix) {
    const ProblemSpec spec = load_problem(path);
    if (prefix.empty()) prefix = std::filesystem::path(path).stem().string();
    const SolveOutcome o = solve_problem(spec, prefix);
    std::cout << o.report.dump(2) << '\n';
    return o.exit_code;
}

int run_foliation(const std::string& tau_s, const std::string& slope, double w, const std::string& dir_s, double eps) {
    static const std::regex re(R"(^\s*(-?\d+)\s*/\s*(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(slope, m, re)) throw ConfigInvalid("slope must look like p/q");
    const SlopeFoliation f(std::stoi(m[1]), std::stoi(m[2]), w);
    const TorusModulus t(parse_complex(tau_s));
    const cplx d = parse_complex(dir_s);
    std::printf("p,q,w,tau,ext,E,gardiner_residual\n");
    std::printf("%d,%d,%.15g,%.15g%+.15gi,%.17g,%.17g,%.6e\n", f.p, f.q, f.w, t.tau.real(), t.tau.imag(),
                extremal_length(f, t), foliation_energy(f, t), gardiner_residual(f, t, d, eps));
    return 0;
}

int run_schwarzian(const std::string& name, double lo, double hi, int n) {
    const HolomorphicMap f = map_from_name(name);
    std::printf("x,y,re_S,im_S\n");
    const double step = n > 1 ? (hi - lo) / (n - 1) : 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const cplx z(lo + i * step, lo + j * step);
            try {
                const cplx s = schwarzian_at(f, z);
                std::printf("%.17g,%.17g,%.17g,%.17g\n", z.real(), z.imag(), s.real(), s.imag());
            } catch (const CriticalPoint&) {
                std::printf("%.17g,%.17g,nan,nan\n", z.real(), z.imag());
            }
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks for geometry at infinity of hyperbolic 3-space"};
    app.require_subcommand(1);
    SuiteConfig cfg = SuiteConfig::defaults();

    auto* verify = app.add_subcommand("verify", "run a residual suite and print its report");
    std::string suite;
    double tol = -1.0;
    verify->add_option("suite", suite, "schwarzian | epstein | duality | conformal-change | weingarten | foliation | all")
        ->required();
    verify->add_option("--grid", cfg.grid, "coarse spacing is 1/grid");
    verify->add_option("--levels", cfg.levels, "refinement levels");
    verify->add_option("--tol", tol, "override every tolerance");
    verify->add_option("--out", cfg.out, "JSON report path");
    verify->add_option("--seed", cfg.seed, "seed of the random families (default EPSTEIN_LAB_SEED)");

    auto* ep = app.add_subcommand("epstein", "build an Epstein surface and export it as OBJ");
    std::string metric, mesh_out = "mesh.obj";
    double lo = -0.5, hi = 0.5;
    int n = 101;
    ep->add_option("--metric", metric, "flat | constant:<u0> | fuchsian | spherical | hyperbolic | path to a CSV log-factor")
        ->required();
    ep->add_option("--out", mesh_out, "OBJ path");
    ep->add_option("--lo", lo, "window lower corner");
    ep->add_option("--hi", hi, "window upper corner");
    ep->add_option("-n", n, "nodes per side");

    auto* solve = app.add_subcommand("solve", "solve a Monge-Ampere problem file");
    std::string problem, prefix;
    solve->add_option("problem", problem, "problem JSON")->required();
    solve->add_option("--out-prefix", prefix, "prefix of the written artifacts (default: problem stem)");

    auto* fol = app.add_subcommand("foliation", "extremal length and Gardiner check on a flat torus (CSV)");
    std::string tau_s, slope, dir_s = "1";
    double weight = 1.0, eps = 1e-3;
    fol->add_option("--tau", tau_s, "modulus, e.g. 0.3+1.2i")->required();
    fol->add_option("--slope", slope, "p/q")->required();
    fol->add_option("--weight", weight, "transverse measure");
    fol->add_option("--direction", dir_s, "direction of the modulus variation");
    fol->add_option("--eps", eps, "variation step");

    auto* sw = app.add_subcommand("schwarzian", "tabulate S(f) of a built-in map (CSV)");
    std::string map_name;
    double slo = -0.5, shi = 0.5;
    int sn = 5;
    sw->add_option("--map", map_name, "mobius:a,b,c,d | exp | koebe | square | log | strip-uniformizer | ...")
        ->required();
    sw->add_option("--lo", slo, "window lower corner");
    sw->add_option("--hi", shi, "window upper corner");
    sw->add_option("-n", sn, "samples per side");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            if (tol >= 0.0) cfg.tol = tol;
            return run_verify(suite, cfg);
        }
        if (*ep) return run_epstein(metric, mesh_out, lo, hi, n);
        if (*solve) return run_solve(problem, prefix);
        if (*fol) return run_foliation(tau_s, slope, weight, dir_s, eps);
        if (*sw) return run_schwarzian(map_name, slo, shi, sn);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    }
    return 0;
}
