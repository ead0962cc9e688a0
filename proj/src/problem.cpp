#include "epsteinlab/problem.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "epsteinlab/field_io.hpp"
#include "epsteinlab/obj_io.hpp"

namespace epsteinlab {

namespace {

using nlohmann::json;

template <class T>
T get(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ConfigInvalid(where + ": missing '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigInvalid(where + ": '" + key + "' has the wrong type");
    }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return get<T>(j, key, where);
}

ChartPtr parse_chart(const json& j) {
    const auto kind = get<std::string>(j, "kind", "chart");
    const int n = get<int>(j, "n", "chart");
    if (n < 8 || n > 4096) throw ConfigInvalid("chart: n must lie in [8, 4096]");
    if (kind == "square") {
        const double lo = get<double>(j, "lo", "chart"), hi = get<double>(j, "hi", "chart");
        if (!(hi > lo)) throw ConfigInvalid("chart: need lo < hi");
        return GridChart::square(lo, hi, n);
    }
    if (kind == "torus") {
        const double len = get_or<double>(j, "length", 1.0, "chart");
        if (!(len > 0.0)) throw ConfigInvalid("chart: length must be positive");
        return GridChart::torus(0.0, 0.0, len, len, n, n);
    }
    throw ConfigInvalid("chart: unknown kind '" + kind + "'");
}

std::string resolve(const std::string& base_dir, const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() ? p : (std::filesystem::path(base_dir) / path).string();
}

MABase parse_base(const json& j, const ChartPtr& c, const std::string& base_dir) {
    const auto kind = get<std::string>(j, "kind", "base");
    if (kind == "fuchsian") {
        if (!j.contains("bump")) return fuchsian_base(c);
        const json& b = j.at("bump");
        const double amp = get<double>(b, "amplitude", "base.bump");
        const double width = get_or<double>(b, "width", 4.0, "base.bump");
        const auto ctr = get_or<std::vector<double>>(b, "center", {0.0, 0.0}, "base.bump");
        if (ctr.size() != 2) throw ConfigInvalid("base.bump: center needs two entries");
        const cplx z0(ctr[0], ctr[1]);
        return fuchsian_base(c, ScalarField::sample(c, [&](cplx z) { return amp * std::exp(-width * std::norm(z - z0)); }));
    }
    if (kind == "umbilic") return umbilic_base(c, get<double>(j, "u0", "base"));
    if (kind == "perturbed-flat")
        return perturbed_flat_base(c, get<double>(j, "lambda", "base"), get_or<double>(j, "eps", 0.01, "base"),
                                   get_or<unsigned long long>(j, "seed", 1, "base"));
    if (kind == "file") {
        const bool periodic = c->periodic_x();
        MABase b;
        b.v = rebase(read_scalar_csv(resolve(base_dir, get<std::string>(j, "v", "base")), periodic), c);
        b.iistar = rebase(read_tensor_csv(resolve(base_dir, get<std::string>(j, "iistar", "base")), periodic), c);
        return b;
    }
    throw ConfigInvalid("base: unknown kind '" + kind + "'");
}

}  // namespace

ProblemSpec parse_problem(const json& j, const std::string& base_dir) {
    if (!j.is_object()) throw ConfigInvalid("problem must be a JSON object");
    ProblemSpec s;
    s.name = get_or<std::string>(j, "name", "problem", "problem");
    const auto co = get<std::vector<double>>(j, "coeffs", "problem");
    if (co.size() != 3) throw ConfigInvalid("coeffs must be [a, b, c]");
    if (co[0] == 0.0 && co[1] == 0.0 && co[2] == 0.0) throw ConfigInvalid("coeffs must not all vanish");
    const ChartPtr c = parse_chart(get<json>(j, "chart", "problem"));
    s.problem.base = parse_base(get<json>(j, "base", "problem"), c, base_dir);
    s.problem.coeffs = {co[0], co[1], co[2]};
    s.problem.margin = get_or<int>(j, "margin", 2, "problem");
    if (!c->periodic_x()) s.problem.boundary = ScalarField(c, get_or<double>(j, "boundary", 0.0, "problem"));
    if (j.contains("initial")) s.initial = ScalarField(c, get<double>(j, "initial", "problem"));
    if (j.contains("newton")) {
        const json& n = j.at("newton");
        s.newton.tol = get_or<double>(n, "tol", s.newton.tol, "newton");
        s.newton.max_iter = get_or<int>(n, "max_iter", s.newton.max_iter, "newton");
        if (!(s.newton.tol > 0.0) || s.newton.max_iter < 1) throw ConfigInvalid("newton: need tol > 0, max_iter >= 1");
    }
    return s;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path);
    json j;
    try {
        j = json::parse(is);
    } catch (const json::parse_error& e) {
        throw ConfigInvalid(path + ": " + e.what());
    }
    const auto dir = std::filesystem::path(path).parent_path();
    return parse_problem(j, dir.empty() ? "." : dir.string());
}

SolveOutcome solve_problem(const ProblemSpec& spec, const std::string& prefix) {
    SolveOutcome out;
    const MAProblem& p = spec.problem;
    out.solution = ma_newton_solve(p, spec.newton, spec.initial);
    const MASolution& s = out.solution;
    const Classification cl = classify(p.coeffs);

    out.u_csv = prefix + "_u.csv";
    out.mesh_obj = prefix + "_surface.obj";
    out.report_json = prefix + "_report.json";
    write_field_csv(out.u_csv, s.u);

    auto& r = out.report;
    r["name"] = spec.name;
    r["coeffs"] = {p.coeffs.a, p.coeffs.b, p.coeffs.c};
    r["tag"] = cl.tag;
    r["converged"] = s.converged;
    r["newton_trace"] = s.newton_trace;
    r["quadratic_constant"] = s.quadratic_constant;
    r["pinned_mean"] = s.pinned_mean;
    r["positivity_certificate"] = s.positivity_certificate;
    r["positive"] = s.positive;
    const AdmissibilityResiduals adm = p.base.admissibility();
    r["base_codazzi_residual"] = adm.codazzi;
    r["base_gauss_residual"] = adm.gauss;
    if (s.positive) {
        // The rebuilt surface only carries the solved II* when the base pair
        // is itself Epstein data.
        if (adm.codazzi < kAdmissibilityTol && adm.gauss < kAdmissibilityTol) {
            out.geometry = verify_solution_geometrically(s, p, 4);
            const auto& g = out.geometry;
            r["sup_weingarten"] = g.sup_weingarten;
            r["sup_mean_curvature"] = g.sup_mean_curvature;
            if (cl.tag == "constant-Ke") r["sup_ke_error"] = g.sup_ke_error;
            r["tame_margin"] = g.tame_margin;
            r["tame"] = g.tame;
        } else {
            r["geometric_check"] = "skipped: base pair is not admissible";
        }
        export_obj(epstein_surface(ConformalMetric::flat(p.base.v + s.u)), out.mesh_obj);
        r["mesh"] = out.mesh_obj;
    } else {
        out.exit_code = kExitPositivityLost;
    }
    r["u_csv"] = out.u_csv;
    r["exit_code"] = out.exit_code;
    std::ofstream os(out.report_json);
    if (!os) throw IoError("cannot write " + out.report_json);
    os << r.dump(2) << '\n';
    return out;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NotElliptic*>(&e)) return kExitNotElliptic;
    if (dynamic_cast<const NewtonDiverged*>(&e)) return kExitDiverged;
    if (dynamic_cast<const ConfigInvalid*>(&e) || dynamic_cast<const IoError*>(&e) ||
        dynamic_cast<const DegenerateFrontCoefficients*>(&e) || dynamic_cast<const UnknownSuite*>(&e) ||
        dynamic_cast<const ChartMismatch*>(&e))
        return kExitConfig;
    return 1;
}

}  // namespace epsteinlab
