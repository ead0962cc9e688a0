#pragma once

#include <exception>
#include <string>

#include "epsteinlab/weingarten.hpp"
#include "json.hpp"

namespace epsteinlab {

/// Monge-Ampere problem file:
///   {"coeffs": [a, b, c],
///    "chart": {"kind": "square", "lo": -0.4, "hi": 0.4, "n": 161}
///          or {"kind": "torus", "length": 1, "n": 128},
///    "base": {"kind": "fuchsian", "bump": {"amplitude", "center": [x, y], "width"}}
///         or {"kind": "umbilic", "u0"}
///         or {"kind": "perturbed-flat", "lambda", "eps", "seed"}
///         or {"kind": "file", "v": "v.csv", "iistar": "iistar.csv"},
///    "boundary": 0.0, "initial": 0.0, "margin": 2,
///    "newton": {"tol": 1e-10, "max_iter": 30}}
/// Relative file names resolve against the problem file's directory.
struct ProblemSpec {
    std::string name = "problem";
    MAProblem problem;
    NewtonConfig newton;
    std::optional<ScalarField> initial;
};

/// ConfigInvalid on any missing or ill-typed field.
ProblemSpec parse_problem(const nlohmann::json& j, const std::string& base_dir = ".");
/// IoError when unreadable, ConfigInvalid when malformed.
ProblemSpec load_problem(const std::string& path);

struct SolveOutcome {
    MASolution solution;
    GeometricReport geometry;
    nlohmann::ordered_json report;
    std::string u_csv, mesh_obj, report_json;
    int exit_code = 0;
};

/// Base pairs with both admissibility residuals below this are treated as
/// Epstein data and the solution is checked on the rebuilt surface.
inline constexpr double kAdmissibilityTol = 1e-2;

/// Solves, verifies geometrically and writes <prefix>_u.csv,
/// <prefix>_surface.obj and <prefix>_report.json. Exit code 5 when the
/// solution converged but lost positivity.
SolveOutcome solve_problem(const ProblemSpec& spec, const std::string& prefix);

/// 2 config or I/O, 3 not elliptic, 4 diverged, 1 anything else.
int exit_code_for(const std::exception& e);

inline constexpr int kExitConfig = 2;
inline constexpr int kExitNotElliptic = 3;
inline constexpr int kExitDiverged = 4;
inline constexpr int kExitPositivityLost = 5;

}  // namespace epsteinlab
