#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epsteinlab/epstein.hpp"

namespace epsteinlab {

/// a K_e + b H + c = 0 with K_e = det B and H = tr B / 2.
struct WeingartenCoeffs {
    double a = 0.0, b = 0.0, c = 0.0;

    double front() const { return a - b + c; }   ///< coefficient of B* at infinity
    double shift() const { return c - a; }       ///< coefficient of E at infinity
    double discriminant() const { return b * b - 4.0 * a * c; }
};

struct Classification {
    bool elliptic = false;          ///< b^2 - 4ac > 0
    bool sign_ok = false;           ///< (c - a)(a - b + c) <= 0
    bool degenerate_front = false;  ///< a - b + c = 0 or a + b + c = 0
    std::string tag;                ///< minimal | cmc1 | constant-Ke | generic
    double k = 0.0;                 ///< constant-Ke value when tagged
};

Classification classify(const WeingartenCoeffs& co);

ScalarField weingarten_residual_surface(const SurfaceData& d, const WeingartenCoeffs& co);
/// det((a-b+c) B* + (c-a) E) - (b^2 - 4ac).
ScalarField weingarten_residual_infinity(const InfinityData& inf, const WeingartenCoeffs& co);
double weingarten_residual_infinity(const Mat2& bstar, const WeingartenCoeffs& co);
/// tr B* + 2, the reduced equation when a - b + c = 0.
ScalarField cmc1_residual(const InfinityData& inf);

/// Base data for the Monge-Ampere problem: I* = e^{2v}|dz|^2 and II*.
struct MABase {
    ScalarField v;
    SymTensor2Field iistar;

    InfinityData infinity_data() const;
    /// Codazzi and Gauss residuals of the base pair.
    AdmissibilityResiduals admissibility(const Region& r = Region::inner(2)) const;
};

/// I* = 2|dz|^2/(1-|z|^2)^2 (the totally geodesic case), II* = I*, optionally
/// conformally changed by e^{2 phi} with II* shifted by Bbar(I*, e^{2phi} I*).
MABase fuchsian_base(const ChartPtr& chart, const std::optional<ScalarField>& phi = std::nullopt);
/// I* = e^{2 u0}|dz|^2, II* = 0.
MABase umbilic_base(const ChartPtr& chart, double u0);
/// Flat I*, II* = lambda (1 + eps n(z)) |dz|^2 with a smooth seeded n.
MABase perturbed_flat_base(const ChartPtr& chart, double lambda, double eps, unsigned long long seed);

struct MAProblem {
    MABase base;
    WeingartenCoeffs coeffs;
    /// Values imposed on the Dirichlet margin (ignored on periodic charts).
    std::optional<ScalarField> boundary;
    int margin = 2;
};

/// det_{I*}(T) - (b^2 - 4ac) e^{4u},
/// T = (a-b+c)(II* + Bbar(I*, e^{2u} I*)) + (c-a) e^{2u} I*.
ScalarField ma_residual(const ScalarField& u, const MAProblem& p);
/// det((a-b+c) B*_u + (c-a) E) - (b^2 - 4ac) for the data of e^{2u} I*.
ScalarField ma_residual_operator_form(const ScalarField& u, const MAProblem& p);
/// II* + Bbar(I*, e^{2u} I*) in the same discretization as ma_residual.
SymTensor2Field ma_second_form(const ScalarField& u, const MAProblem& p);

struct NewtonConfig {
    double tol = 1e-10;
    int max_iter = 30;
    int max_halvings = 30;
};

struct MASolution {
    ScalarField u;
    std::vector<double> newton_trace;  ///< sup residual before each step and at the end
    double positivity_certificate = 0.0;
    bool converged = false;
    bool positive = false;
    bool accepted = false;
    bool pinned_mean = false;
    /// max r_{k+1} / r_k^2 over steps with r_k below 1e-2 and r_k^2 >= tol.
    double quadratic_constant = 0.0;
};

/// Constant u whose e^{2u} solves the spatially averaged scalar equation
/// (the larger root when both are positive).
double default_initial_constant(const MAProblem& p);

/// Damped Newton with the exact Jacobian. NotElliptic when b^2 - 4ac <= 0,
/// DegenerateFrontCoefficients when a - b + c = 0, NewtonDiverged on failure.
MASolution ma_newton_solve(const MAProblem& p, const NewtonConfig& cfg = {},
                           const std::optional<ScalarField>& initial = std::nullopt);

struct GeometricReport {
    double sup_weingarten = 0.0;  ///< sup |a K_e + b H + c| on the rebuilt surface
    double sup_mean_curvature = 0.0;
    double sup_ke_error = 0.0;    ///< sup |K_e - k| for the constant-Ke tag
    double tame_margin = 0.0;
    bool tame = false;
};

/// Rebuilds the Epstein surface of e^{2u} I* and evaluates the Weingarten
/// relation on nodes at least `margin` from the chart edge. Meaningful when
/// II* is the Epstein second form of I*.
GeometricReport verify_solution_geometrically(const MASolution& sol, const MAProblem& p, int margin = 4);

/// det B and tr B from B* via the closed-form transfer formulas.
double det_b_from_bstar(const Mat2& bstar);
double trace_b_from_bstar(const Mat2& bstar);

}  // namespace epsteinlab
