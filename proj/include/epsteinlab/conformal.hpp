#pragma once

#include <string>

#include "epsteinlab/calculus.hpp"

namespace epsteinlab {

enum class BaseKind { Flat, Spherical, DiskHyperbolic };

std::string to_string(BaseKind b);
BaseKind base_from_string(const std::string& s);

/// Log-factor of a named base relative to |dz|^2: 0, log 2/(1+|z|^2) or
/// log 2/(1-|z|^2).
double base_log_factor(BaseKind b, cplx z);
/// Its gradient, in closed form.
Vec2 base_log_gradient(BaseKind b, cplx z);

/// The metric e^{2u} * base.
struct ConformalMetric {
    BaseKind base = BaseKind::Flat;
    ScalarField u;

    static ConformalMetric flat(ScalarField u) { return {BaseKind::Flat, std::move(u)}; }
    const ChartPtr& chart_ptr() const { return u.chart_ptr(); }
    /// U with metric = e^{2U}|dz|^2.
    ScalarField flat_log_factor() const;
    SymTensor2Field tensor() const;
};

/// Pointwise e^{2U} |dz|^2.
SymTensor2Field conformal_tensor(const ScalarField& log_factor);
/// Inverse of conformal_tensor for a tensor that is conformal to |dz|^2: U = log(det g)/4.
ScalarField conformal_log_factor(const SymTensor2Field& g);

/// Hessian of v for e^{2w}|dz|^2: Hess v - 2 sym(dw (x) dv) + <dw,dv> |dz|^2.
SymTensor2Field hessian_conformal(const ScalarField& w, const ScalarField& v);
SymTensor2Field hessian_conformal(const ConformalMetric& h, const ScalarField& v);

/// K = -e^{-2U} Lap U for the flat log-factor U.
ScalarField gauss_curvature(const ConformalMetric& h);
ScalarField gauss_curvature_of_factor(const ScalarField& log_factor);

SymTensor2Field traceless_part(const SymTensor2Field& t, const SymTensor2Field& g);
ScalarField metric_trace(const SymTensor2Field& t, const SymTensor2Field& g);

/// Quadrature weight of node k: trapezoid along Dirichlet axes, uniform
/// along periodic ones, zero on excluded nodes.
double quadrature_weight(const GridChart& c, std::size_t k);
double integrate(const ScalarField& f);

/// Integral of <t1, t2>_g da_g.
double tensor_pairing(const SymTensor2Field& t1, const SymTensor2Field& t2, const SymTensor2Field& g);

/// Pointwise flat-frame norm of (D_1 T)(e2, .) - (D_2 T)(e1, .) for the
/// Levi-Civita connection of e^{2U}|dz|^2.
ScalarField codazzi_residual(const SymTensor2Field& t, const ScalarField& log_factor);
ScalarField codazzi_residual(const SymTensor2Field& t, const ConformalMetric& g);

/// Pointwise |gB - (gB)^T|.
ScalarField self_adjoint_residual(const OperatorField& b, const SymTensor2Field& g);

/// Operator A = g^{-1} T, throwing DegenerateMetric where det g <= 0.
OperatorField raise_field(const SymTensor2Field& t, const SymTensor2Field& g);

void check_positive_definite(const SymTensor2Field& g);

}  // namespace epsteinlab
