#pragma once

#include "epsteinlab/conformal.hpp"
#include "epsteinlab/holomorphic.hpp"

namespace epsteinlab {

/// g dz^2 sampled on a chart.
struct QuadDiffField {
    ComplexField g;

    /// sup |d g / d zbar| over the region.
    double holomorphy_residual(const Region& r = Region::inner(1)) const;
    /// The real symmetric tensor Re(g dz^2) = (Re g, -Im g, -Re g).
    SymTensor2Field real_part() const;
};

Sym2 real_quadratic(cplx g);

/// f'''/f' - 3/2 (f''/f')^2 at z; CriticalPoint when f'(z) vanishes.
cplx schwarzian_at(const HolomorphicMap& f, cplx z);
QuadDiffField schwarzian_derivative(const HolomorphicMap& f, const ChartPtr& chart);

/// sup |S(g o f) - S(g)(f) f'^2 - S(f)| over the active nodes.
double cocycle_residual(const HolomorphicMap& f, const HolomorphicMap& g, const ChartPtr& chart);

/// Non trace-free Schwarzian tensor between e^{2s}|dz|^2 and e^{2s+2u}|dz|^2:
/// Hess(u) - du (x) du + |du|^2/2 g, with Hess - du(x)du discretized as
/// -e^{u} Hess_flat(e^{-u}) plus the conformal Christoffel terms of s.
SymTensor2Field bbar_flat(const ScalarField& s, const ScalarField& u);
SymTensor2Field bbar_tensor(const ConformalMetric& h, const ScalarField& u);
/// Trace-free part of bbar_tensor.
SymTensor2Field schwarzian_tensor(const ConformalMetric& h, const ScalarField& u);

/// sup |B(|dz|^2, f^*|dz|^2) - Re S(f)| with u = log|f'|, the difference measured
/// as a quadratic differential (|Re(w dz^2)| = |w|).
double schwarzian_vs_derivative_residual(const HolomorphicMap& f, const ChartPtr& chart,
                                         const Region& r = Region::inner(1));

/// sup |B(g, e^{2u+2v} g) - B(g, e^{2u} g) - B(e^{2u} g, e^{2u+2v} g)|.
double cocycle_tensor_residual(const ConformalMetric& g, const ScalarField& u, const ScalarField& v,
                               const Region& r = Region::all());

struct NehariResult {
    double ratio = 0.0;  ///< sup |S(f)| (1-|z|^2)^2 / 4
    cplx argmax{};
    bool pass = false;   ///< ratio <= 3/2 + tol
};

/// Nehari ratio over the disk chart nodes with |z| <= radius (default
/// 1 - 5 dx, keeping clear of the circle).
NehariResult nehari_ratio(const HolomorphicMap& f, const ChartPtr& disk_chart, double radius = -1.0,
                          double tol = 1e-9);

}  // namespace epsteinlab
