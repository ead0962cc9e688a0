#pragma once

#include <string>

#include "epsteinlab/epstein.hpp"
#include "epsteinlab/holomorphic.hpp"

namespace epsteinlab {

/// Induced data of a section of the light cone.
struct ConeSurfaceData {
    SymTensor2Field Istar_c, IIstar_c;
    OperatorField Bstar_c;
};

/// <d sigma, d sigma> with finite-difference derivatives of the section
/// (taken on the non-periodic copy of its chart).
SymTensor2Field cone_first_form(const MinkField& sigma);

/// Second form of the section whose induced metric is h, from the closed form
/// Bbar(h_S, e^{2w} h_S) + (e^{2w} - 1) h_S / 2 with h = e^{2w} h_S.
SymTensor2Field cone_second_form(const ConformalMetric& h);

/// First variation Hess_{I*_c}(u_dot) + u_dot I*_c for I*_c = e^{2W}|dz|^2.
SymTensor2Field cone_variation(const ScalarField& u_dot, const ScalarField& istar_c_log_factor);

/// Cone data of the dual surface x + N of an Epstein surface.
ConeSurfaceData cone_data_from_surface(const EmbeddedSurface& s);
/// Cone data of the section e^{U} l of a conformal metric.
ConeSurfaceData cone_data_from_metric(const ConformalMetric& h);

struct DualityResiduals {
    double first = 0.0;   ///< sup |I*_c - 2 I*|
    double second = 0.0;  ///< sup |II*_c - II* - I*|
};

DualityResiduals duality_check(const InfinityData& inf, const ConeSurfaceData& cone, const Region& r = Region::all());

/// sup |K(I*_c) - (1 - tr B*_c)|.
double cone_gauss_residual(const ConeSurfaceData& cone, const Region& r = Region::all());

/// sup |II*_c(e^{2u}h) - II*_c(h) - Bbar(h, e^{2u}h) - (e^{2u} - 1) h / 2|.
double cone_conformal_change_residual(const ConformalMetric& h, const ScalarField& u, const Region& r = Region::all());

/// sup |II*(e^{2u}h) - II*(h) - Bbar(h, e^{2u}h)| with both II* taken from
/// Epstein surfaces.
double epstein_conformal_change_residual(const ConformalMetric& h, const ScalarField& u,
                                         const Region& r = Region::all());

/// Simply connected domain with a closed-form Riemann map onto the disk.
struct UniformizedDomain {
    std::string name;
    HolomorphicMap phi;
    ChartPtr chart;
};

/// "disk-identity", "strip" (0 < Im z < pi) or "half-plane", gridded at
/// spacing h over a compact window of the domain.
UniformizedDomain uniformized_domain(const std::string& name, double h);

struct SchwarzianAtInfinity {
    double residual = 0.0;   ///< sup |II*_0 - Re S(phi)|
    double reference = 0.0;  ///< sup |Re S(phi)|
    double relative = 0.0;   ///< residual / reference, or the residual itself when reference vanishes
};

/// Builds Epstein data of phi^*(Poincare), and compares the trace-free part
/// of II* with Re S(phi) over nodes at least `margin` from the window edge.
SchwarzianAtInfinity schwarzian_at_infinity_check(const UniformizedDomain& d, int margin = 3);

}  // namespace epsteinlab
