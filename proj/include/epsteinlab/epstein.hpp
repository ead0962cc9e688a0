#pragma once

#include <vector>

#include "epsteinlab/minkowski.hpp"

namespace epsteinlab {

/// Grid map into the hyperboloid with unit normal. The chart is the
/// non-periodic copy of the metric chart with singular nodes excluded.
struct EmbeddedSurface {
    MinkField x;
    MinkField normal;
    int orientation = 1;
    std::vector<std::size_t> singular;
    /// Partial derivatives of x and N from the differentiated envelope
    /// equations. Empty (null chart) for surfaces assembled elsewhere, in
    /// which case finite differences of x and N are used.
    MinkField dx1, dx2, dn1, dn2;

    const ChartPtr& chart_ptr() const { return x.chart_ptr(); }
    bool has_tangents() const { return static_cast<bool>(dx1.chart_ptr()); }
    /// sup of |<x,x>+1|, |<N,N>-1| and |<N,x>|.
    double model_residual() const;
    /// sup |<N, dx/dx_i>| with finite-difference tangents (envelope tangency).
    double tangency_residual(const Region& r = Region::all()) const;
};

struct EpsteinOptions {
    int orientation = 1;
    /// Throw SingularEnvelope instead of excluding singular nodes.
    bool strict = false;
    /// det I / det(2h) below this marks a node singular (E + B not invertible).
    double singular_ratio = 1e-10;
};

EmbeddedSurface epstein_surface(const ConformalMetric& h, const EpsteinOptions& opt = {});

struct SurfaceData {
    SymTensor2Field I, II, III;
    OperatorField B;
    /// |<d1 N, d2 x> - <d2 N, d1 x>| before symmetrization.
    ScalarField asymmetry;
};

SurfaceData fundamental_forms(const EmbeddedSurface& s);

/// Boundary endpoint of the normal ray at every node.
ComplexField hyperbolic_gauss_map(const EmbeddedSurface& s);
/// sup |G(z) - z|.
double gauss_map_residual(const EmbeddedSurface& s, const Region& r = Region::all());

struct InfinityData {
    SymTensor2Field Istar, IIstar;
    OperatorField Bstar;

    /// Chart-frame metric log-factor of Istar (log det / 4).
    ScalarField log_factor() const { return conformal_log_factor(Istar); }
};

InfinityData data_at_infinity(const SurfaceData& d);
/// Builds B* = Istar^{-1} IIstar from the pair.
InfinityData infinity_data_from_pair(SymTensor2Field istar, SymTensor2Field iistar);

/// B* = (E + B)^{-1}(E - B).
Mat2 shape_at_infinity(const Mat2& b);
OperatorField shape_at_infinity(const OperatorField& b);
/// B = (E + B*)^{-1}(E - B*).
Mat2 b_from_bstar(const Mat2& bstar);
OperatorField b_from_bstar(const OperatorField& bstar);

struct TameReport {
    ScalarField margin;  ///< 1 - max |principal curvature|
    double min_margin = 0.0;
    bool tame = false;
};

TameReport htame_check(const SurfaceData& d, const Region& r = Region::all());

struct AdmissibilityResiduals {
    double codazzi = 0.0;
    double gauss = 0.0;
};

/// Codazzi residual of IIstar and sup |tr_{Istar} IIstar + K(Istar)|.
AdmissibilityResiduals admissibility_residuals(const InfinityData& inf, const Region& r = Region::all());

/// (e^{2r} I* + 2 II* + e^{-2r} III*)/2 with III* = II* (I*)^{-1} II*.
SymTensor2Field equidistant_metric(const InfinityData& inf, double r);

}  // namespace epsteinlab
