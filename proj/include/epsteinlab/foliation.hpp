#pragma once

#include <array>
#include <vector>

#include "epsteinlab/schwarzian.hpp"

namespace epsteinlab {

/// Flat torus C / (Z + tau Z).
struct TorusModulus {
    cplx tau;

    explicit TorusModulus(cplx t);
    double area() const { return tau.imag(); }
};

/// Q = A dz^2 on a flat torus.
struct TorusQuadDiff {
    cplx A;
};

/// Closed leaves in the class p + q tau with transverse measure w.
struct SlopeFoliation {
    int p = 1, q = 0;
    double w = 1.0;

    SlopeFoliation(int p, int q, double w = 1.0);
};

/// theta with A e^{2 i theta} > 0, i.e. -arg(A)/2.
double horizontal_angle(const TorusQuadDiff& q, double eps = 1e-14);

struct DirectionField {
    ComplexField direction;  ///< unit e^{i theta}; NaN at zeros
    std::vector<std::size_t> zeros;
};
DirectionField horizontal_direction_field(const QuadDiffField& q, double eps = 1e-12);

/// Integral of |Q|: |A| Im tau on a torus.
double extremal_length_from_Q(const TorusQuadDiff& q, const TorusModulus& t);
double extremal_length_from_Q(const QuadDiffField& q);

/// w^2 |p + q tau|^2 / Im tau.
double extremal_length(const SlopeFoliation& f, const TorusModulus& t);
/// The constant Q whose horizontal foliation is f: A = w^2 conj(p + q tau)^2 / (Im tau)^2.
TorusQuadDiff torus_foliation_Q(const SlopeFoliation& f, const TorusModulus& t);
/// Energy of the harmonic map to the dual tree, 2 ext.
double foliation_energy(const SlopeFoliation& f, const TorusModulus& t);

/// Beltrami coefficient of the affine deformation tau -> tau + eps d, per unit eps.
cplx affine_beltrami(const TorusModulus& t, cplx d);

/// |(E(tau + eps d) - E(tau - eps d)) / (2 eps) + 4 Re int Phi mu| with Phi = -Q.
double gardiner_residual(const SlopeFoliation& f, const TorusModulus& t, cplx d, double eps);
/// log2 of the residual ratio between eps and eps/2.
double gardiner_order(const SlopeFoliation& f, const TorusModulus& t, cplx d, double eps);

/// Image of (f, tau) under the unimodular change of marking M = (a b; c d):
/// tau' = (a tau + b)/(c tau + d) with the class p + q tau re-expressed.
std::pair<SlopeFoliation, TorusModulus> change_marking(const SlopeFoliation& f, const TorusModulus& t,
                                                       const std::array<int, 4>& m);

/// (a + ib)/2 for a traceless symmetric u = (a b; b -a).
cplx beltrami_from_variation(const Mat2& u);
ComplexField beltrami_from_variation(const OperatorField& u);
/// sup of |tr u| and |u12 - u21| (flat metric).
double variation_defect(const OperatorField& u);

struct PairingResult {
    double lhs = 0.0;  ///< int <hdot, Re q> da for hdot = u as a flat tensor
    double rhs = 0.0;  ///< factor * Re int q mu
    double residual = 0.0;
};

/// Flat-metric pairing identity on a periodic chart; `factor` is 4 for the
/// true identity and exposed for anti-regression checks.
PairingResult pairing_residual(const ComplexField& q, const OperatorField& u, double factor = 4.0);

struct NehariCertificate {
    double integral_q = 0.0;   ///< int |q| dx dy
    double hyp_area = 0.0;     ///< int 4/(1-|z|^2)^2 dx dy
    double bound = 0.0;        ///< 3/2 hyp_area
    double margin = 0.0;       ///< bound - integral_q
    double max_ratio = 0.0;    ///< sup |q| / rho
    bool pass = false;
};

/// Checks int |q| <= (3/2) Area_hyp over the nodes with |z| <= radius.
NehariCertificate nehari_ext_certificate(const ComplexField& q, double radius);

}  // namespace epsteinlab
