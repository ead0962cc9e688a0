#pragma once

#include <array>
#include <cmath>
#include <random>

#include "epsteinlab/conformal.hpp"

namespace epsteinlab {

/// Vector of R^{3,1}; index 0 is the time coordinate.
struct MinkVec {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    MinkVec() = default;
    MinkVec(double a, double b, double d, double e) : c{a, b, d, e} {}

    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    friend MinkVec operator+(const MinkVec& a, const MinkVec& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    friend MinkVec operator-(const MinkVec& a, const MinkVec& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    }
    friend MinkVec operator*(double s, const MinkVec& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }
    friend MinkVec operator*(const MinkVec& a, double s) { return s * a; }
    friend MinkVec operator-(const MinkVec& a) { return -1.0 * a; }
    double euclidean_norm() const { return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]); }
};

template <>
inline MinkVec nan_value<MinkVec>() {
    const double q = std::numeric_limits<double>::quiet_NaN();
    return {q, q, q, q};
}
inline double node_norm(const MinkVec& v) { return v.euclidean_norm(); }

using MinkField = Field<MinkVec>;

/// Signature (-,+,+,+).
inline double mink_inner(const MinkVec& a, const MinkVec& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Point of the upper sheet <x,x> = -1, x0 > 0.
struct HyperboloidPoint {
    MinkVec x;

    /// Validates the hyperboloid equation within tol; ConfigInvalid otherwise.
    static HyperboloidPoint checked(const MinkVec& x, double tol = 1e-9);
    static HyperboloidPoint origin() { return {{1.0, 0.0, 0.0, 0.0}}; }
};

/// Incidence constant: horospheres are {x : <x, sigma> = -c0}.
inline const double kIncidence = 1.0 / std::sqrt(2.0);

/// l(z) = (1+|z|^2, 2 Re z, 2 Im z, 1-|z|^2) / 2, pulling back |dz|^2.
MinkVec standard_null_section(cplx z);
MinkVec null_section_dx(cplx z);
MinkVec null_section_dy(cplx z);
/// Null vector with <l(z), m0> = -1 and <m0, dl> = 0 for every z.
MinkVec null_transversal();

/// Boundary point (n1 + i n2)/(n0 + n3) of a future null direction.
cplx boundary_point(const MinkVec& n);

std::array<double, 3> to_poincare_ball(const HyperboloidPoint& p);
HyperboloidPoint from_poincare_ball(const std::array<double, 3>& b);

/// cosh d = -<x, y>.
double hyperbolic_distance(const MinkVec& x, const MinkVec& y);

/// Roots of the envelope system <x,sigma> = -c0, <x,d1> = <x,d2> = 0,
/// <x,x> = -1. A null sigma gives a single root (the quadratic is linear);
/// otherwise both roots are returned, larger x0 first.
std::vector<MinkVec> horosphere_roots(const MinkVec& sigma, const MinkVec& d1, const MinkVec& d2,
                                      double c0 = kIncidence);

/// One envelope point. For null sigma the root is unique and orientation
/// only matters for the normal; for a non-null frame orientation +1 selects
/// the root with larger x0.
HyperboloidPoint horosphere_solve(const MinkVec& sigma, const MinkVec& d1, const MinkVec& d2, int orientation = 1,
                                  double c0 = kIncidence);

/// 4x4 matrix acting on R^{3,1}.
struct Lorentz {
    std::array<std::array<double, 4>, 4> m{};

    static Lorentz identity();
    /// Boost of the given rapidity mixing time with spatial axis 1..3.
    static Lorentz boost(int axis, double rapidity);
    /// Rotation by angle in the spatial plane (a, b), 1 <= a, b <= 3.
    static Lorentz rotation(int a, int b, double angle);
    static Lorentz random(std::mt19937_64& rng, double max_rapidity = 1.0);

    MinkVec operator()(const MinkVec& v) const;
    friend Lorentz operator*(const Lorentz& a, const Lorentz& b);
};

/// sigma = e^U l with U the flat log-factor of h, and its partial
/// derivatives e^U (U_i l + l_i) with U_i by finite differences.
struct LightConeSection {
    MinkField sigma;
    MinkField d1;
    MinkField d2;
    ScalarField log_factor;
    CovectorField dlog;

    static LightConeSection from_metric(const ConformalMetric& h);
    /// sup |<sigma, sigma>|.
    double null_residual() const;
};

}  // namespace epsteinlab
