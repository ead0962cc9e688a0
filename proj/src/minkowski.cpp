#include "epsteinlab/minkowski.hpp"

#include <Eigen/Dense>

namespace epsteinlab {

HyperboloidPoint HyperboloidPoint::checked(const MinkVec& x, double tol) {
    const double r = mink_inner(x, x) + 1.0;
    if (!(std::abs(r) <= tol * std::max(1.0, x[0] * x[0])) || !(x[0] > 0.0))
        throw ConfigInvalid("vector is not on the upper hyperboloid sheet");
    return {x};
}

MinkVec standard_null_section(cplx z) {
    const double r2 = std::norm(z);
    return {0.5 * (1.0 + r2), z.real(), z.imag(), 0.5 * (1.0 - r2)};
}

MinkVec null_section_dx(cplx z) { return {z.real(), 1.0, 0.0, -z.real()}; }
MinkVec null_section_dy(cplx z) { return {z.imag(), 0.0, 1.0, -z.imag()}; }
MinkVec null_transversal() { return {1.0, 0.0, 0.0, -1.0}; }

cplx boundary_point(const MinkVec& n) { return cplx(n[1], n[2]) / (n[0] + n[3]); }

std::array<double, 3> to_poincare_ball(const HyperboloidPoint& p) {
    const double s = 1.0 / (1.0 + p.x[0]);
    return {s * p.x[1], s * p.x[2], s * p.x[3]};
}

HyperboloidPoint from_poincare_ball(const std::array<double, 3>& b) {
    const double r2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    if (!(r2 < 1.0)) throw ConfigInvalid("point outside the open unit ball");
    const double s = 1.0 / (1.0 - r2);
    return {{(1.0 + r2) * s, 2.0 * b[0] * s, 2.0 * b[1] * s, 2.0 * b[2] * s}};
}

double hyperbolic_distance(const MinkVec& x, const MinkVec& y) {
    return std::acosh(std::max(1.0, -mink_inner(x, y)));
}

std::vector<MinkVec> horosphere_roots(const MinkVec& sigma, const MinkVec& d1, const MinkVec& d2, double c0) {
    Eigen::Matrix<double, 3, 4> a;
    const MinkVec* rows[3] = {&sigma, &d1, &d2};
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 4; ++k) a(r, k) = (k == 0 ? -1.0 : 1.0) * (*rows[r])[k];

    // Kernel direction: generalized cross product of the three rows.
    MinkVec ker;
    for (int i = 0; i < 4; ++i) {
        Eigen::Matrix3d minor;
        for (int r = 0; r < 3; ++r)
            for (int k = 0, col = 0; k < 4; ++k)
                if (k != i) minor(r, col++) = a(r, k);
        ker[i] = ((i % 2) ? -1.0 : 1.0) * minor.determinant();
    }
    const double scale = a.row(0).norm() * a.row(1).norm() * a.row(2).norm();
    if (!(ker.euclidean_norm() > 1e-12 * scale)) throw DegenerateFrame();

    const Eigen::Vector3d b(-c0, 0.0, 0.0);
    const Eigen::Matrix3d gram = a * a.transpose();
    const Eigen::Vector4d p4 = a.transpose() * gram.ldlt().solve(b);
    const MinkVec p{p4[0], p4[1], p4[2], p4[3]};

    // <p + s k, p + s k> = -1  <=>  qa s^2 + 2 qb s + qc = 0.
    const double qa = mink_inner(ker, ker);
    const double qb = mink_inner(p, ker);
    const double qc = mink_inner(p, p) + 1.0;
    const double kk = ker.euclidean_norm() * ker.euclidean_norm();
    std::vector<MinkVec> out;
    if (std::abs(qa) <= 1e-10 * kk) {
        if (qb == 0.0) throw NoRealRoot();
        out.push_back(p + (-qc / (2.0 * qb)) * ker);
        return out;
    }
    const double disc = qb * qb - qa * qc;
    if (disc < 0.0) throw NoRealRoot();
    const double q = -(qb + std::copysign(std::sqrt(disc), qb));
    const double s1 = q / qa;
    const double s2 = q != 0.0 ? qc / q : s1;
    MinkVec x1 = p + s1 * ker, x2 = p + s2 * ker;
    if (x2[0] > x1[0]) std::swap(x1, x2);
    out.push_back(x1);
    out.push_back(x2);
    return out;
}

HyperboloidPoint horosphere_solve(const MinkVec& sigma, const MinkVec& d1, const MinkVec& d2, int orientation,
                                  double c0) {
    const auto roots = horosphere_roots(sigma, d1, d2, c0);
    const MinkVec& x = (roots.size() == 2 && orientation < 0) ? roots[1] : roots[0];
    if (!(x[0] > 0.0)) throw NoRealRoot();
    return {x};
}

Lorentz Lorentz::identity() {
    Lorentz l;
    for (int i = 0; i < 4; ++i) l.m[i][i] = 1.0;
    return l;
}

Lorentz Lorentz::boost(int axis, double rapidity) {
    Lorentz l = identity();
    l.m[0][0] = l.m[axis][axis] = std::cosh(rapidity);
    l.m[0][axis] = l.m[axis][0] = std::sinh(rapidity);
    return l;
}

Lorentz Lorentz::rotation(int a, int b, double angle) {
    Lorentz l = identity();
    l.m[a][a] = l.m[b][b] = std::cos(angle);
    l.m[a][b] = -std::sin(angle);
    l.m[b][a] = std::sin(angle);
    return l;
}

Lorentz Lorentz::random(std::mt19937_64& rng, double max_rapidity) {
    std::uniform_real_distribution<double> ang(-M_PI, M_PI), rap(-max_rapidity, max_rapidity);
    Lorentz l = rotation(1, 2, ang(rng)) * rotation(2, 3, ang(rng));
    l = boost(1 + static_cast<int>(rng() % 3), rap(rng)) * l;
    return rotation(1, 3, ang(rng)) * l;
}

MinkVec Lorentz::operator()(const MinkVec& v) const {
    MinkVec out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
    return out;
}

Lorentz operator*(const Lorentz& a, const Lorentz& b) {
    Lorentz out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) out.m[i][j] += a.m[i][k] * b.m[k][j];
    return out;
}

LightConeSection LightConeSection::from_metric(const ConformalMetric& h) {
    LightConeSection s;
    s.log_factor = h.flat_log_factor();
    s.dlog = fd_gradient(s.log_factor);
    const auto& chart = h.chart_ptr();
    const auto& c = *chart;
    s.sigma = MinkField::generate(chart, [&](std::size_t k) {
        return std::exp(s.log_factor[k]) * standard_null_section(c.z(k));
    });
    s.d1 = MinkField::generate(chart, [&](std::size_t k) {
        const cplx z = c.z(k);
        return std::exp(s.log_factor[k]) * (s.dlog[k].x * standard_null_section(z) + null_section_dx(z));
    });
    s.d2 = MinkField::generate(chart, [&](std::size_t k) {
        const cplx z = c.z(k);
        return std::exp(s.log_factor[k]) * (s.dlog[k].y * standard_null_section(z) + null_section_dy(z));
    });
    return s;
}

double LightConeSection::null_residual() const {
    return sup_norm(sigma.map([](const MinkVec& v) { return mink_inner(v, v); }));
}

}  // namespace epsteinlab
