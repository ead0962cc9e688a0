#include "epsteinlab/foliation.hpp"

#include <cmath>
#include <numeric>

namespace epsteinlab {

TorusModulus::TorusModulus(cplx t) : tau(t) {
    if (!(t.imag() > 0.0)) throw ConfigInvalid("torus modulus needs Im tau > 0");
}

SlopeFoliation::SlopeFoliation(int p_, int q_, double w_) : p(p_), q(q_), w(w_) {
    if (std::gcd(p, q) != 1) throw ConfigInvalid("slope (p, q) must be coprime");
    if (!(w > 0.0)) throw ConfigInvalid("transverse weight must be positive");
}

double horizontal_angle(const TorusQuadDiff& q, double eps) {
    if (!(std::abs(q.A) > eps)) throw ZeroDifferential();
    return -0.5 * std::arg(q.A);
}

DirectionField horizontal_direction_field(const QuadDiffField& q, double eps) {
    DirectionField out;
    out.direction = ComplexField(q.g.chart_ptr());
    const auto& c = q.g.chart();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c.active(k)) continue;
        if (!(std::abs(q.g[k]) > eps)) {
            out.zeros.push_back(k);
            continue;
        }
        out.direction[k] = std::polar(1.0, -0.5 * std::arg(q.g[k]));
    }
    return out;
}

double extremal_length_from_Q(const TorusQuadDiff& q, const TorusModulus& t) { return std::abs(q.A) * t.area(); }

double extremal_length_from_Q(const QuadDiffField& q) {
    return integrate(q.g.map([](cplx g) { return std::abs(g); }));
}

double extremal_length(const SlopeFoliation& f, const TorusModulus& t) {
    return f.w * f.w * std::norm(cplx(f.p) + static_cast<double>(f.q) * t.tau) / t.tau.imag();
}

TorusQuadDiff torus_foliation_Q(const SlopeFoliation& f, const TorusModulus& t) {
    const cplx v = cplx(f.p) + static_cast<double>(f.q) * t.tau;
    const double im = t.tau.imag();
    return {f.w * f.w * std::conj(v) * std::conj(v) / (im * im)};
}

double foliation_energy(const SlopeFoliation& f, const TorusModulus& t) { return 2.0 * extremal_length(f, t); }

cplx affine_beltrami(const TorusModulus& t, cplx d) { return cplx(0.0, 1.0) * d / (2.0 * t.tau.imag()); }

double gardiner_residual(const SlopeFoliation& f, const TorusModulus& t, cplx d, double eps) {
    const cplx up = t.tau + eps * d, dn = t.tau - eps * d;
    if (!(up.imag() > 0.0) || !(dn.imag() > 0.0)) throw StepTooLarge();
    const double numeric =
        (foliation_energy(f, TorusModulus(up)) - foliation_energy(f, TorusModulus(dn))) / (2.0 * eps);
    // Phi = -Q is constant, so its pairing with the constant mu is a product
    // with the torus area.
    const cplx phi = -torus_foliation_Q(f, t).A;
    const double predicted = -4.0 * std::real(phi * affine_beltrami(t, d) * t.area());
    return std::abs(numeric - predicted);
}

double gardiner_order(const SlopeFoliation& f, const TorusModulus& t, cplx d, double eps) {
    return std::log2(gardiner_residual(f, t, d, eps) / gardiner_residual(f, t, d, 0.5 * eps));
}

std::pair<SlopeFoliation, TorusModulus> change_marking(const SlopeFoliation& f, const TorusModulus& t,
                                                       const std::array<int, 4>& m) {
    const int a = m[0], b = m[1], c = m[2], d = m[3];
    if (a * d - b * c != 1) throw ConfigInvalid("marking change must lie in SL(2,Z)");
    const TorusModulus t2((static_cast<double>(a) * t.tau + static_cast<double>(b)) /
                          (static_cast<double>(c) * t.tau + static_cast<double>(d)));
    // p + q tau = p' (c tau + d) + q' (a tau + b).
    const int p2 = a * f.p - b * f.q;
    const int q2 = -c * f.p + d * f.q;
    return {SlopeFoliation(p2, q2, f.w), t2};
}

cplx beltrami_from_variation(const Mat2& u) { return 0.5 * cplx(u.a11, 0.5 * (u.a12 + u.a21)); }

ComplexField beltrami_from_variation(const OperatorField& u) {
    return u.map([](const Mat2& m) { return beltrami_from_variation(m); });
}

double variation_defect(const OperatorField& u) {
    return sup_norm(u.map([](const Mat2& m) { return std::max(std::abs(m.trace()), std::abs(m.a12 - m.a21)); }));
}

PairingResult pairing_residual(const ComplexField& q, const OperatorField& u, double factor) {
    require_same_chart(q, u);
    const SymTensor2Field hdot = u.map([](const Mat2& m) { return sym_part(m); });
    const SymTensor2Field req = q.map(real_quadratic);
    const SymTensor2Field flat(q.chart_ptr(), Sym2::identity());
    PairingResult r;
    r.lhs = tensor_pairing(hdot, req, flat);
    const ComplexField mu = beltrami_from_variation(u);
    const ScalarField dens = zip(q, mu, [](cplx a, cplx b) { return std::real(a * b); });
    r.rhs = factor * integrate(dens);
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

NehariCertificate nehari_ext_certificate(const ComplexField& q, double radius) {
    const auto& c = q.chart();
    NehariCertificate out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c.active(k)) continue;
        const double r2 = std::norm(c.z(k));
        if (std::sqrt(r2) > radius) continue;
        const double w = quadrature_weight(c, k);
        const double rho = 4.0 / ((1.0 - r2) * (1.0 - r2));
        out.integral_q += w * std::abs(q[k]);
        out.hyp_area += w * rho;
        out.max_ratio = std::max(out.max_ratio, std::abs(q[k]) / rho);
    }
    out.bound = 1.5 * out.hyp_area;
    out.margin = out.bound - out.integral_q;
    out.pass = out.margin >= 0.0;
    return out;
}

}  // namespace epsteinlab
