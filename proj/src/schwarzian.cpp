#include "epsteinlab/schwarzian.hpp"

#include <cmath>

namespace epsteinlab {

double QuadDiffField::holomorphy_residual(const Region& r) const { return sup_norm(dbar(g), r); }

Sym2 real_quadratic(cplx g) { return {g.real(), -g.imag(), -g.real()}; }

SymTensor2Field QuadDiffField::real_part() const { return g.map(real_quadratic); }

cplx schwarzian_at(const HolomorphicMap& f, cplx z) {
    const Jet j = f.jet(z);
    if (!(std::abs(j.d1) > 1e-12)) throw CriticalPoint(z);
    const cplx r = j.d2 / j.d1;
    return j.d3 / j.d1 - 1.5 * r * r;
}

QuadDiffField schwarzian_derivative(const HolomorphicMap& f, const ChartPtr& chart) {
    return {ComplexField::sample(chart, [&](cplx z) { return schwarzian_at(f, z); })};
}

double cocycle_residual(const HolomorphicMap& f, const HolomorphicMap& g, const ChartPtr& chart) {
    const HolomorphicMap gf = compose(f, g);
    const ScalarField res = ScalarField::sample(chart, [&](cplx z) {
        const Jet jf = f.jet(z);
        const cplx lhs = schwarzian_at(gf, z);
        const cplx rhs = schwarzian_at(g, jf.f) * jf.d1 * jf.d1 + schwarzian_at(f, z);
        return std::abs(lhs - rhs);
    });
    return sup_norm(res);
}

SymTensor2Field bbar_flat(const ScalarField& s, const ScalarField& u) {
    require_same_chart(s, u);
    const ScalarField eu = u.map([](double v) { return std::exp(-v); });
    const SymTensor2Field he = fd_hessian_flat(eu);
    const CovectorField du = fd_gradient(u);
    const CovectorField ds = fd_gradient(s);
    return SymTensor2Field::generate(u.chart_ptr(), [&](std::size_t k) {
        return -std::exp(u[k]) * he[k] - 2.0 * Sym2::sym_outer(ds[k], du[k]) +
               (ds[k].dot(du[k]) + 0.5 * du[k].norm2()) * Sym2::identity();
    });
}

SymTensor2Field bbar_tensor(const ConformalMetric& h, const ScalarField& u) {
    return bbar_flat(h.flat_log_factor(), u);
}

namespace {

// Trace-free part for any metric conformal to |dz|^2.
SymTensor2Field traceless_conformal(const SymTensor2Field& t) {
    return t.map([](const Sym2& s) {
        const double m = 0.5 * (s.xx - s.yy);
        return Sym2{m, s.xy, -m};
    });
}

}  // namespace

SymTensor2Field schwarzian_tensor(const ConformalMetric& h, const ScalarField& u) {
    return traceless_conformal(bbar_tensor(h, u));
}

double schwarzian_vs_derivative_residual(const HolomorphicMap& f, const ChartPtr& chart, const Region& r) {
    const ScalarField u = ScalarField::sample(chart, [&](cplx z) {
        const Jet j = f.jet(z);
        if (!(std::abs(j.d1) > 1e-12)) throw CriticalPoint(z);
        return std::log(std::abs(j.d1));
    });
    const SymTensor2Field b = schwarzian_tensor(ConformalMetric::flat(ScalarField(chart, 0.0)), u);
    const SymTensor2Field q = schwarzian_derivative(f, chart).real_part();
    // Both sides are trace free; measure the difference as a quadratic
    // differential, |Re(w dz^2)| = |w|.
    const ScalarField d = zip(b, q, [](const Sym2& x, const Sym2& y) {
        const Sym2 e = x - y;
        return std::hypot(0.5 * (e.xx - e.yy), e.xy);
    });
    return sup_norm(d, r);
}

double cocycle_tensor_residual(const ConformalMetric& g, const ScalarField& u, const ScalarField& v,
                               const Region& r) {
    const ScalarField s = g.flat_log_factor();
    const SymTensor2Field total = traceless_conformal(bbar_flat(s, u + v));
    const SymTensor2Field first = traceless_conformal(bbar_flat(s, u));
    const SymTensor2Field second = traceless_conformal(bbar_flat(s + u, v));
    return sup_norm(total - first - second, r);
}

NehariResult nehari_ratio(const HolomorphicMap& f, const ChartPtr& disk_chart, double radius, double tol) {
    if (radius < 0.0) radius = 1.0 - 5.0 * std::max(disk_chart->dx(), disk_chart->dy());
    NehariResult out;
    const auto& c = *disk_chart;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c.active(k)) continue;
        const cplx z = c.z(k);
        const double r2 = std::norm(z);
        if (std::sqrt(r2) > radius) continue;
        const double ratio = std::abs(schwarzian_at(f, z)) * (1.0 - r2) * (1.0 - r2) / 4.0;
        if (ratio > out.ratio) {
            out.ratio = ratio;
            out.argmax = z;
        }
    }
    out.pass = out.ratio <= 1.5 + tol;
    return out;
}

}  // namespace epsteinlab
