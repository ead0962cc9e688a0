#include "epsteinlab/conformal.hpp"

#include <cmath>

namespace epsteinlab {

std::string to_string(BaseKind b) {
    switch (b) {
        case BaseKind::Flat: return "flat";
        case BaseKind::Spherical: return "spherical";
        case BaseKind::DiskHyperbolic: return "disk-hyperbolic";
    }
    return "flat";
}

BaseKind base_from_string(const std::string& s) {
    if (s == "flat") return BaseKind::Flat;
    if (s == "spherical") return BaseKind::Spherical;
    if (s == "disk-hyperbolic" || s == "disk") return BaseKind::DiskHyperbolic;
    throw ConfigInvalid("unknown base metric '" + s + "'");
}

double base_log_factor(BaseKind b, cplx z) {
    const double r2 = std::norm(z);
    switch (b) {
        case BaseKind::Flat: return 0.0;
        case BaseKind::Spherical: return std::log(2.0 / (1.0 + r2));
        case BaseKind::DiskHyperbolic:
            return r2 < 1.0 ? std::log(2.0 / (1.0 - r2)) : std::numeric_limits<double>::quiet_NaN();
    }
    return 0.0;
}

Vec2 base_log_gradient(BaseKind b, cplx z) {
    const double r2 = std::norm(z);
    switch (b) {
        case BaseKind::Flat: return {};
        case BaseKind::Spherical: return (-2.0 / (1.0 + r2)) * Vec2{z.real(), z.imag()};
        case BaseKind::DiskHyperbolic: return (2.0 / (1.0 - r2)) * Vec2{z.real(), z.imag()};
    }
    return {};
}

ScalarField ConformalMetric::flat_log_factor() const {
    if (base == BaseKind::Flat) return u;
    const auto& c = u.chart();
    return ScalarField::generate(u.chart_ptr(), [&](std::size_t k) { return u[k] + base_log_factor(base, c.z(k)); });
}

SymTensor2Field ConformalMetric::tensor() const { return conformal_tensor(flat_log_factor()); }

SymTensor2Field conformal_tensor(const ScalarField& log_factor) {
    return log_factor.map([](double w) {
        const double e = std::exp(2.0 * w);
        return Sym2{e, 0.0, e};
    });
}

ScalarField conformal_log_factor(const SymTensor2Field& g) {
    return g.map([](const Sym2& s) { return 0.25 * std::log(s.det()); });
}

SymTensor2Field hessian_conformal(const ScalarField& w, const ScalarField& v) {
    require_same_chart(w, v);
    const SymTensor2Field hv = fd_hessian_flat(v);
    const CovectorField dw = fd_gradient(w);
    const CovectorField dv = fd_gradient(v);
    return SymTensor2Field::generate(v.chart_ptr(), [&](std::size_t k) {
        return hv[k] - 2.0 * Sym2::sym_outer(dw[k], dv[k]) + dw[k].dot(dv[k]) * Sym2::identity();
    });
}

SymTensor2Field hessian_conformal(const ConformalMetric& h, const ScalarField& v) {
    return hessian_conformal(h.flat_log_factor(), v);
}

ScalarField gauss_curvature_of_factor(const ScalarField& log_factor) {
    const ScalarField lap = laplacian(log_factor);
    return zip(log_factor, lap, [](double w, double l) { return -std::exp(-2.0 * w) * l; });
}

ScalarField gauss_curvature(const ConformalMetric& h) { return gauss_curvature_of_factor(h.flat_log_factor()); }

void check_positive_definite(const SymTensor2Field& g) {
    const auto& c = g.chart();
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!c.active(k)) continue;
        if (!(g[k].det() > 0.0) || !(g[k].xx > 0.0)) throw DegenerateMetric(k);
    }
}

OperatorField raise_field(const SymTensor2Field& t, const SymTensor2Field& g) {
    require_same_chart(t, g);
    check_positive_definite(g);
    return zip(t, g, [](const Sym2& a, const Sym2& m) { return raise(m, a); });
}

ScalarField metric_trace(const SymTensor2Field& t, const SymTensor2Field& g) {
    return raise_field(t, g).map([](const Mat2& m) { return m.trace(); });
}

SymTensor2Field traceless_part(const SymTensor2Field& t, const SymTensor2Field& g) {
    const ScalarField tr = metric_trace(t, g);
    return SymTensor2Field::generate(t.chart_ptr(), [&](std::size_t k) { return t[k] - (0.5 * tr[k]) * g[k]; });
}

double quadrature_weight(const GridChart& c, std::size_t k) {
    if (!c.active(k)) return 0.0;
    const int i = c.col(k), j = c.row(k);
    double w = c.dx() * c.dy();
    if (!c.periodic_x() && (i == 0 || i == c.nx() - 1)) w *= 0.5;
    if (!c.periodic_y() && (j == 0 || j == c.ny() - 1)) w *= 0.5;
    return w;
}

double integrate(const ScalarField& f) {
    const auto& c = f.chart();
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (c.active(k)) s += quadrature_weight(c, k) * f[k];
    return s;
}

double tensor_pairing(const SymTensor2Field& t1, const SymTensor2Field& t2, const SymTensor2Field& g) {
    require_same_chart(t1, t2);
    require_same_chart(t1, g);
    check_positive_definite(g);
    const ScalarField dens = ScalarField::generate(
        g.chart_ptr(), [&](std::size_t k) { return metric_pairing(t1[k], t2[k], g[k]) * std::sqrt(g[k].det()); });
    return integrate(dens);
}

ScalarField codazzi_residual(const SymTensor2Field& t, const ScalarField& log_factor) {
    require_same_chart(t, log_factor);
    const ScalarField t11 = t.map([](const Sym2& s) { return s.xx; });
    const ScalarField t12 = t.map([](const Sym2& s) { return s.xy; });
    const ScalarField t22 = t.map([](const Sym2& s) { return s.yy; });
    const ScalarField d1t12 = fd_partial(t12, Axis::X), d2t11 = fd_partial(t11, Axis::Y);
    const ScalarField d1t22 = fd_partial(t22, Axis::X), d2t12 = fd_partial(t12, Axis::Y);
    const CovectorField du = fd_gradient(log_factor);
    return ScalarField::generate(t.chart_ptr(), [&](std::size_t k) {
        const double tr = t[k].xx + t[k].yy;
        const double c1 = d1t12[k] - d2t11[k] + du[k].y * tr;
        const double c2 = d1t22[k] - d2t12[k] - du[k].x * tr;
        return std::sqrt(c1 * c1 + c2 * c2);
    });
}

ScalarField codazzi_residual(const SymTensor2Field& t, const ConformalMetric& g) {
    return codazzi_residual(t, g.flat_log_factor());
}

ScalarField self_adjoint_residual(const OperatorField& b, const SymTensor2Field& g) {
    return zip(b, g, [](const Mat2& m, const Sym2& s) {
        const Mat2 gb = Mat2::from(s) * m;
        return std::abs(gb.a12 - gb.a21);
    });
}

}  // namespace epsteinlab
