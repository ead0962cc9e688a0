#include "epsteinlab/horocone.hpp"

#include "epsteinlab/schwarzian.hpp"

namespace epsteinlab {

SymTensor2Field cone_first_form(const MinkField& sigma) {
    const ChartPtr flat = std::make_shared<const GridChart>(sigma.chart().unwrapped());
    const MinkField s = rebase(sigma, flat);
    const MinkField t1 = fd_partial(s, Axis::X), t2 = fd_partial(s, Axis::Y);
    const SymTensor2Field g = SymTensor2Field::generate(flat, [&](std::size_t k) {
        return Sym2{mink_inner(t1[k], t1[k]), mink_inner(t1[k], t2[k]), mink_inner(t2[k], t2[k])};
    });
    return rebase(g, sigma.chart_ptr());
}

SymTensor2Field cone_second_form(const ConformalMetric& h) {
    const ScalarField big_u = h.flat_log_factor();
    const auto& c = big_u.chart();
    const ScalarField s = ScalarField::generate(big_u.chart_ptr(), [&](std::size_t k) {
        return base_log_factor(BaseKind::Spherical, c.z(k));
    });
    const ScalarField w = big_u - s;
    const SymTensor2Field bb = bbar_flat(s, w);
    return SymTensor2Field::generate(big_u.chart_ptr(), [&](std::size_t k) {
        return bb[k] + (0.5 * (std::exp(2.0 * w[k]) - 1.0) * std::exp(2.0 * s[k])) * Sym2::identity();
    });
}

SymTensor2Field cone_variation(const ScalarField& u_dot, const ScalarField& istar_c_log_factor) {
    const SymTensor2Field hess = hessian_conformal(istar_c_log_factor, u_dot);
    return SymTensor2Field::generate(u_dot.chart_ptr(), [&](std::size_t k) {
        return hess[k] + (u_dot[k] * std::exp(2.0 * istar_c_log_factor[k])) * Sym2::identity();
    });
}

namespace {

ConeSurfaceData finish(SymTensor2Field first, SymTensor2Field second) {
    ConeSurfaceData c;
    c.Bstar_c = raise_field(second, first);
    c.Istar_c = std::move(first);
    c.IIstar_c = std::move(second);
    return c;
}

}  // namespace

ConeSurfaceData cone_data_from_surface(const EmbeddedSurface& s) {
    const MinkField dual = s.x + s.normal;
    const MinkVec m0 = null_transversal();
    const ScalarField w = dual.map([&](const MinkVec& v) { return std::log(-mink_inner(v, m0)); });
    if (!s.has_tangents()) return finish(cone_first_form(dual), cone_second_form(ConformalMetric::flat(w)));
    const MinkField e1 = s.dx1 + s.dn1, e2 = s.dx2 + s.dn2;
    SymTensor2Field first = SymTensor2Field::generate(dual.chart_ptr(), [&](std::size_t k) {
        return Sym2{mink_inner(e1[k], e1[k]), mink_inner(e1[k], e2[k]), mink_inner(e2[k], e2[k])};
    });
    return finish(std::move(first), cone_second_form(ConformalMetric::flat(w)));
}

ConeSurfaceData cone_data_from_metric(const ConformalMetric& h) {
    const LightConeSection sec = LightConeSection::from_metric(h);
    return finish(cone_first_form(sec.sigma), cone_second_form(h));
}

DualityResiduals duality_check(const InfinityData& inf, const ConeSurfaceData& cone, const Region& r) {
    DualityResiduals d;
    const SymTensor2Field r1 =
        zip(cone.Istar_c, inf.Istar, [](const Sym2& c, const Sym2& i) { return c - 2.0 * i; });
    const SymTensor2Field r2 = SymTensor2Field::generate(inf.Istar.chart_ptr(), [&](std::size_t k) {
        return cone.IIstar_c[k] - inf.IIstar[k] - inf.Istar[k];
    });
    require_same_chart(cone.IIstar_c, inf.IIstar);
    d.first = sup_norm(r1, r);
    d.second = sup_norm(r2, r);
    return d;
}

double cone_gauss_residual(const ConeSurfaceData& cone, const Region& r) {
    const ScalarField k = gauss_curvature_of_factor(conformal_log_factor(cone.Istar_c));
    const ScalarField res = zip(k, cone.Bstar_c, [](double kk, const Mat2& b) { return kk - (1.0 - b.trace()); });
    return sup_norm(res, r);
}

double cone_conformal_change_residual(const ConformalMetric& h, const ScalarField& u, const Region& r) {
    const SymTensor2Field before = cone_second_form(h);
    const SymTensor2Field after = cone_second_form(ConformalMetric{h.base, h.u + u});
    const SymTensor2Field bb = bbar_tensor(h, u);
    const ScalarField big_u = h.flat_log_factor();
    const SymTensor2Field res = SymTensor2Field::generate(u.chart_ptr(), [&](std::size_t k) {
        const double g = std::exp(2.0 * big_u[k]);
        return after[k] - before[k] - bb[k] - (0.5 * (std::exp(2.0 * u[k]) - 1.0) * g) * Sym2::identity();
    });
    return sup_norm(res, r);
}

double epstein_conformal_change_residual(const ConformalMetric& h, const ScalarField& u, const Region& r) {
    const EpsteinOptions strict{1, true};
    const InfinityData before = data_at_infinity(fundamental_forms(epstein_surface(h, strict)));
    const InfinityData after =
        data_at_infinity(fundamental_forms(epstein_surface(ConformalMetric{h.base, h.u + u}, strict)));
    const SymTensor2Field bb = rebase(bbar_tensor(h, u), before.IIstar.chart_ptr());
    return sup_norm(after.IIstar - before.IIstar - bb, r);
}

UniformizedDomain uniformized_domain(const std::string& name, double h) {
    auto window = [h](double x0, double x1, double y0, double y1) {
        const int nx = static_cast<int>(std::lround((x1 - x0) / h)) + 1;
        const int ny = static_cast<int>(std::lround((y1 - y0) / h)) + 1;
        return std::make_shared<const GridChart>(nx, ny, x0, y0, h, h);
    };
    if (name == "disk-identity" || name == "disk") return {"disk-identity", identity_map(), window(-0.5, 0.5, -0.5, 0.5)};
    if (name == "strip") return {"strip", strip_uniformizer(), window(-0.5, 0.5, 0.6, M_PI - 0.6)};
    if (name == "half-plane") return {"half-plane", cayley_map(), window(-0.5, 0.5, 0.5, 1.5)};
    throw ConfigInvalid("unknown uniformized domain '" + name + "'");
}

SchwarzianAtInfinity schwarzian_at_infinity_check(const UniformizedDomain& d, int margin) {
    // phi^* of 4|dw|^2/(1-|w|^2)^2.
    const ScalarField u = ScalarField::sample(d.chart, [&](cplx z) {
        const Jet j = d.phi.jet(z);
        return std::log(2.0 * std::abs(j.d1) / (1.0 - std::norm(j.f)));
    });
    const EmbeddedSurface s = epstein_surface(ConformalMetric::flat(u));
    const InfinityData inf = data_at_infinity(fundamental_forms(s));
    const SymTensor2Field ii0 = traceless_part(inf.IIstar, inf.Istar);
    const SymTensor2Field q = rebase(schwarzian_derivative(d.phi, d.chart).real_part(), ii0.chart_ptr());
    const Region r = Region::inner(margin);
    SchwarzianAtInfinity out;
    out.residual = sup_norm(ii0 - q, r);
    out.reference = sup_norm(q, r);
    out.relative = out.residual / (out.reference > 1e-8 ? out.reference : 1.0);
    return out;
}

}  // namespace epsteinlab
