#include "epsteinlab/epstein.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace epsteinlab {

double EmbeddedSurface::model_residual() const {
    const ScalarField r = zip(x, normal, [](const MinkVec& p, const MinkVec& n) {
        return std::max({std::abs(mink_inner(p, p) + 1.0), std::abs(mink_inner(n, n) - 1.0),
                         std::abs(mink_inner(n, p))});
    });
    return sup_norm(r);
}

double EmbeddedSurface::tangency_residual(const Region& r) const {
    const MinkField t1 = fd_partial(x, Axis::X), t2 = fd_partial(x, Axis::Y);
    const ScalarField res = ScalarField::generate(chart_ptr(), [&](std::size_t k) {
        return std::max(std::abs(mink_inner(normal[k], t1[k])), std::abs(mink_inner(normal[k], t2[k])));
    });
    return sup_norm(res, r);
}

namespace {

// d(x)/dz_j from <dx, sigma> = 0, <dx, sigma_i> = -<x, sigma_ij>, <dx, x> = 0.
bool envelope_tangent(const MinkVec& x, const MinkVec& s, const MinkVec& s1, const MinkVec& s2, const MinkVec& s1j,
                      const MinkVec& s2j, MinkVec& out) {
    Eigen::Matrix4d m;
    Eigen::Vector4d rhs(0.0, -mink_inner(x, s1j), -mink_inner(x, s2j), 0.0);
    const MinkVec* rows[4] = {&s, &s1, &s2, &x};
    for (int r = 0; r < 4; ++r) {
        const MinkVec& v = *rows[r];
        m.row(r) << -v[0], v[1], v[2], v[3];
    }
    const Eigen::FullPivLU<Eigen::Matrix4d> lu(m);
    if (!lu.isInvertible()) return false;
    const Eigen::Vector4d t = lu.solve(rhs);
    out = {t(0), t(1), t(2), t(3)};
    return true;
}

}  // namespace

EmbeddedSurface epstein_surface(const ConformalMetric& h, const EpsteinOptions& opt) {
    const LightConeSection sec = LightConeSection::from_metric(h);
    const SymTensor2Field hess = fd_hessian_flat(sec.log_factor);
    const GridChart& base = h.u.chart();
    const MinkVec m0 = null_transversal();

    const std::size_t n = base.size();
    std::vector<MinkVec> xs(n, nan_value<MinkVec>()), t1(n, nan_value<MinkVec>()), t2(n, nan_value<MinkVec>());
    std::vector<std::size_t> singular;
    for (std::size_t k = 0; k < n; ++k) {
        if (!base.active(k)) continue;
        try {
            xs[k] = horosphere_solve(sec.sigma[k], sec.d1[k], sec.d2[k], 1).x;
        } catch (const DegenerateFrame&) {
            singular.push_back(k);
            continue;
        } catch (const NoRealRoot&) {
            singular.push_back(k);
            continue;
        }
        // Second derivatives of e^U l; l_xx = l_yy = m0 and l_xy = 0.
        const cplx z = base.z(k);
        const double e = std::exp(sec.log_factor[k]);
        const Vec2 g = sec.dlog[k];
        const MinkVec l = standard_null_section(z), lx = null_section_dx(z), ly = null_section_dy(z);
        const MinkVec s11 = e * ((hess[k].xx + g.x * g.x) * l + 2.0 * g.x * lx + m0);
        const MinkVec s12 = e * ((hess[k].xy + g.x * g.y) * l + g.x * ly + g.y * lx);
        const MinkVec s22 = e * ((hess[k].yy + g.y * g.y) * l + 2.0 * g.y * ly + m0);
        const bool ok = envelope_tangent(xs[k], sec.sigma[k], sec.d1[k], sec.d2[k], s11, s12, t1[k]) &&
                        envelope_tangent(xs[k], sec.sigma[k], sec.d1[k], sec.d2[k], s12, s22, t2[k]);
        if (!ok) {
            singular.push_back(k);
            continue;
        }
        // Cusps of the envelope: the tangent map degenerates relative to the
        // horosphere metric 2h.
        const double det = mink_inner(t1[k], t1[k]) * mink_inner(t2[k], t2[k]) -
                           mink_inner(t1[k], t2[k]) * mink_inner(t1[k], t2[k]);
        if (!(det > opt.singular_ratio * 4.0 * std::exp(4.0 * sec.log_factor[k]))) singular.push_back(k);
    }
    if (opt.strict && !singular.empty()) throw SingularEnvelope(singular);

    GridChart c = base.unwrapped();
    if (!singular.empty()) {
        std::vector<char> flag(n, 0);
        for (auto k : singular) flag[k] = 1;
        c = c.excluding([&](cplx z) {
            const long i = std::lround((z.real() - base.x0()) / base.dx());
            const long j = std::lround((z.imag() - base.y0()) / base.dy());
            return flag[base.index(static_cast<int>(i), static_cast<int>(j))] != 0;
        });
    }
    const ChartPtr chart = std::make_shared<const GridChart>(std::move(c));
    if (!chart->active_count()) throw SingularEnvelope(singular);

    EmbeddedSurface s;
    s.orientation = opt.orientation >= 0 ? 1 : -1;
    const double sgn = s.orientation;
    const double a = 1.0 / kIncidence;
    s.x = MinkField::generate(chart, [&](std::size_t k) { return xs[k]; });
    s.normal = MinkField::generate(chart, [&](std::size_t k) { return sgn * (a * sec.sigma[k] - xs[k]); });
    s.dx1 = MinkField::generate(chart, [&](std::size_t k) { return t1[k]; });
    s.dx2 = MinkField::generate(chart, [&](std::size_t k) { return t2[k]; });
    s.dn1 = MinkField::generate(chart, [&](std::size_t k) { return sgn * (a * sec.d1[k] - t1[k]); });
    s.dn2 = MinkField::generate(chart, [&](std::size_t k) { return sgn * (a * sec.d2[k] - t2[k]); });
    std::sort(singular.begin(), singular.end());
    s.singular = std::move(singular);
    return s;
}

SurfaceData fundamental_forms(const EmbeddedSurface& s) {
    const auto& chart = s.chart_ptr();
    const bool exact = s.has_tangents();
    const MinkField t1 = exact ? s.dx1 : fd_partial(s.x, Axis::X), t2 = exact ? s.dx2 : fd_partial(s.x, Axis::Y);
    const MinkField n1 = exact ? s.dn1 : fd_partial(s.normal, Axis::X);
    const MinkField n2 = exact ? s.dn2 : fd_partial(s.normal, Axis::Y);
    SurfaceData d;
    d.I = SymTensor2Field::generate(chart, [&](std::size_t k) {
        const Sym2 g{mink_inner(t1[k], t1[k]), mink_inner(t1[k], t2[k]), mink_inner(t2[k], t2[k])};
        if (!(g.det() > 1e-300) || !(g.xx > 0.0)) throw DegenerateSurface(k);
        return g;
    });
    d.II = SymTensor2Field::generate(chart, [&](std::size_t k) {
        return Sym2{mink_inner(n1[k], t1[k]), 0.5 * (mink_inner(n1[k], t2[k]) + mink_inner(n2[k], t1[k])),
                    mink_inner(n2[k], t2[k])};
    });
    d.asymmetry = ScalarField::generate(
        chart, [&](std::size_t k) { return std::abs(mink_inner(n1[k], t2[k]) - mink_inner(n2[k], t1[k])); });
    d.B = zip(d.II, d.I, [](const Sym2& ii, const Sym2& g) { return raise(g, ii); });
    d.III = SymTensor2Field::generate(chart, [&](std::size_t k) {
        return sym_part(Mat2::from(d.II[k]) * d.B[k]);
    });
    return d;
}

ComplexField hyperbolic_gauss_map(const EmbeddedSurface& s) {
    return zip(s.x, s.normal, [](const MinkVec& p, const MinkVec& n) { return boundary_point(p + n); });
}

double gauss_map_residual(const EmbeddedSurface& s, const Region& r) {
    const ComplexField g = hyperbolic_gauss_map(s);
    const auto& c = g.chart();
    const ComplexField diff = ComplexField::generate(g.chart_ptr(), [&](std::size_t k) { return g[k] - c.z(k); });
    return sup_norm(diff, r);
}

Mat2 shape_at_infinity(const Mat2& b) {
    const Mat2 e = Mat2::identity();
    const Mat2 p = e + b;
    if (std::abs(p.det()) < 1e-12) throw EigenvalueMinusOne(0);
    return p.inverse() * (e - b);
}

OperatorField shape_at_infinity(const OperatorField& b) {
    return OperatorField::generate(b.chart_ptr(), [&](std::size_t k) {
        try {
            return shape_at_infinity(b[k]);
        } catch (const EigenvalueMinusOne&) {
            throw EigenvalueMinusOne(k);
        }
    });
}

Mat2 b_from_bstar(const Mat2& bstar) {
    const Mat2 e = Mat2::identity();
    const Mat2 p = e + bstar;
    if (std::abs(p.det()) < 1e-12) throw SingularDictionary(0);
    return p.inverse() * (e - bstar);
}

OperatorField b_from_bstar(const OperatorField& bstar) {
    return OperatorField::generate(bstar.chart_ptr(), [&](std::size_t k) {
        try {
            return b_from_bstar(bstar[k]);
        } catch (const SingularDictionary&) {
            throw SingularDictionary(k);
        }
    });
}

InfinityData data_at_infinity(const SurfaceData& d) {
    InfinityData inf;
    inf.Istar = SymTensor2Field::generate(d.I.chart_ptr(), [&](std::size_t k) {
        return 0.5 * (d.I[k] + 2.0 * d.II[k] + d.III[k]);
    });
    check_positive_definite(inf.Istar);
    inf.IIstar = SymTensor2Field::generate(d.I.chart_ptr(), [&](std::size_t k) { return 0.5 * (d.I[k] - d.III[k]); });
    inf.Bstar = shape_at_infinity(d.B);
    return inf;
}

InfinityData infinity_data_from_pair(SymTensor2Field istar, SymTensor2Field iistar) {
    InfinityData inf;
    inf.Bstar = raise_field(iistar, istar);
    inf.Istar = std::move(istar);
    inf.IIstar = std::move(iistar);
    return inf;
}

TameReport htame_check(const SurfaceData& d, const Region& r) {
    TameReport t;
    t.margin = d.B.map([](const Mat2& b) {
        const Eigen2 e = real_eigenvalues(b);
        return 1.0 - std::max(std::abs(e.lo), std::abs(e.hi));
    });
    t.min_margin = std::numeric_limits<double>::infinity();
    const auto& c = d.B.chart();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!r.contains(c, k)) continue;
        const double m = t.margin[k];
        t.min_margin = std::isnan(m) ? -std::numeric_limits<double>::infinity() : std::min(t.min_margin, m);
    }
    t.tame = t.min_margin > 0.0;
    return t;
}

AdmissibilityResiduals admissibility_residuals(const InfinityData& inf, const Region& r) {
    const ScalarField w = inf.log_factor();
    AdmissibilityResiduals a;
    a.codazzi = sup_norm(codazzi_residual(inf.IIstar, w), r);
    const ScalarField k = gauss_curvature_of_factor(w);
    const ScalarField tr = metric_trace(inf.IIstar, inf.Istar);
    a.gauss = sup_norm(tr + k, r);
    return a;
}

SymTensor2Field equidistant_metric(const InfinityData& inf, double r) {
    const double ep = std::exp(2.0 * r), em = std::exp(-2.0 * r);
    SymTensor2Field out = SymTensor2Field::generate(inf.Istar.chart_ptr(), [&](std::size_t k) {
        const Sym2 iii = sym_part(Mat2::from(inf.IIstar[k]) * raise(inf.Istar[k], inf.IIstar[k]));
        return 0.5 * (ep * inf.Istar[k] + 2.0 * inf.IIstar[k] + em * iii);
    });
    check_positive_definite(out);
    return out;
}

}  // namespace epsteinlab
